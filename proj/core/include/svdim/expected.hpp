#pragma once

#include <cstdint>

#include "svdim/terracini.hpp"

namespace svdim {

/// min{N, s(dim X + 1) - 1}.
std::int64_t expected_secant_dim(const SegreVeroneseParams& params, int s);

/// The multiples of n+1 bracketing (n+1) C(m+d,d) / (m+n+1).
struct Thresholds {
  int s1 = 0;
  int s2 = 0;
  bool divisible = false;  ///< C(m+d, d) is a multiple of m+n+1
  int uncovered = 0;       ///< |{s : s1 < s < s2}|

  int gap() const { return s2 - s1; }
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

Thresholds thresholds(const SegreVeroneseParams& params);

/// max{(n+1) C(m+d,d) - s(n+m+1) - t(n+1), 0} with s = (n+1) q.
std::int64_t theorem_t1_expected(const SegreVeroneseParams& params, int q, int t);

/// Expected dim of degree-d forms on P^m through q double and r simple
/// generic points: max{C(m+d,d) - q(m+1) - r, 0}.
std::int64_t ah_expected(int m, int d, int q, int r);

struct AhVerdict {
  bool exceptional = false;
  std::int64_t expected = 0;
  std::int64_t actual = 0;  ///< equals expected when not exceptional
};

/// Known exceptions to the expected count for double points. For d = 2 and
/// 2 <= q <= m the quadrics are singular along the span of the q points, so
/// they are quadrics in m - q + 1 variables through the r projected simple
/// points. For d >= 3 only the four sporadic cases with r = 0 are special.
AhVerdict ah_is_exceptional(int m, int d, int q, int r);

struct DefectRecord {
  std::int64_t expected = 0;
  std::int64_t computed = 0;
  std::int64_t defect = 0;
};

/// Throws KernelError when computed exceeds the expected dimension, which a
/// correct rank can never do.
DefectRecord defect(const SegreVeroneseParams& params, int s, std::int64_t computed);

}  // namespace svdim
