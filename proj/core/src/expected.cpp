#include "svdim/expected.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "svdim/error.hpp"
#include "svdim/monomials.hpp"

namespace svdim {

std::int64_t expected_secant_dim(const SegreVeroneseParams& params, int s) {
  params.validate();
  if (s < 1) throw InvalidParameters("s must be at least 1");
  return std::min<std::int64_t>(params.ambient_dimension(),
                                static_cast<std::int64_t>(s) * (params.n + params.m + 1) - 1);
}

Thresholds thresholds(const SegreVeroneseParams& params) {
  params.validate();
  const std::int64_t step = params.n + 1;
  const std::int64_t numerator = params.coordinate_count();
  const std::int64_t denominator = params.n + params.m + 1;
  const std::int64_t floor_value = numerator / denominator;
  const std::int64_t ceil_value = (numerator + denominator - 1) / denominator;

  Thresholds out;
  out.s1 = static_cast<int>(floor_value / step * step);
  out.s2 = static_cast<int>((ceil_value + step - 1) / step * step);
  out.divisible = static_cast<std::int64_t>(binomial(params.m + params.d, params.d)) % denominator == 0;
  out.uncovered = std::max(out.s2 - out.s1 - 1, 0);
  return out;
}

std::int64_t theorem_t1_expected(const SegreVeroneseParams& params, int q, int t) {
  params.validate();
  if (q < 0 || t < 0) throw InvalidParameters("q and t must be non-negative");
  const std::int64_t s = static_cast<std::int64_t>(params.n + 1) * q;
  const std::int64_t value = params.coordinate_count() - s * (params.n + params.m + 1) -
                             static_cast<std::int64_t>(t) * (params.n + 1);
  return std::max<std::int64_t>(value, 0);
}

std::int64_t ah_expected(int m, int d, int q, int r) {
  if (m < 1 || d < 1) throw InvalidParameters("ah_expected needs m, d >= 1");
  if (q < 0 || r < 0) throw InvalidParameters("point counts must be non-negative");
  const std::int64_t value = static_cast<std::int64_t>(binomial(m + d, d)) -
                             static_cast<std::int64_t>(q) * (m + 1) - r;
  return std::max<std::int64_t>(value, 0);
}

AhVerdict ah_is_exceptional(int m, int d, int q, int r) {
  AhVerdict out;
  out.expected = ah_expected(m, d, q, r);
  out.actual = out.expected;

  if (d == 2 && q >= 2 && q <= m) {
    const std::int64_t free_quadrics = static_cast<std::int64_t>(binomial(m - q + 2, 2));
    out.actual = std::max<std::int64_t>(free_quadrics - r, 0);
    out.exceptional = out.actual != out.expected;
    return out;
  }
  if (r == 0) {
    struct Sporadic {
      int m, d, q;
    };
    constexpr std::array<Sporadic, 4> kSporadic{{{2, 4, 5}, {3, 4, 9}, {4, 3, 7}, {4, 4, 14}}};
    for (const auto& c : kSporadic) {
      if (c.m == m && c.d == d && c.q == q) {
        out.exceptional = true;
        out.actual = out.expected + 1;
      }
    }
  }
  return out;
}

DefectRecord defect(const SegreVeroneseParams& params, int s, std::int64_t computed) {
  DefectRecord out;
  out.expected = expected_secant_dim(params, s);
  out.computed = computed;
  out.defect = out.expected - computed;
  if (out.defect < 0) {
    throw KernelError("computed dimension " + std::to_string(computed) + " exceeds expected " +
                      std::to_string(out.expected));
  }
  return out;
}

}  // namespace svdim
