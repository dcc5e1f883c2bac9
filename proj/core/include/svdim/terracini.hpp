#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "svdim/field.hpp"
#include "svdim/linalg.hpp"
#include "svdim/matrix.hpp"
#include "svdim/monomials.hpp"
#include "svdim/sampling.hpp"

namespace svdim {

/// The Segre-Veronese variety of P^n x P^m embedded by O(1, d).
struct SegreVeroneseParams {
  int n = 1;
  int m = 1;
  int d = 1;

  void validate() const;
  /// Number of coordinates of the embedding, (n+1) C(m+d, d) = N + 1.
  std::int64_t coordinate_count() const;
  /// N, the dimension of the ambient projective space.
  std::int64_t ambient_dimension() const { return coordinate_count() - 1; }
  int variety_dimension() const { return n + m; }

  friend auto operator<=>(const SegreVeroneseParams&, const SegreVeroneseParams&) = default;
};

/// A point of P^n x P^m in integer (residue) coordinates.
struct PointPair {
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> q;

  friend bool operator==(const PointPair&, const PointPair&) = default;
};

struct SampleConfig {
  std::uint64_t seed = 1;
  int trials = 2;
  FieldConfig field;

  void validate(int max_degree) const;
};

/// Joined exponent vectors of the bidegree (1, d) basis.
std::vector<ExponentVector> segre_veronese_monomials(const SegreVeroneseParams& params);

/// Rows are the first partials (x_0..x_n, then y_0..y_m) of every (1, d)
/// monomial at each point, one block of n+m+2 rows per point. With
/// `with_value_rows` each block also gets the plain evaluation row.
template <Field F>
Matrix<typename F::value_type> stacked_tangent_matrix(const F& field,
                                                      const SegreVeroneseParams& params,
                                                      std::span<const PointPair> points,
                                                      bool with_value_rows = false) {
  using T = typename F::value_type;
  const auto basis = segre_veronese_monomials(params);
  const std::size_t nvars = static_cast<std::size_t>(params.n + params.m + 2);
  Matrix<T> out(basis.size());
  std::vector<T> row(basis.size());
  for (const PointPair& pt : points) {
    std::vector<std::int64_t> joined = pt.p;
    joined.insert(joined.end(), pt.q.begin(), pt.q.end());
    if (joined.size() != nvars) throw InvalidParameters("point pair has wrong coordinate count");
    const auto values = to_field_point(std::span<const std::int64_t>(joined), field);
    const std::span<const T> at(values);
    for (std::size_t var = 0; var < nvars; ++var) {
      for (std::size_t c = 0; c < basis.size(); ++c) row[c] = partial_eval(basis[c], var, at, field);
      out.append_row(row);
    }
    if (with_value_rows) {
      for (std::size_t c = 0; c < basis.size(); ++c) row[c] = evaluate(basis[c], at, field);
      out.append_row(row);
    }
  }
  return out;
}

/// The (n+m+2) x (N+1) block of one point.
template <Field F>
Matrix<typename F::value_type> tangent_block(const F& field, const SegreVeroneseParams& params,
                                             const PointPair& pt, bool with_value_row = false) {
  return stacked_tangent_matrix(field, params, std::span<const PointPair>(&pt, 1), with_value_row);
}

std::size_t stacked_rank(const SegreVeroneseParams& params, std::span<const PointPair> points,
                         const FieldConfig& cfg, bool with_value_rows = false);

PointPair random_point_pair(const SegreVeroneseParams& params, PointSampler& sampler);

/// Points drawn for one trial. The stream depends on (seed, n, m, d, trial)
/// but not on s, so the points for s are a prefix of those for s+1.
std::vector<PointPair> trial_points(const SegreVeroneseParams& params, int s,
                                    const SampleConfig& cfg, int trial);

struct SecantSample {
  std::size_t rank = 0;
  int trial = 0;
  std::vector<PointPair> points;
};

/// Best (highest-rank) trial; ties go to the earliest trial.
SecantSample best_secant_sample(const SegreVeroneseParams& params, int s, const SampleConfig& cfg);

/// dim sigma_s(X) as max over trials of (stacked rank - 1).
std::size_t secant_dimension(const SegreVeroneseParams& params, int s, const SampleConfig& cfg);

/// dim (I_Z)_(1,d) for s sampled double points: basis size minus the best rank.
std::size_t ideal_dim_bidegree(const SegreVeroneseParams& params, int s, const SampleConfig& cfg);

}  // namespace svdim
