#include "svdim/terracini.hpp"

#include <algorithm>
#include <string>

#include "svdim/error.hpp"

namespace svdim {

namespace {

constexpr std::uint64_t kSecantStream = 0x5ec'a47;

std::int64_t expected_bound(const SegreVeroneseParams& params, int s) {
  return std::min<std::int64_t>(params.ambient_dimension(),
                                static_cast<std::int64_t>(s) * (params.n + params.m + 1) - 1);
}

}  // namespace

void SegreVeroneseParams::validate() const {
  if (n < 1 || m < 1) throw InvalidParameters("n and m must be at least 1");
  if (d < 1) throw InvalidParameters("d must be at least 1");
}

std::int64_t SegreVeroneseParams::coordinate_count() const {
  return static_cast<std::int64_t>(n + 1) * static_cast<std::int64_t>(binomial(m + d, d));
}

void SampleConfig::validate(int max_degree) const {
  if (trials < 1) throw InvalidParameters("trials must be at least 1");
  field.validate(max_degree);
}

std::vector<ExponentVector> segre_veronese_monomials(const SegreVeroneseParams& params) {
  const BiBasis basis = bihomogeneous_basis(params.n, params.m, 1, params.d);
  std::vector<ExponentVector> out;
  out.reserve(basis.size());
  for (const auto& mono : basis.monomials) out.push_back(mono.joined());
  return out;
}

std::size_t stacked_rank(const SegreVeroneseParams& params, std::span<const PointPair> points,
                         const FieldConfig& cfg, bool with_value_rows) {
  if (cfg.backend == Backend::exact_rational) {
    RationalField field;
    return rank(stacked_tangent_matrix(field, params, points, with_value_rows), field);
  }
  PrimeField field(cfg.modulus);
  return rank(stacked_tangent_matrix(field, params, points, with_value_rows), field);
}

PointPair random_point_pair(const SegreVeroneseParams& params, PointSampler& sampler) {
  PointPair pt;
  pt.p = sampler.nonzero_vector(static_cast<std::size_t>(params.n + 1));
  pt.q = sampler.nonzero_vector(static_cast<std::size_t>(params.m + 1));
  return pt;
}

std::vector<PointPair> trial_points(const SegreVeroneseParams& params, int s,
                                    const SampleConfig& cfg, int trial) {
  PointSampler sampler(
      derive_seed(cfg.seed, {kSecantStream, static_cast<std::uint64_t>(params.n),
                             static_cast<std::uint64_t>(params.m),
                             static_cast<std::uint64_t>(params.d),
                             static_cast<std::uint64_t>(trial)}),
      cfg.field.modulus);
  std::vector<PointPair> points;
  points.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) points.push_back(random_point_pair(params, sampler));
  return points;
}

SecantSample best_secant_sample(const SegreVeroneseParams& params, int s, const SampleConfig& cfg) {
  params.validate();
  cfg.validate(params.d);
  if (s < 0) throw InvalidParameters("s must be non-negative");
  SecantSample best;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto points = trial_points(params, s, cfg, trial);
    const std::size_t r = stacked_rank(params, points, cfg.field);
    if (trial == 0 || r > best.rank) best = SecantSample{r, trial, std::move(points)};
  }
  return best;
}

std::size_t secant_dimension(const SegreVeroneseParams& params, int s, const SampleConfig& cfg) {
  if (s < 1) throw InvalidParameters("s must be at least 1");
  const SecantSample best = best_secant_sample(params, s, cfg);
  const auto dim = static_cast<std::int64_t>(best.rank) - 1;
  if (dim > expected_bound(params, s)) {
    throw KernelError("secant dimension " + std::to_string(dim) + " exceeds its upper bound");
  }
  return static_cast<std::size_t>(dim);
}

std::size_t ideal_dim_bidegree(const SegreVeroneseParams& params, int s, const SampleConfig& cfg) {
  params.validate();
  const auto cols = static_cast<std::size_t>(params.coordinate_count());
  if (s == 0) return cols;
  return cols - best_secant_sample(params, s, cfg).rank;
}

}  // namespace svdim
