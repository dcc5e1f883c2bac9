#include "svdim/schemes.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "svdim/error.hpp"
#include "svdim/linalg.hpp"

namespace svdim {

namespace {

constexpr std::uint64_t kDictionaryStream = 0xd1c7;
constexpr std::uint64_t kPointsStream = 0xa407;

bool b_part_is_zero(const SchemeFrame& frame, std::span<const std::int64_t> coords) {
  return std::all_of(coords.begin() + frame.n, coords.end(), [](std::int64_t c) { return c == 0; });
}

void check_point(const SchemeFrame& frame, const SchemePoint& pt) {
  if (pt.coords.size() != frame.coordinate_count()) {
    throw InvalidParameters("scheme point has " + std::to_string(pt.coords.size()) +
                            " coordinates, frame needs " + std::to_string(frame.coordinate_count()));
  }
  if (std::all_of(pt.coords.begin(), pt.coords.end(), [](std::int64_t c) { return c == 0; })) {
    throw InvalidParameters("scheme point is the zero vector");
  }
  if (pt.on_h && (frame.n < 1 || pt.coords[static_cast<std::size_t>(frame.n - 1)] != 0)) {
    throw InvalidParameters("point flagged on H has a_{n-1} != 0");
  }
}

void check_anchor(const SchemeFrame& frame, std::span<const std::int64_t> anchor) {
  if (anchor.size() != frame.coordinate_count()) {
    throw InvalidParameters("span anchor has wrong coordinate count");
  }
  if (b_part_is_zero(frame, anchor)) {
    throw InvalidParameters("span anchor lies on H1; <H1, Q> would degenerate");
  }
}

bool lies_on_h(const SchemeFrame& frame, const SchemePoint& pt) {
  return frame.n >= 1 && pt.coords[static_cast<std::size_t>(frame.n - 1)] == 0;
}

std::vector<std::int64_t> drop_coordinate(std::span<const std::int64_t> coords, std::size_t index) {
  std::vector<std::int64_t> out(coords.begin(), coords.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

std::vector<std::int64_t> b_part(const SchemeFrame& frame, std::span<const std::int64_t> coords) {
  return {coords.begin() + frame.n, coords.end()};
}

// Calls fn(gamma, coefficient_exponent_choice) for every gamma <= alpha.
template <class Fn>
void for_each_submonomial(const ExponentVector& alpha, ExponentVector& gamma, std::size_t var,
                          Fn&& fn) {
  if (var == alpha.size()) {
    fn(gamma);
    return;
  }
  for (int g = 0; g <= alpha[var]; ++g) {
    gamma[var] = g;
    for_each_submonomial(alpha, gamma, var + 1, fn);
  }
}

}  // namespace

void SchemeFrame::validate() const {
  if (n < 0) throw InvalidParameters("frame n must be non-negative");
  if (m < 1) throw InvalidParameters("frame m must be at least 1");
  if (d < 1) throw InvalidParameters("frame d must be at least 1");
}

void SchemeSpec::validate() const {
  frame.validate();
  if (fat_h1 < 0) throw InvalidParameters("fat H1 multiplicity must be non-negative");
  for (const auto& pt : double_points) check_point(frame, pt);
  for (const auto& pt : simple_points) check_point(frame, pt);
  for (const auto& anchor : w_anchors) check_anchor(frame, anchor);
  for (const auto& ref : v_spans) check_anchor(frame, point(ref).coords);
}

const SchemePoint& SchemeSpec::point(const PointRef& ref) const {
  const auto& list = ref.kind == PointKind::double_point ? double_points : simple_points;
  if (ref.index >= list.size()) throw InvalidParameters("V-span refers to a missing point");
  return list[ref.index];
}

std::vector<ExponentVector> restricted_basis(int n, int m, int d) {
  if (n < 0 || m < 1 || d < 1) throw InvalidParameters("restricted basis needs n >= 0, m, d >= 1");
  SchemeSpec spec;
  spec.frame = {n, m, d};
  spec.fat_h1 = d;
  spec.include_h2 = true;
  return scheme_basis(spec, d + 1);
}

std::vector<ExponentVector> scheme_basis(const SchemeSpec& spec, int degree) {
  const int n = spec.frame.n;
  const GradedBasis all = graded_basis(spec.frame.n + spec.frame.m + 1, degree);
  std::vector<ExponentVector> out;
  for (const auto& mono : all.monomials) {
    int a_degree = 0;
    for (int i = 0; i < n; ++i) a_degree += mono[static_cast<std::size_t>(i)];
    if (degree - a_degree < spec.fat_h1) continue;
    if (spec.include_h2 && a_degree == 0 && mono[static_cast<std::size_t>(n)] == 0) continue;
    out.push_back(mono);
  }
  return out;
}

template <Field F>
Matrix<typename F::value_type> double_point_rows(const F& field,
                                                 std::span<const ExponentVector> basis,
                                                 std::span<const std::int64_t> point,
                                                 bool with_value_row) {
  using T = typename F::value_type;
  const auto values = to_field_point(point, field);
  const std::span<const T> at(values);
  Matrix<T> out(basis.size());
  std::vector<T> row(basis.size());
  for (std::size_t var = 0; var < point.size(); ++var) {
    for (std::size_t c = 0; c < basis.size(); ++c) row[c] = partial_eval(basis[c], var, at, field);
    out.append_row(row);
  }
  if (with_value_row) {
    for (std::size_t c = 0; c < basis.size(); ++c) row[c] = evaluate(basis[c], at, field);
    out.append_row(row);
  }
  return out;
}

template <Field F>
Matrix<typename F::value_type> simple_point_rows(const F& field,
                                                 std::span<const ExponentVector> basis,
                                                 std::span<const std::int64_t> point) {
  using T = typename F::value_type;
  const auto values = to_field_point(point, field);
  const std::span<const T> at(values);
  Matrix<T> out(basis.size());
  std::vector<T> row(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) row[c] = evaluate(basis[c], at, field);
  out.append_row(row);
  return out;
}

template <Field F>
Matrix<typename F::value_type> w_space_rows(const F& field, const SchemeFrame& frame,
                                            std::span<const ExponentVector> basis,
                                            std::span<const std::int64_t> anchor) {
  using T = typename F::value_type;
  check_anchor(frame, anchor);
  const auto n = static_cast<std::size_t>(frame.n);
  const auto q = to_field_point(anchor, field);

  int max_a_degree = 0;
  for (const auto& mono : basis) {
    max_a_degree = std::max(max_a_degree, total_degree(ExponentVector(mono.begin(), mono.begin() + frame.n)));
  }

  // Row order: mu-monomials of highest degree first, lex within a degree; for
  // the restricted basis this is d/da_0, ..., d/da_{n-1}, then the value row.
  std::map<ExponentVector, std::size_t> row_of;
  std::size_t row_count = 0;
  if (n == 0) {
    row_of[ExponentVector{}] = row_count++;
  } else {
    for (int k = max_a_degree; k >= 0; --k) {
      for (const auto& gamma : graded_basis(frame.n, k).monomials) row_of[gamma] = row_count++;
    }
  }

  Matrix<T> out(row_count, basis.size(), field.zero());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto& mono = basis[c];
    auto b_value = field.one();
    for (std::size_t v = n; v < mono.size(); ++v) b_value = field.mul(b_value, power(field, q[v], mono[v]));
    const ExponentVector alpha(mono.begin(), mono.begin() + frame.n);
    ExponentVector gamma(n, 0);
    for_each_submonomial(alpha, gamma, 0, [&](const ExponentVector& g) {
      auto coeff = b_value;
      for (std::size_t i = 0; i < n; ++i) {
        coeff = field.mul(coeff, field.from_int(static_cast<std::int64_t>(binomial(alpha[i], g[i]))));
        coeff = field.mul(coeff, power(field, q[i], alpha[i] - g[i]));
      }
      auto& slot = out(row_of.at(g), c);
      slot = field.add(slot, coeff);
    });
  }
  return out;
}

template <Field F>
Matrix<typename F::value_type> condition_matrix(const F& field, const SchemeSpec& spec,
                                                int degree) {
  spec.validate();
  if (degree < 0) throw InvalidParameters("degree must be non-negative");
  const auto basis = scheme_basis(spec, degree);
  const std::span<const ExponentVector> b(basis);
  Matrix<typename F::value_type> out(basis.size());
  for (const auto& pt : spec.double_points) out.append(double_point_rows(field, b, std::span<const std::int64_t>(pt.coords)));
  for (const auto& pt : spec.simple_points) out.append(simple_point_rows(field, b, std::span<const std::int64_t>(pt.coords)));
  for (const auto& anchor : spec.w_anchors) out.append(w_space_rows(field, spec.frame, b, std::span<const std::int64_t>(anchor)));
  for (const auto& ref : spec.v_spans) {
    out.append(w_space_rows(field, spec.frame, b, std::span<const std::int64_t>(spec.point(ref).coords)));
  }
  return out;
}

#define SVDIM_INSTANTIATE(F)                                                                         \
  template Matrix<F::value_type> double_point_rows<F>(const F&, std::span<const ExponentVector>,    \
                                                      std::span<const std::int64_t>, bool);         \
  template Matrix<F::value_type> simple_point_rows<F>(const F&, std::span<const ExponentVector>,    \
                                                      std::span<const std::int64_t>);               \
  template Matrix<F::value_type> w_space_rows<F>(const F&, const SchemeFrame&,                      \
                                                 std::span<const ExponentVector>,                   \
                                                 std::span<const std::int64_t>);                    \
  template Matrix<F::value_type> condition_matrix<F>(const F&, const SchemeSpec&, int);

SVDIM_INSTANTIATE(PrimeField)
SVDIM_INSTANTIATE(RationalField)

#undef SVDIM_INSTANTIATE

std::size_t scheme_ideal_dimension(const SchemeSpec& spec, int degree, const FieldConfig& cfg) {
  if (cfg.backend == Backend::exact_rational) {
    RationalField field;
    return ideal_dimension(condition_matrix(field, spec, degree), field);
  }
  PrimeField field(cfg.modulus);
  return ideal_dimension(condition_matrix(field, spec, degree), field);
}

SchemeSpec add_v_spans(SchemeSpec spec) {
  for (std::size_t i = 0; i < spec.double_points.size(); ++i) {
    const PointRef ref{PointKind::double_point, i};
    if (std::find(spec.v_spans.begin(), spec.v_spans.end(), ref) == spec.v_spans.end()) spec.v_spans.push_back(ref);
  }
  for (std::size_t i = 0; i < spec.simple_points.size(); ++i) {
    const PointRef ref{PointKind::simple_point, i};
    if (std::find(spec.v_spans.begin(), spec.v_spans.end(), ref) == spec.v_spans.end()) spec.v_spans.push_back(ref);
  }
  return spec;
}

ResidualTracePair residual_trace(const SchemeSpec& spec, int degree) {
  spec.validate();
  const SchemeFrame& frame = spec.frame;
  if (frame.n < 1) throw InvalidParameters("residual/trace needs n >= 1 so that H1 is not inside H");
  if (degree < 1) throw InvalidParameters("residual/trace needs degree >= 1");
  const auto h_index = static_cast<std::size_t>(frame.n - 1);

  ResidualTracePair out;
  out.residual_degree = degree - 1;
  out.trace_degree = degree;

  SchemeSpec& res = out.residual;
  res.frame = frame;
  res.fat_h1 = spec.fat_h1;
  res.include_h2 = false;  // H2 lies in H

  SchemeSpec& tr = out.trace;
  tr.frame = {frame.n - 1, frame.m, frame.d};
  tr.fat_h1 = spec.fat_h1;
  tr.include_h2 = spec.include_h2;

  // Where each original point lands on either side, if anywhere.
  std::map<PointRef, PointRef> res_ref;
  std::map<PointRef, PointRef> tr_ref;

  for (std::size_t i = 0; i < spec.double_points.size(); ++i) {
    const SchemePoint& pt = spec.double_points[i];
    const bool on = lies_on_h(frame, pt);
    if (on != pt.on_h) throw InvalidParameters("double point on-H flag disagrees with its coordinates");
    const PointRef from{PointKind::double_point, i};
    if (on) {
      res_ref[from] = {PointKind::simple_point, res.simple_points.size()};
      res.simple_points.push_back(pt);
      tr_ref[from] = {PointKind::double_point, tr.double_points.size()};
      tr.double_points.push_back({drop_coordinate(pt.coords, h_index), false});
    } else {
      res_ref[from] = {PointKind::double_point, res.double_points.size()};
      res.double_points.push_back(pt);
    }
  }
  for (std::size_t i = 0; i < spec.simple_points.size(); ++i) {
    const SchemePoint& pt = spec.simple_points[i];
    const bool on = lies_on_h(frame, pt);
    if (on != pt.on_h) throw InvalidParameters("simple point on-H flag disagrees with its coordinates");
    const PointRef from{PointKind::simple_point, i};
    if (on) {
      tr_ref[from] = {PointKind::simple_point, tr.simple_points.size()};
      tr.simple_points.push_back({drop_coordinate(pt.coords, h_index), false});
    } else {
      res_ref[from] = {PointKind::simple_point, res.simple_points.size()};
      res.simple_points.push_back(pt);
    }
  }

  // W = <H1, Q> is never inside H: residual keeps it, trace gets
  // W cap H = <H1 cap H, Q'> with Q' = Q minus its a_{n-1} coordinate.
  for (const auto& anchor : spec.w_anchors) {
    res.w_anchors.push_back(anchor);
    tr.w_anchors.push_back(drop_coordinate(anchor, h_index));
  }
  for (const auto& ref : spec.v_spans) {
    const auto& anchor = spec.point(ref).coords;
    if (auto it = res_ref.find(ref); it != res_ref.end()) {
      res.v_spans.push_back(it->second);
    } else {
      res.w_anchors.push_back(anchor);
    }
    if (auto it = tr_ref.find(ref); it != tr_ref.end()) {
      tr.v_spans.push_back(it->second);
    } else {
      tr.w_anchors.push_back(drop_coordinate(anchor, h_index));
    }
  }
  return out;
}

ProjectionResult project_from_H1(const SchemeSpec& residual, int degree, const FieldConfig& cfg) {
  residual.validate();
  if (residual.fat_h1 < degree || residual.include_h2) {
    throw InvalidParameters("projection from H1 needs a cone scheme: fat H1 of multiplicity >= degree and no H2");
  }
  const SchemeFrame& frame = residual.frame;
  ProjectionResult out;
  out.image.frame = {0, frame.m, frame.d};
  auto image_of = [&](std::span<const std::int64_t> coords) {
    if (b_part_is_zero(frame, coords)) throw InvalidParameters("cannot project a point of H1 from H1");
    return b_part(frame, coords);
  };
  for (const auto& pt : residual.double_points) out.image.double_points.push_back({image_of(pt.coords), false});
  for (const auto& pt : residual.simple_points) out.image.simple_points.push_back({image_of(pt.coords), false});
  for (const auto& anchor : residual.w_anchors) out.image.simple_points.push_back({image_of(anchor), false});
  // V spans project onto the image of their own point, already present.

  out.image_dimension = scheme_ideal_dimension(out.image, degree, cfg);
  out.residual_dimension = scheme_ideal_dimension(residual, degree, cfg);
  out.equal = out.image_dimension == out.residual_dimension;
  return out;
}

std::vector<std::int64_t> random_frame_point(const SchemeFrame& frame, PointSampler& sampler,
                                             bool on_h) {
  if (on_h && frame.n < 1) throw InvalidParameters("frame with n = 0 has no hyperplane H");
  for (;;) {
    auto coords = sampler.nonzero_vector(frame.coordinate_count());
    if (frame.n >= 1) {
      auto& h_coord = coords[static_cast<std::size_t>(frame.n - 1)];
      if (on_h) {
        h_coord = 0;
      } else if (h_coord == 0) {
        continue;
      }
    }
    if (!b_part_is_zero(frame, coords)) return coords;
  }
}

SchemeSpec theorem_scheme(const SchemeFrame& frame, int q, int t, PointSampler& sampler,
                          bool specialize) {
  frame.validate();
  if (q < 0 || t < 0) throw InvalidParameters("q and t must be non-negative");
  if (specialize && frame.n < 1) throw InvalidParameters("specialization needs n >= 1");
  SchemeSpec spec;
  spec.frame = frame;
  spec.fat_h1 = frame.d;
  spec.include_h2 = true;
  const int s = (frame.n + 1) * q;
  const int on_h_count = specialize ? frame.n * q : 0;
  for (int i = 0; i < s; ++i) {
    const bool on_h = i < on_h_count;
    spec.double_points.push_back({random_frame_point(frame, sampler, on_h), on_h});
  }
  for (int i = 0; i < t; ++i) spec.w_anchors.push_back(random_frame_point(frame, sampler));
  return spec;
}

SchemeSpec dictionary_scheme(const SchemeFrame& frame, int s, PointSampler& sampler) {
  frame.validate();
  if (s < 0) throw InvalidParameters("s must be non-negative");
  SchemeSpec spec;
  spec.frame = frame;
  spec.fat_h1 = frame.d;
  spec.include_h2 = true;
  for (int i = 0; i < s; ++i) spec.double_points.push_back({random_frame_point(frame, sampler), false});
  return spec;
}

std::size_t points_ideal_dimension(int m, int d, int q, int r, const SampleConfig& cfg) {
  cfg.validate(d);
  const SchemeFrame frame{0, m, d};
  frame.validate();
  if (q < 0 || r < 0) throw InvalidParameters("point counts must be non-negative");
  std::size_t best = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    PointSampler sampler(derive_seed(cfg.seed, {kPointsStream, static_cast<std::uint64_t>(m),
                                                static_cast<std::uint64_t>(d),
                                                static_cast<std::uint64_t>(trial)}),
                         cfg.field.modulus);
    SchemeSpec spec;
    spec.frame = frame;
    for (int i = 0; i < q; ++i) spec.double_points.push_back({random_frame_point(frame, sampler), false});
    for (int i = 0; i < r; ++i) spec.simple_points.push_back({random_frame_point(frame, sampler), false});
    const std::size_t dim = scheme_ideal_dimension(spec, d, cfg.field);
    best = trial == 0 ? dim : std::min(best, dim);
  }
  return best;
}

DictionaryCheck verify_dictionary(const SegreVeroneseParams& params, int s,
                                  const SampleConfig& cfg) {
  params.validate();
  cfg.validate(params.d + 1);
  if (s < 0) throw InvalidParameters("s must be non-negative");
  DictionaryCheck out;
  out.lhs = ideal_dim_bidegree(params, s, cfg);
  const SchemeFrame frame{params.n, params.m, params.d};
  for (int trial = 0; trial < cfg.trials; ++trial) {
    PointSampler sampler(derive_seed(cfg.seed, {kDictionaryStream, static_cast<std::uint64_t>(params.n),
                                                static_cast<std::uint64_t>(params.m),
                                                static_cast<std::uint64_t>(params.d),
                                                static_cast<std::uint64_t>(trial)}),
                         cfg.field.modulus);
    const std::size_t dim = scheme_ideal_dimension(dictionary_scheme(frame, s, sampler), params.d + 1, cfg.field);
    out.rhs = trial == 0 ? dim : std::min(out.rhs, dim);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace svdim
