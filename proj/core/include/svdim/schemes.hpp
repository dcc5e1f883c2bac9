#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "svdim/field.hpp"
#include "svdim/matrix.hpp"
#include "svdim/monomials.hpp"
#include "svdim/sampling.hpp"
#include "svdim/terracini.hpp"

namespace svdim {

/// Standard frame of P^(n+m): coordinates a_0..a_{n-1}, b_0..b_m.
///   H1 = {b = 0}            (a P^(n-1); empty when n = 0)
///   H2 = {a = 0, b_0 = 0}   (a P^(m-1))
///   H  = {a_{n-1} = 0}      (the hyperplane used for residual/trace; needs n >= 1)
/// The trace on H of a frame (n, m, d) is again a standard frame (n-1, m, d)
/// once a_{n-1} is dropped.
struct SchemeFrame {
  int n = 1;
  int m = 1;
  int d = 1;

  int ambient() const { return n + m; }
  std::size_t coordinate_count() const { return static_cast<std::size_t>(n + m + 1); }
  void validate() const;

  friend auto operator<=>(const SchemeFrame&, const SchemeFrame&) = default;
};

struct SchemePoint {
  std::vector<std::int64_t> coords;
  bool on_h = false;

  friend bool operator==(const SchemePoint&, const SchemePoint&) = default;
};

enum class PointKind { double_point, simple_point };

/// V = <H1, P> for the referenced point P.
struct PointRef {
  PointKind kind = PointKind::double_point;
  std::size_t index = 0;

  friend auto operator<=>(const PointRef&, const PointRef&) = default;
};

/// A subscheme of P^(n+m) assembled from the components the dimension
/// arguments need. W and V spaces are spans <H1, anchor>.
struct SchemeSpec {
  SchemeFrame frame;
  std::vector<SchemePoint> double_points;
  std::vector<SchemePoint> simple_points;
  std::vector<std::vector<std::int64_t>> w_anchors;
  std::vector<PointRef> v_spans;
  int fat_h1 = 0;  ///< multiplicity c of the fat space cH1
  bool include_h2 = false;

  void validate() const;
  const SchemePoint& point(const PointRef& ref) const;

  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

struct ResidualTracePair {
  SchemeSpec residual;  ///< in P^(n+m), read at degree t-1
  int residual_degree = 0;
  SchemeSpec trace;  ///< in H = P^(n+m-1), read at degree t
  int trace_degree = 0;
};

struct ProjectionResult {
  SchemeSpec image;  ///< points in P^m (frame with n = 0)
  std::size_t image_dimension = 0;
  std::size_t residual_dimension = 0;
  bool equal = false;
};

struct DictionaryCheck {
  std::size_t lhs = 0;  ///< dim (I_Z)_(1,d) on P^n x P^m
  std::size_t rhs = 0;  ///< dim (I_{dH1+H2+2P_1+...+2P_s})_(d+1) on P^(n+m)
  bool equal = false;
};

/// Monomial basis of (I_{dH1+H2})_{d+1}: a_i * b^beta (i < n) and
/// b_0 * b^beta with |beta| = d. Size (n+1) C(m+d, d).
std::vector<ExponentVector> restricted_basis(int n, int m, int d);

/// Degree-t monomials of the frame lying in I_{cH1} (b-degree >= c) and,
/// when H2 is included, in I_{H2}. Monomial ideals intersect monomially, so
/// this is a basis of the degree-t piece of the ambient ideal.
std::vector<ExponentVector> scheme_basis(const SchemeSpec& spec, int degree);

/// n+m+1 rows: every basis monomial differentiated by each coordinate at the
/// point. The value row is implied by Euler and only added on request.
template <Field F>
Matrix<typename F::value_type> double_point_rows(const F& field,
                                                 std::span<const ExponentVector> basis,
                                                 std::span<const std::int64_t> point,
                                                 bool with_value_row = false);

template <Field F>
Matrix<typename F::value_type> simple_point_rows(const F& field,
                                                 std::span<const ExponentVector> basis,
                                                 std::span<const std::int64_t> point);

/// Conditions for a form to vanish on W = <H1, Q>. A point of W is
/// (mu + lambda q^a, lambda q^b); substituting and expanding gives one row per
/// monomial mu^gamma of the restriction. For the restricted basis these are
/// the n rows d/da_i at Q followed by the value row at Q.
/// Throws InvalidParameters when Q lies on H1 (q^b = 0).
template <Field F>
Matrix<typename F::value_type> w_space_rows(const F& field, const SchemeFrame& frame,
                                            std::span<const ExponentVector> basis,
                                            std::span<const std::int64_t> anchor);

/// All condition rows of the scheme against scheme_basis(spec, degree).
template <Field F>
Matrix<typename F::value_type> condition_matrix(const F& field, const SchemeSpec& spec,
                                                int degree);

std::size_t scheme_ideal_dimension(const SchemeSpec& spec, int degree, const FieldConfig& cfg);

/// Adds V_i = <H1, P_i> for every point. For a scheme containing dH1 these
/// spaces are in the base locus, so the ideal in degree d+1 is unchanged.
SchemeSpec add_v_spans(SchemeSpec spec);

/// Residual and trace with respect to H = {a_{n-1} = 0}. Points flagged
/// on_h must have a_{n-1} = 0. Rules:
///   double point on H  -> (simple point, double point of H)
///   double point off H -> (double point, nothing)
///   simple point on H  -> (nothing, simple point)
///   simple point off H -> (simple point, nothing)
///   dH1, W, V (not in H) -> (same, intersection with H)
///   H2 (inside H)      -> (nothing, H2)
ResidualTracePair residual_trace(const SchemeSpec& spec, int degree);

/// Projects a cone scheme (all degree-`degree` forms contain H1 with
/// multiplicity `degree`) from H1 to P^m and compares ideal dimensions.
ProjectionResult project_from_H1(const SchemeSpec& residual, int degree, const FieldConfig& cfg);

/// Draws a point of the frame, off H1, optionally on H.
std::vector<std::int64_t> random_frame_point(const SchemeFrame& frame, PointSampler& sampler,
                                             bool on_h = false);

/// dH1 + H2 + 2P_1 + ... + 2P_s + W_1 + ... + W_t with s = (n+1)q. With
/// `specialize`, the first nq points are drawn on H.
SchemeSpec theorem_scheme(const SchemeFrame& frame, int q, int t, PointSampler& sampler,
                          bool specialize = false);

/// dH1 + H2 + 2P_1 + ... + 2P_s.
SchemeSpec dictionary_scheme(const SchemeFrame& frame, int s, PointSampler& sampler);

/// dim (I)_d for q generic double points and r generic simple points in P^m,
/// minimized over trials.
std::size_t points_ideal_dimension(int m, int d, int q, int r, const SampleConfig& cfg);

/// Compares both sides of the bidegree / projective dictionary for s points.
DictionaryCheck verify_dictionary(const SegreVeroneseParams& params, int s,
                                  const SampleConfig& cfg);

std::string to_json(const SchemeSpec& spec);
SchemeSpec scheme_from_json(std::string_view text);

}  // namespace svdim
