#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "svdim/field.hpp"

namespace svdim {

/// Dense exponent vector, one entry per variable.
using ExponentVector = std::vector<int>;

std::uint64_t binomial(int n, int k);

int total_degree(const ExponentVector& e);

/// All degree-t monomials in nvars variables, in descending lexicographic
/// order (x0^t first).
struct GradedBasis {
  int nvars = 0;
  int degree = 0;
  std::vector<ExponentVector> monomials;

  std::size_t size() const { return monomials.size(); }
};

/// A bihomogeneous monomial: x-part on P^n, y-part on P^m.
struct BiMonomial {
  ExponentVector x;
  ExponentVector y;

  /// Exponents over the concatenated variables (x_0..x_n, y_0..y_m).
  ExponentVector joined() const;
  friend bool operator==(const BiMonomial&, const BiMonomial&) = default;
};

/// Monomials of bidegree (a, b), ordered lexicographically on (x-part, y-part).
struct BiBasis {
  int n = 0;
  int m = 0;
  int a = 0;
  int b = 0;
  std::vector<BiMonomial> monomials;

  std::size_t size() const { return monomials.size(); }
};

GradedBasis graded_basis(int nvars, int degree);
BiBasis bihomogeneous_basis(int n, int m, int a, int b);

template <Field F>
typename F::value_type power(const F& field, typename F::value_type base, int exp) {
  auto out = field.one();
  for (int i = 0; i < exp; ++i) out = field.mul(out, base);
  return out;
}

/// Value of the monomial at `point`.
template <Field F>
typename F::value_type evaluate(const ExponentVector& mono,
                                std::span<const typename F::value_type> point, const F& field) {
  auto out = field.one();
  for (std::size_t v = 0; v < mono.size(); ++v) {
    if (mono[v] > 0) out = field.mul(out, power(field, point[v], mono[v]));
  }
  return out;
}

/// d(mono)/d(x_var) evaluated at `point`; zero when the variable is absent.
template <Field F>
typename F::value_type partial_eval(const ExponentVector& mono, std::size_t var,
                                    std::span<const typename F::value_type> point,
                                    const F& field) {
  if (mono[var] == 0) return field.zero();
  auto out = field.from_int(mono[var]);
  for (std::size_t v = 0; v < mono.size(); ++v) {
    const int e = v == var ? mono[v] - 1 : mono[v];
    if (e > 0) out = field.mul(out, power(field, point[v], e));
  }
  return out;
}

/// Converts integer coordinates into field elements.
template <Field F>
std::vector<typename F::value_type> to_field_point(std::span<const std::int64_t> coords,
                                                   const F& field) {
  std::vector<typename F::value_type> out;
  out.reserve(coords.size());
  for (std::int64_t c : coords) out.push_back(field.from_int(c));
  return out;
}

}  // namespace svdim
