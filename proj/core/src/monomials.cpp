#include "svdim/monomials.hpp"

#include <numeric>

#include "svdim/error.hpp"

namespace svdim {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

ExponentVector BiMonomial::joined() const {
  ExponentVector out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

namespace {

void enumerate(int var, int remaining, ExponentVector& current, std::vector<ExponentVector>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (var == last) {
    current[var] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
}

}  // namespace

GradedBasis graded_basis(int nvars, int degree) {
  if (nvars < 1) throw InvalidParameters("graded basis needs at least one variable");
  if (degree < 0) throw InvalidParameters("graded basis degree must be non-negative");
  GradedBasis basis{nvars, degree, {}};
  basis.monomials.reserve(binomial(nvars - 1 + degree, degree));
  ExponentVector current(static_cast<std::size_t>(nvars), 0);
  enumerate(0, degree, current, basis.monomials);
  return basis;
}

BiBasis bihomogeneous_basis(int n, int m, int a, int b) {
  if (n < 1 || m < 1) throw InvalidParameters("bihomogeneous basis needs n, m >= 1");
  if (a < 0 || b < 0) throw InvalidParameters("bidegree must be non-negative");
  const GradedBasis xs = graded_basis(n + 1, a);
  const GradedBasis ys = graded_basis(m + 1, b);
  BiBasis basis{n, m, a, b, {}};
  basis.monomials.reserve(xs.size() * ys.size());
  for (const auto& x : xs.monomials)
    for (const auto& y : ys.monomials) basis.monomials.push_back({x, y});
  return basis;
}

}  // namespace svdim
