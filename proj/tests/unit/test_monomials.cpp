#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "svdim/monomials.hpp"

using namespace svdim;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("graded basis size, order and membership") {
  CHECK(graded_basis(3, 2).size() == 6);
  CHECK(graded_basis(1, 4).size() == 1);
  CHECK(graded_basis(4, 0).size() == 1);
  const auto b = graded_basis(3, 3);
  CHECK(b.monomials.front() == ExponentVector{3, 0, 0});
  CHECK(b.monomials.back() == ExponentVector{0, 0, 3});
  for (std::size_t i = 1; i < b.size(); ++i) CHECK(b.monomials[i - 1] > b.monomials[i]);
  for (const auto& e : b.monomials) CHECK(total_degree(e) == 3);
}

TEST_CASE("property: basis sizes match closed forms") {
  for (int nv = 1; nv <= 7; ++nv)
    for (int t = 0; t <= 8; ++t) {
      const auto b = graded_basis(nv, t);
      CHECK(b.size() == binomial(nv - 1 + t, t));
      CHECK(b.size() == oracle::monomials(static_cast<std::size_t>(nv), t).size());
      std::set<ExponentVector> distinct(b.monomials.begin(), b.monomials.end());
      CHECK(distinct.size() == b.size());
    }
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; n + m <= 6; ++m)
      for (int a = 0; a <= 4; ++a)
        for (int bdeg = 0; a + bdeg <= 8; ++bdeg) {
          const auto bb = bihomogeneous_basis(n, m, a, bdeg);
          CHECK(bb.size() == binomial(n + a, a) * binomial(m + bdeg, bdeg));
          for (const auto& mono : bb.monomials) {
            CHECK(total_degree(mono.x) == a);
            CHECK(total_degree(mono.y) == bdeg);
            CHECK(mono.joined().size() == static_cast<std::size_t>(n + m + 2));
          }
        }
}

TEST_CASE("basis enumeration is deterministic") {
  CHECK(bihomogeneous_basis(2, 3, 1, 3).monomials == bihomogeneous_basis(2, 3, 1, 3).monomials);
  CHECK(graded_basis(4, 3).monomials == graded_basis(4, 3).monomials);
}

TEST_CASE("evaluation and partial derivatives") {
  PrimeField f(101);
  const std::vector<std::uint32_t> pt{2, 3, 5};
  const std::span<const std::uint32_t> at(pt);
  const ExponentVector mono{2, 1, 0};
  CHECK(evaluate(mono, at, f) == 12);
  CHECK(partial_eval(mono, 0, at, f) == 12);  // 2 x0 x1
  CHECK(partial_eval(mono, 1, at, f) == 4);   // x0^2
  CHECK(partial_eval(mono, 2, at, f) == 0);
  CHECK(evaluate(ExponentVector{0, 0, 0}, at, f) == 1);
}

TEST_CASE("property: Euler identity sum x_i d/dx_i f = deg(f) f") {
  PrimeField f(kDefaultModulus);
  oracle::Rng rng(3);
  for (int nv = 1; nv <= 5; ++nv)
    for (int t = 0; t <= 5; ++t) {
      std::vector<std::uint32_t> pt;
      for (int i = 0; i < nv; ++i) pt.push_back(static_cast<std::uint32_t>(rng.residue() % kDefaultModulus));
      const std::span<const std::uint32_t> at(pt);
      for (const auto& mono : graded_basis(nv, t).monomials) {
        std::uint32_t lhs = 0;
        for (int v = 0; v < nv; ++v) lhs = f.add(lhs, f.mul(pt[static_cast<std::size_t>(v)], partial_eval(mono, static_cast<std::size_t>(v), at, f)));
        CHECK(lhs == f.mul(f.from_int(t), evaluate(mono, at, f)));
      }
    }
}
