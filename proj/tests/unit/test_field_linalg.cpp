#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "svdim/error.hpp"
#include "svdim/field.hpp"
#include "svdim/linalg.hpp"
#include "svdim/matrix.hpp"

using namespace svdim;

namespace {

Matrix<std::int64_t> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix<std::int64_t> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Rank-k matrix as a product of random (rows x k) and (k x cols) factors.
Matrix<std::int64_t> low_rank_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k) {
  auto a = random_int_matrix(rng, rows, k, -3, 3);
  auto b = random_int_matrix(rng, k, cols, -3, 3);
  Matrix<std::int64_t> out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t i = 0; i < k; ++i) out(r, c) += a(r, i) * b(i, c);
  return out;
}

std::size_t oracle_rank(const Matrix<std::int64_t>& m) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::uint64_t> row;
    for (auto v : m.row(r)) {
      const auto p = static_cast<std::int64_t>(oracle::kPrime);
      row.push_back(static_cast<std::uint64_t>(((v % p) + p) % p));
    }
    rows.push_back(row);
  }
  return oracle::rank(rows);
}

const FieldConfig kModular{};
const FieldConfig kExact{kDefaultModulus, Backend::exact_rational};

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(3) == 4);
  CHECK(f.mul(6, 6) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(15) == 1);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);

  PrimeField big(kDefaultModulus);
  const std::uint32_t x = kDefaultModulus - 2;
  CHECK(big.mul(x, big.inv(x)) == 1);
  CHECK(big.add(x, 5) == 3);
}

TEST_CASE("field configuration validation") {
  CHECK(is_prime(2));
  CHECK(is_prime(kDefaultModulus));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1073741823));
  CHECK_NOTHROW(kModular.validate(5));
  CHECK_THROWS_AS(FieldConfig{12}.validate(2), InvalidParameters);
  CHECK_THROWS_AS(FieldConfig{5}.validate(4), InvalidParameters);
  CHECK_NOTHROW(FieldConfig{7}.validate(4));
  CHECK_THROWS_AS(FieldConfig{2147483659u}.validate(2), InvalidParameters);
  CHECK(backend_from_string("exact") == Backend::exact_rational);
  CHECK(backend_from_string("modular") == Backend::modular);
  CHECK_THROWS_AS(backend_from_string("float"), InvalidParameters);
}

TEST_CASE("matrix construction") {
  CHECK_THROWS_AS(Matrix<int>(2, 2, std::vector<int>{1, 2, 3}), KernelError);
  Matrix<int> m(3);
  CHECK_THROWS_AS(m.append_row(std::vector<int>{1, 2}), KernelError);
  m.append_row(std::vector<int>{1, 2, 3});
  CHECK(m.rows() == 1);
  CHECK(m.transposed().rows() == 3);
  CHECK(m.transposed().transposed() == m);
}

TEST_CASE("rank examples") {
  Matrix<std::int64_t> id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
  CHECK(rank(id, kModular) == 3);
  CHECK(rank(id, kExact) == 3);

  Matrix<std::int64_t> zero(4, 7);
  CHECK(rank(zero, kModular) == 0);
  CHECK(rank(zero, kExact) == 0);
  CHECK(ideal_dimension(to_field(zero, PrimeField(7)), PrimeField(7)) == 7);

  const auto prop = Matrix<std::int64_t>(2, 3, std::vector<std::int64_t>{1, 2, 3, 2, 4, 6});
  CHECK(rank(prop, FieldConfig{7}) == 1);
  CHECK(rank(prop, kExact) == 1);

  // Rank drops mod 5 but not over Q.
  const auto m5 = Matrix<std::int64_t>(2, 2, std::vector<std::int64_t>{1, 2, 3, 11});
  CHECK(rank(m5, FieldConfig{5}) == 1);
  CHECK(rank(m5, kExact) == 2);

  Matrix<std::int64_t> empty(0, 5);
  CHECK(rank(empty, kModular) == 0);
  CHECK(ideal_dimension(to_field(empty, PrimeField(7)), PrimeField(7)) == 5);
}

TEST_CASE("rational rank with fractional entries") {
  RationalField q;
  Matrix<mpq_class> m(2, 2);
  m(0, 0) = mpq_class(1, 2);
  m(0, 1) = mpq_class(1, 3);
  m(1, 0) = mpq_class(3, 4);
  m(1, 1) = mpq_class(1, 2);
  CHECK(rank(m, q) == 1);
  m(1, 1) = mpq_class(1, 5);
  CHECK(rank(m, q) == 2);
}

TEST_CASE("property: rank is invariant under transpose, row permutation, scaling, stacking zeros") {
  std::mt19937_64 rng(20261016);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const std::size_t k = 1 + rng() % std::min(rows, cols);
    const auto m = iter % 2 ? low_rank_matrix(rng, rows, cols, k) : random_int_matrix(rng, rows, cols, -5, 5);
    const std::size_t r = rank(m, kModular);

    CHECK(r == oracle_rank(m));
    CHECK(r <= std::min(rows, cols));
    CHECK(rank(m.transposed(), kModular) == r);

    std::vector<std::size_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Matrix<std::int64_t> perm(cols);
    for (auto i : order) perm.append_row(m.row(i));
    CHECK(rank(perm, kModular) == r);

    Matrix<std::int64_t> scaled = m;
    for (std::size_t c = 0; c < cols; ++c) scaled(0, c) *= 17;
    CHECK(rank(scaled, kModular) == r);

    Matrix<std::int64_t> stacked = m;
    stacked.append(Matrix<std::int64_t>(2, cols));
    CHECK(rank(stacked, kModular) == r);

    Matrix<std::int64_t> doubled = m;
    doubled.append(m);
    CHECK(rank(doubled, kModular) == r);
  }
}

TEST_CASE("property: modular and exact backends agree on small integer matrices") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 80; ++iter) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % std::min(rows, cols);
    const auto m = iter % 3 ? low_rank_matrix(rng, rows, cols, k) : random_int_matrix(rng, rows, cols, -9, 9);
    CHECK(rank(m, kModular) == rank(m, kExact));
  }
}

TEST_CASE("property: a sum of k random rank-one products has rank k") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t k = 1 + rng() % 5;
    const auto m = low_rank_matrix(rng, 8, 9, k);
    CHECK(rank(m, kModular) <= k);
    CHECK(rank(m, kExact) == rank(m, kModular));
  }
}
