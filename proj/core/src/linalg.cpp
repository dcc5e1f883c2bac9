#include "svdim/linalg.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace svdim {

std::size_t rank(const Matrix<std::uint32_t>& mat, const PrimeField& field) {
  const std::size_t rows = mat.rows();
  const std::size_t cols = mat.cols();
  const std::uint64_t p = field.modulus();
  std::vector<std::uint32_t> a = mat.entries();
  auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return a[r * cols + c]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    // Scale the pivot row to a leading 1.
    const std::uint32_t inv = field.inv(at(rank, col));
    for (std::size_t c = col; c < cols; ++c) at(rank, c) = field.mul(at(rank, c), inv);

    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint32_t f = at(r, col);
      if (f == 0) continue;
      const std::uint64_t neg_f = p - f;
      for (std::size_t c = col; c < cols; ++c) {
        at(r, c) = static_cast<std::uint32_t>((at(r, c) + neg_f * at(rank, c)) % p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

void divide_by_content(std::vector<mpz_class>& row, std::size_t from) {
  mpz_class g = 0;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(row[c]) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (std::size_t c = from; c < row.size(); ++c) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

std::size_t rank(const Matrix<mpq_class>& mat, const RationalField&) {
  const std::size_t rows = mat.rows();
  const std::size_t cols = mat.cols();

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class denom_lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), mat(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = mat(r, c).get_num() * (denom_lcm / mat(r, c).get_den());
    }
    divide_by_content(a[r], 0);
  }

  std::size_t rank = 0;
  mpz_class scratch;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const auto& prow = a[rank];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][col]) == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), prow[col].get_mpz_t(), a[r][col].get_mpz_t());
      const mpz_class fp = prow[col] / g;
      const mpz_class fr = a[r][col] / g;
      auto& row = a[r];
      for (std::size_t c = col; c < cols; ++c) {
        scratch = fr * prow[c];
        row[c] *= fp;
        row[c] -= scratch;
      }
      divide_by_content(row, col + 1);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const Matrix<std::int64_t>& mat, const FieldConfig& cfg) {
  if (cfg.backend == Backend::exact_rational) {
    RationalField field;
    return rank(to_field(mat, field), field);
  }
  PrimeField field(cfg.modulus);
  return rank(to_field(mat, field), field);
}

}  // namespace svdim
