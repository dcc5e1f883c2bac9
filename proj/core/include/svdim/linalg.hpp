#pragma once

#include <cstddef>
#include <cstdint>

#include "svdim/field.hpp"
#include "svdim/matrix.hpp"

namespace svdim {

/// Rank over GF(p). Entries must already be canonical residues.
std::size_t rank(const Matrix<std::uint32_t>& mat, const PrimeField& field);

/// Rank over Q. Rows are cleared of denominators and eliminated
/// fraction-free over Z, dividing each updated row by its content.
std::size_t rank(const Matrix<mpq_class>& mat, const RationalField& field);

/// Rank of an integer matrix over the configured backend. Over GF(p) the
/// entries are reduced first, so the result lower-bounds the rank over Q.
std::size_t rank(const Matrix<std::int64_t>& mat, const FieldConfig& cfg);

/// cols - rank: dimension of the space of coefficient vectors killed by
/// every row.
template <class T, class F>
std::size_t ideal_dimension(const Matrix<T>& mat, const F& field) {
  return mat.cols() - rank(mat, field);
}

template <class F>
Matrix<typename F::value_type> to_field(const Matrix<std::int64_t>& mat, const F& field) {
  std::vector<typename F::value_type> entries;
  entries.reserve(mat.entries().size());
  for (std::int64_t v : mat.entries()) entries.push_back(field.from_int(v));
  return Matrix<typename F::value_type>(mat.rows(), mat.cols(), std::move(entries));
}

}  // namespace svdim
