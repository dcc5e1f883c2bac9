#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "svdim/error.hpp"

namespace svdim {

/// Dense row-major matrix. Rows are appended while a condition matrix is
/// assembled; after that the value is treated as immutable.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t cols) : cols_(cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw KernelError("matrix entry count does not match rows x cols");
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix out(cols);
    for (const auto& r : rows) out.append_row(r);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(entries_).subspan(r * cols_, cols_);
  }
  const std::vector<T>& entries() const { return entries_; }

  void append_row(std::span<const T> values) {
    if (values.size() != cols_) throw KernelError("appended row has wrong length");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }
  void append_row(const std::vector<T>& values) { append_row(std::span<const T>(values)); }

  /// Stacks `other` below this matrix.
  void append(const Matrix& other) {
    if (other.rows_ == 0) return;
    if (other.cols_ != cols_) throw KernelError("stacked matrices differ in column count");
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    rows_ += other.rows_;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

}  // namespace svdim
