#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpco/rational.hpp"

namespace gpco {

/// Dense row-major rational matrix. The shape is fixed at construction;
/// zero-row matrices are legal and keep their column count, which is how
/// an empty constraint block remembers the ambient dimension.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  /// Throws DimensionError if some row does not have `cols` entries.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Matrix select_rows(const std::vector<std::size_t>& indices) const;

  /// M·x. Throws DimensionError on width mismatch.
  Vector apply(std::span<const Rational> x) const;
  /// Mᵀ·y.
  Vector apply_transpose(std::span<const Rational> y) const;
  Matrix multiply(const Matrix& rhs) const;

  /// Stack rows of `bottom` under `top`; both must have the same width.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace gpco
