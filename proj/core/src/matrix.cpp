#include "gpco/matrix.hpp"

#include <string>

#include "gpco/errors.hpp"

namespace gpco {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto view = row(r);
  return Vector(view.begin(), view.end());
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const {
  Matrix m(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(indices[i], c);
  return m;
}

Vector Matrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) {
    throw DimensionError("matrix has " + std::to_string(cols_) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
  }
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

Vector Matrix::apply_transpose(std::span<const Rational> y) const {
  if (y.size() != rows_) {
    throw DimensionError("matrix has " + std::to_string(rows_) + " rows, vector has " +
                         std::to_string(y.size()) + " entries");
  }
  Vector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn(y[r]) == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c) * y[r];
  }
  return out;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw DimensionError("vstack: column counts differ");
  Matrix out(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return out;
}

}  // namespace gpco
