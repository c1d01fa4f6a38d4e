#include "gpco/linalg.hpp"

#include "gpco/errors.hpp"

namespace gpco {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("subtract: length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Rational& s, std::span<const Rational> a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool is_zero(std::span<const Rational> a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Vector zeros(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e.at(i) = 1;
  return e;
}

std::vector<std::size_t> reduce_to_echelon(Matrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && sgn(m(pick, col)) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));

    const Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

CanonicalBases canonical_bases(const Matrix& m) {
  Matrix r = m;
  const auto pivots = reduce_to_echelon(r, r.cols());

  CanonicalBases out;
  out.rank = pivots.size();
  for (std::size_t i = 0; i < pivots.size(); ++i) out.rowspace_basis.push_back(r.row_vector(i));

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

LinearSolveResult solve_linear(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // [M | b | I]; the identity block records the row operations.
  Matrix aug(rows, cols + 1 + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
    aug(r, cols + 1 + r) = 1;
  }
  const auto pivots = reduce_to_echelon(aug, cols);

  for (std::size_t r = pivots.size(); r < rows; ++r) {
    if (sgn(aug(r, cols)) != 0) {
      Vector y(rows);
      for (std::size_t i = 0; i < rows; ++i) y[i] = aug(r, cols + 1 + i);
      return LinearInconsistency{std::move(y)};
    }
  }
  Vector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols);
  return LinearSolution{std::move(x)};
}

Matrix rows_matrix(const std::vector<Vector>& rows, std::size_t cols) {
  return Matrix::from_rows(rows, cols);
}

bool in_row_span(const Matrix& basis, const std::vector<Vector>& vs) {
  const Matrix bt = basis.transpose();
  for (const auto& v : vs) {
    if (std::holds_alternative<LinearInconsistency>(solve_linear(bt, v))) return false;
  }
  return true;
}

}  // namespace gpco
