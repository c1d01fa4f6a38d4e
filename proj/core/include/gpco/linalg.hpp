#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "gpco/matrix.hpp"
#include "gpco/rational.hpp"

namespace gpco {

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> a);
bool is_zero(std::span<const Rational> a);
Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

struct CanonicalBases {
  std::size_t rank = 0;
  /// One vector per free column, with a 1 in that column (echelon-normalized).
  std::vector<Vector> kernel_basis;
  /// Nonzero rows of the reduced row echelon form.
  std::vector<Vector> rowspace_basis;
};

/// Rank, kernel and row-space bases from Gauss-Jordan elimination with
/// leftmost-column, first-nonzero-row pivoting. Deterministic.
CanonicalBases canonical_bases(const Matrix& m);

/// Reduced row echelon form; returns pivot columns. Only the first
/// `pivot_limit` columns are eligible as pivots (the rest ride along).
std::vector<std::size_t> reduce_to_echelon(Matrix& m, std::size_t pivot_limit);

/// Either a particular solution of M x = b (free variables set to zero)
/// or a left certificate y with yᵀM = 0 and yᵀb != 0.
struct LinearSolution {
  Vector solution;
};
struct LinearInconsistency {
  Vector left_certificate;
};
using LinearSolveResult = std::variant<LinearSolution, LinearInconsistency>;

LinearSolveResult solve_linear(const Matrix& m, std::span<const Rational> b);

/// Matrix whose rows are the given vectors, of width `cols`.
Matrix rows_matrix(const std::vector<Vector>& rows, std::size_t cols);

/// True iff every vector of `vs` lies in the span of the rows of `basis`.
bool in_row_span(const Matrix& basis, const std::vector<Vector>& vs);

}  // namespace gpco
