#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gpco/matrix.hpp"
#include "gpco/rational.hpp"

namespace gpco {

/// minimize cᵀx  subject to  E x = e,  F x <= f,  x free.
struct LinearProgram {
  std::size_t num_vars = 0;
  Vector cost;
  Matrix eq_matrix;
  Vector eq_rhs;
  Matrix ineq_matrix;
  Vector ineq_rhs;

  /// Empty blocks of the right width and a zero cost.
  static LinearProgram feasibility(std::size_t n);

  void add_equality(Vector row, Rational rhs);
  void add_inequality(Vector row, Rational rhs);
};

/// Multipliers follow the Lagrangian convention
///   c + Eᵀy + Fᵀz = 0,  z >= 0,  z_i (f_i - F_i x) = 0,
/// so the dual value -eᵀy - fᵀz equals the primal value cᵀx.
struct LpOptimal {
  Vector point;
  Rational value;
  Vector eq_multipliers;
  Vector ineq_multipliers;
};

/// Farkas certificate: z >= 0, Eᵀy + Fᵀz = 0 and eᵀy + fᵀz < 0, which
/// combines the constraints into 0 <= eᵀy + fᵀz < 0.
struct LpInfeasible {
  Vector eq_multipliers;
  Vector ineq_multipliers;
};

/// A feasible point and a ray r with E r = 0, F r <= 0, cᵀr < 0.
struct LpUnbounded {
  Vector point;
  Vector ray;
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

/// Two-phase primal simplex over exact rationals with Bland's rule.
/// Equalities are eliminated first through a particular solution plus a
/// kernel basis. Every outcome is re-verified by certificate_defect()
/// before it is returned; a failure throws CertificateViolation.
LpOutcome lp_solve(const LinearProgram& lp);

/// Exact check of the outcome's certificate against `lp`. Returns a
/// description of the first defect, or nullopt when the certificate holds.
std::optional<std::string> certificate_defect(const LinearProgram& lp, const LpOutcome& outcome);

/// Throws DimensionError when the blocks disagree with num_vars.
void validate(const LinearProgram& lp);

/// Process-wide tally of lp_solve certificate checks.
struct LpAudit {
  std::uint64_t certified = 0;
  std::uint64_t violations = 0;
};
LpAudit lp_audit();

}  // namespace gpco
