#pragma once

#include <optional>
#include <string>
#include <variant>

#include "gpco/analysis.hpp"
#include "gpco/lp.hpp"

namespace gpco {

/// The conjugate dual of (P):
///   (D)  max { g(w) : w in Q^n },   g(w) = -f*(-w) - δ*(w, D).
///
/// g is evaluated pointwise with two LPs. The dual itself is solved as one
/// composite LP over (w, λ, μ, ν, η, ξ) obtained by dualizing both inner
/// programs of g:
///   max  λᵀβ - μᵀγ - νᵀz - ηᵀα - ξᵀy
///   s.t. Σλ = 1,  w + Vᵀλ + Uᵀμ + Bᵀν = 0,  Gᵀη + Aᵀξ = w,  λ, μ, η >= 0.
class DualProblem {
 public:
  explicit DualProblem(Problem primal);

  const Problem& primal() const { return primal_; }
  /// The composite LP, in minimization form (cost = -objective above).
  const LinearProgram& composite() const { return composite_; }

 private:
  Problem primal_;
  LinearProgram composite_;
};

/// g(w). -inf when f*(-w) or δ*(w, D) is +inf. When D is empty the
/// Lagrangian infimum runs over an empty set and g(w) = +inf.
Extended dual_value(const DualProblem& dp, const Vector& w);

enum class DualStatus {
  Optimal,
  Infeasible,  ///< g ≡ -inf
  Unbounded,   ///< sup g = +inf
};

struct DualResult {
  DualStatus status = DualStatus::Infeasible;
  Vector maximizer;
  Rational value;
};

/// The maximizer is re-evaluated through dual_value before returning.
DualResult solve_dual(const DualProblem& dp);

struct WeakDualityCheck {
  Extended dual_value;
  Extended primal_value;
  bool holds = false;
  /// g(w) = f(u) finite; then u and w were both checked optimal.
  bool tight = false;
};

/// Throws PointNotInSet when u is not in D.
WeakDualityCheck weak_duality_check(const Problem& p, const Vector& u, const Vector& w);

struct JointCertificate {
  Vector primal_point;
  Vector dual_point;
  Rational value;
};

struct JointMismatch {
  bool in_normal_cone = false;
  bool in_negative_subdifferential = false;
  bool values_equal = false;
  /// "normal_cone", "subdifferential" or "value", in that checking order.
  std::string first_failure;
};

using JointVerdict = std::variant<JointCertificate, JointMismatch>;

/// w ∈ N_D(u) ∩ (-∂f(u)) together with f(u) = g(w). Throws PointNotInSet
/// when u is outside D ∩ dom f.
JointVerdict joint_certificate(const Problem& p, const Vector& u, const Vector& w);

struct DualityReport {
  PrimalResult primal;
  DualResult dual;
  /// primal value - dual value when both are finite.
  std::optional<Rational> gap;
};

/// Solves both problems and asserts the finite-dimensional strong duality
/// statements (a solution on one side forces one on the other with zero
/// gap; an unbounded side forces an infeasible other side).
DualityReport duality_report(const Problem& p);

}  // namespace gpco
