#pragma once

// The primal problem (P)  min { f(x) : x in D }  over Q^n.
//
// Three independent existence tests are provided (bounded-below epigraph
// LP, recession-direction feasibility, and the explicit conic criterion);
// their agreement on every feasible instance is asserted at runtime.
//
// The closure that appears in the infinite-dimensional optimality
// condition 0 ∈ cl(∂f(x) + N_D(x)) is dropped: in Q^n a sum of finitely
// generated cones and subspaces is closed, so the closure-free test
//   0 ∈ conv{v_k : k∈Θ(x)} + cone{x_i* : i∈I(x)} + cone{u_j* : j∈J(x)}
//       + rowspace[A; B]
// is exact. rowspace[A;B] realizes (ker A ∩ ker B)^⊥.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gpco/functions.hpp"
#include "gpco/sets.hpp"

namespace gpco {

class Problem {
 public:
  /// Throws DimensionError when f and D live in different dimensions.
  Problem(GPolyFunc objective, GPolySet constraints);

  const GPolyFunc& objective() const { return objective_; }
  const GPolySet& constraints() const { return constraints_; }
  std::size_t dim() const { return constraints_.dim(); }

  /// D ∩ dom f is nonempty; computed once at construction.
  bool feasible() const { return feasible_; }

  /// D ∩ dom f as one GPolySet (D's rows first).
  GPolySet feasible_region() const;

  /// Epigraph LP over (x, t): minimize t subject to x in D ∩ dom f and
  /// every piece <= t.
  LinearProgram epigraph_program() const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  GPolyFunc objective_;
  GPolySet constraints_;
  bool feasible_;
};

struct FrankWolfeResult {
  bool bounded_below = false;
  /// The infimum of f over D (tight) when bounded below.
  Rational lower_bound;
  /// Otherwise a direction v in 0+D ∩ 0+dom f with f0+(v) < 0.
  Vector descent_ray;
};

struct EavesResult {
  bool confirmed = false;
  /// When not confirmed: v in 0+D with f0+(v) <= -1.
  Vector counterexample;
};

/// Multipliers for 0 = Σλ_k v_k + Σμ_i x_i* + Σμ'_j u_j* + Σν_l s_l over
/// all pieces and all inequality rows.
struct ExplicitWitness {
  Vector lambda;
  Vector mu_constraints;
  Vector mu_domain;
  std::vector<Vector> span_basis;
  Vector nu;
};

struct ExplicitResult {
  bool member = false;
  std::optional<ExplicitWitness> witness;
  std::optional<NotMember> separator;
  /// Negated separator when not a member; a recession direction of
  /// D ∩ dom f along which every piece strictly decreases.
  Vector descent_ray;
};

struct ExistenceReport {
  bool feasible = false;
  std::optional<FrankWolfeResult> frank_wolfe;
  std::optional<EavesResult> eaves;
  std::optional<ExplicitResult> explicit_criterion;

  bool solution_exists() const { return feasible && frank_wolfe && frank_wolfe->bounded_below; }
};

/// Each check throws InfeasibleProblem when D ∩ dom f is empty.
FrankWolfeResult check_frank_wolfe(const Problem& p);
EavesResult check_eaves(const Problem& p);
ExplicitResult check_explicit(const Problem& p);

/// Runs all three checks and throws CertificateViolation if they disagree.
ExistenceReport existence_report(const Problem& p);

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct PrimalResult {
  SolveStatus status = SolveStatus::Infeasible;
  Vector minimizer;
  Rational value;
  /// For Unbounded: a recession direction with f0+ < 0.
  Vector ray;
};

PrimalResult solve_primal(const Problem& p);

/// Sol(P) = { x in D ∩ dom f : ⟨v_k,x⟩ + β_k <= optimal value ∀k }.
/// Throws NoSolution when (P) has no minimizer.
GPolySet solution_set(const Problem& p);

struct OptimalityCertificate {
  Vector point;
  std::vector<std::size_t> active_pieces;
  Vector lambda;
  std::vector<std::size_t> active_constraints;
  Vector mu_constraints;
  std::vector<std::size_t> active_domain;
  Vector mu_domain;
  std::vector<Vector> span_basis;
  Vector nu;
};

struct Refutation {
  Vector point;
  /// h in T_D(x) ∩ T_{dom f}(x) with f'(x; h) < 0.
  Vector descent_direction;
  Rational derivative;
};

using OptimalityVerdict = std::variant<OptimalityCertificate, Refutation>;

/// Throws PointNotInSet when x is outside D ∩ dom f.
OptimalityVerdict verify_optimal(const Problem& p, const Vector& x);

/// Exact re-check of the multiplier identity and sign conditions.
bool certificate_holds(const Problem& p, const OptimalityCertificate& cert);

}  // namespace gpco
