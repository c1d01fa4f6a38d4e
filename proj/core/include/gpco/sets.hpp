#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "gpco/lp.hpp"
#include "gpco/matrix.hpp"
#include "gpco/rational.hpp"

namespace gpco {

/// A generalized polyhedral convex set
///   D = { x : A x = y,  ⟨x_i*, x⟩ <= α_i  (i in I) }
/// kept exactly as given: no row is ever dropped or merged, because active
/// index sets refer to the listed rows.
class GPolySet {
 public:
  /// The whole space Q^dim.
  explicit GPolySet(std::size_t dim);
  /// Throws DimensionError when block widths or right-hand sides disagree.
  GPolySet(Matrix eq_matrix, Vector eq_rhs, Matrix ineq_matrix, Vector ineq_rhs);

  std::size_t dim() const { return dim_; }
  const Matrix& eq_matrix() const { return eq_matrix_; }
  const Vector& eq_rhs() const { return eq_rhs_; }
  const Matrix& ineq_matrix() const { return ineq_matrix_; }
  const Vector& ineq_rhs() const { return ineq_rhs_; }
  std::size_t num_eq() const { return eq_matrix_.rows(); }
  std::size_t num_ineq() const { return ineq_matrix_.rows(); }

  /// An LP over this set's constraints with the given cost.
  LinearProgram as_lp(Vector cost) const;

  friend bool operator==(const GPolySet&, const GPolySet&) = default;

 private:
  std::size_t dim_;
  Matrix eq_matrix_;
  Vector eq_rhs_;
  Matrix ineq_matrix_;
  Vector ineq_rhs_;
};

/// What an empty convex-hull part means in a ConicCombo.
enum class EmptyHull {
  PureCone,  ///< conv(∅) reads as {0}: the set is cone(U) + span(S).
  EmptySet,  ///< conv(∅) = ∅: the whole set is empty.
};

/// conv(W) + cone(U) + span(S). Normal cones use W = ∅ with the pure-cone
/// convention; subdifferentials always have W nonempty.
struct ConicCombo {
  std::size_t dim = 0;
  std::vector<Vector> hull;
  std::vector<Vector> cone;
  std::vector<Vector> span;
  EmptyHull empty_hull = EmptyHull::PureCone;

  bool requires_hull() const { return !hull.empty() || empty_hull == EmptyHull::EmptySet; }
};

/// target = Σ λ_k W_k + Σ μ_j U_j + Σ ν_l S_l with λ >= 0, Σλ = 1 (when the
/// hull term is required), μ >= 0 and ν free.
struct ConicWitness {
  Vector lambda;
  Vector mu;
  Vector nu;
};

/// Separator h with offset τ:  ⟨target,h⟩ + τ < 0,  ⟨W_k,h⟩ + τ >= 0,
/// ⟨U_j,h⟩ >= 0,  ⟨S_l,h⟩ = 0. τ is zero when there is no hull term.
struct NotMember {
  Vector separator;
  Rational offset;
  LpInfeasible farkas;
};

using MembershipResult = std::variant<ConicWitness, NotMember>;

/// Result of the recession cone with a flag for an empty source set, in
/// which case the cone is still the homogenized system but carries no
/// geometric meaning.
struct RecessionCone {
  GPolySet cone;
  bool source_empty = false;
};

struct Generators {
  std::vector<Vector> vertices;
  std::vector<Vector> extreme_rays;
  std::vector<Vector> lineality_basis;
};

bool contains(const GPolySet& d, const Vector& x);
bool is_empty(const GPolySet& d);

/// Indices i (0-based) with ⟨x_i*, x⟩ = α_i. Throws PointNotInSet.
std::vector<std::size_t> active_set(const GPolySet& d, const Vector& x);

RecessionCone recession_cone(const GPolySet& d);
GPolySet tangent_cone(const GPolySet& d, const Vector& x);
/// cone{x_i* : i in I(x)} + rowspace(A).
ConicCombo normal_cone(const GPolySet& d, const Vector& x);

/// sup { ⟨w,x⟩ : x in D }, +inf when unbounded. Throws EmptySetError.
Extended support_value(const GPolySet& d, const Vector& w);

MembershipResult conic_membership(const Vector& target, const ConicCombo& combo);

/// Exact check that the witness or separator is valid for (target, combo).
bool verify_membership(const Vector& target, const ConicCombo& combo, const MembershipResult& result);

/// The set as an intersection with extra equality / inequality rows.
GPolySet intersect(const GPolySet& a, const GPolySet& b);

/// Brute-force vertex / extreme ray / lineality enumeration for small
/// dimensions (a test oracle, exponential in the number of rows).
/// Throws ScaleExceeded when dim > max_dim.
Generators generators_oracle(const GPolySet& d, std::size_t max_dim = 6);

/// Divides a nonzero direction by the absolute value of its first nonzero
/// entry, so parallel rays compare equal.
Vector normalize_direction(const Vector& v);

}  // namespace gpco
