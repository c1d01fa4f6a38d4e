#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gpco/matrix.hpp"
#include "gpco/rational.hpp"
#include "gpco/sets.hpp"

namespace gpco {

/// x ↦ ⟨slope, x⟩ + offset.
struct AffinePiece {
  Vector slope;
  Rational offset;

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// A proper polyhedral convex function in canonical form
///   f(x) = max_k { ⟨v_k, x⟩ + β_k }   for x in dom f,   +inf otherwise,
/// with dom f = { x : B x = z, ⟨u_j, x⟩ <= γ_j } a GPolySet.
class GPolyFunc {
 public:
  /// Throws DimensionError on width mismatch, ImproperFunction when there
  /// are no pieces or dom f is empty.
  GPolyFunc(std::vector<AffinePiece> pieces, GPolySet domain);

  /// Builds f from an H-representation of its epigraph over (x, t).
  /// Inequality rows with a negative t-coefficient become pieces after
  /// scaling that coefficient to -1; rows with zero t-coefficient become
  /// domain constraints. A positive t-coefficient, or an equality that
  /// involves t, does not describe an epigraph and throws ImproperFunction.
  static GPolyFunc from_epigraph(const Matrix& eq, const Vector& eq_rhs, const Matrix& ineq,
                                 const Vector& ineq_rhs);

  std::size_t dim() const { return domain_.dim(); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const GPolySet& domain() const { return domain_; }
  Rational piece_value(std::size_t k, const Vector& x) const;

  friend bool operator==(const GPolyFunc&, const GPolyFunc&) = default;

 private:
  std::vector<AffinePiece> pieces_;
  GPolySet domain_;
};

Extended evaluate(const GPolyFunc& f, const Vector& x);

/// Θ(x): indices of pieces attaining f(x). Throws OutsideDomain.
std::vector<std::size_t> active_pieces(const GPolyFunc& f, const Vector& x);

/// f0+(v) = max_k ⟨v_k, v⟩ on the recession cone of dom f, +inf elsewhere.
Extended recession_value(const GPolyFunc& f, const Vector& v);

/// f'(x; h) = max_{k in Θ(x)} ⟨v_k, h⟩ for h in T_{dom f}(x), +inf elsewhere.
Extended directional_derivative(const GPolyFunc& f, const Vector& x, const Vector& h);

/// conv{v_k : k in Θ(x)} + cone{u_j : j in J(x)} + rowspace(B).
ConicCombo subdifferential_at(const GPolyFunc& f, const Vector& x);

/// f*(w) = sup_x ⟨w,x⟩ - f(x), one LP over the epigraph.
Extended conjugate_value(const GPolyFunc& f, const Vector& w);

/// Both routes to "w ∈ ∂f(x)": the Fenchel equality and conic membership
/// in the subdifferential formula.
struct SubgradientCheck {
  bool is_subgradient = false;
  bool fenchel_route = false;
  bool membership_route = false;
  std::optional<ConicWitness> witness;
};

/// Throws CertificateViolation if the two routes disagree.
SubgradientCheck is_subgradient(const GPolyFunc& f, const Vector& x, const Vector& w);

/// Epigraph LP skeleton over (x, t): dom f rows, and ⟨v_k,x⟩ - t <= -β_k.
/// The cost is zero; callers fill it in.
LinearProgram epigraph_lp(const GPolyFunc& f);

}  // namespace gpco
