#include "gpco/functions.hpp"

#include <algorithm>
#include <string>

#include "gpco/errors.hpp"
#include "gpco/linalg.hpp"

namespace gpco {
namespace {

void require_dim(const GPolyFunc& f, const Vector& x, const char* what) {
  if (x.size() != f.dim()) {
    throw DimensionError(std::string(what) + ": vector has " + std::to_string(x.size()) +
                         " entries, function lives in dimension " + std::to_string(f.dim()));
  }
}

void require_in_domain(const GPolyFunc& f, const Vector& x, const char* what) {
  require_dim(f, x, what);
  if (!contains(f.domain(), x))
    throw OutsideDomain(std::string(what) + ": point " + to_string(x) + " is outside dom f");
}

Rational max_slope(const GPolyFunc& f, const Vector& v, const std::vector<std::size_t>& indices) {
  Rational best = dot(f.pieces()[indices.front()].slope, v);
  for (auto k : indices) best = std::max(best, Rational(dot(f.pieces()[k].slope, v)));
  return best;
}

std::vector<std::size_t> all_pieces(const GPolyFunc& f) {
  std::vector<std::size_t> idx(f.pieces().size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  return idx;
}

}  // namespace

GPolyFunc::GPolyFunc(std::vector<AffinePiece> pieces, GPolySet domain)
    : pieces_(std::move(pieces)), domain_(std::move(domain)) {
  if (pieces_.empty()) throw ImproperFunction("a polyhedral function needs at least one affine piece");
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    if (pieces_[k].slope.size() != domain_.dim())
      throw DimensionError("piece " + std::to_string(k) + " has slope of length " +
                           std::to_string(pieces_[k].slope.size()) + ", expected " +
                           std::to_string(domain_.dim()));
  }
  if (is_empty(domain_)) throw ImproperFunction("dom f is empty");
}

GPolyFunc GPolyFunc::from_epigraph(const Matrix& eq, const Vector& eq_rhs, const Matrix& ineq,
                                   const Vector& ineq_rhs) {
  if (eq.cols() == 0 || eq.cols() != ineq.cols())
    throw DimensionError("epigraph blocks need a common width n + 1 >= 1");
  const std::size_t n = eq.cols() - 1;
  if (eq.rows() != eq_rhs.size() || ineq.rows() != ineq_rhs.size())
    throw DimensionError("epigraph right-hand side length mismatch");

  std::vector<Vector> dom_eq;
  for (std::size_t r = 0; r < eq.rows(); ++r) {
    if (sgn(eq(r, n)) != 0) throw ImproperFunction("epigraph equality involves t");
    auto row = eq.row(r);
    dom_eq.emplace_back(row.begin(), row.end() - 1);
  }

  std::vector<AffinePiece> pieces;
  std::vector<Vector> dom_ineq;
  Vector dom_ineq_rhs;
  for (std::size_t r = 0; r < ineq.rows(); ++r) {
    auto row = ineq.row(r);
    Vector a(row.begin(), row.end() - 1);
    const Rational& t_coeff = row[n];
    if (sgn(t_coeff) > 0) throw ImproperFunction("epigraph row " + std::to_string(r) + " bounds t from above");
    if (sgn(t_coeff) == 0) {
      dom_ineq.push_back(std::move(a));
      dom_ineq_rhs.push_back(ineq_rhs[r]);
      continue;
    }
    // a x + c t <= b with c < 0  ⇔  t >= (a/|c|) x - b/|c|.
    const Rational s = 1 / Rational(-t_coeff);
    pieces.push_back({scale(s, a), Rational(-ineq_rhs[r] * s)});
  }
  GPolySet domain(Matrix::from_rows(dom_eq, n), eq_rhs, Matrix::from_rows(dom_ineq, n),
                  std::move(dom_ineq_rhs));
  return GPolyFunc(std::move(pieces), std::move(domain));
}

Rational GPolyFunc::piece_value(std::size_t k, const Vector& x) const {
  return dot(pieces_.at(k).slope, x) + pieces_[k].offset;
}

Extended evaluate(const GPolyFunc& f, const Vector& x) {
  require_dim(f, x, "evaluate");
  if (!contains(f.domain(), x)) return Extended::pos_inf();
  Rational best = f.piece_value(0, x);
  for (std::size_t k = 1; k < f.pieces().size(); ++k) best = std::max(best, f.piece_value(k, x));
  return Extended(std::move(best));
}

std::vector<std::size_t> active_pieces(const GPolyFunc& f, const Vector& x) {
  require_in_domain(f, x, "active_pieces");
  const Rational value = evaluate(f, x).value();
  std::vector<std::size_t> theta;
  for (std::size_t k = 0; k < f.pieces().size(); ++k)
    if (f.piece_value(k, x) == value) theta.push_back(k);
  return theta;
}

Extended recession_value(const GPolyFunc& f, const Vector& v) {
  require_dim(f, v, "recession_value");
  if (!contains(recession_cone(f.domain()).cone, v)) return Extended::pos_inf();
  return Extended(max_slope(f, v, all_pieces(f)));
}

Extended directional_derivative(const GPolyFunc& f, const Vector& x, const Vector& h) {
  require_in_domain(f, x, "directional_derivative");
  require_dim(f, h, "directional_derivative");
  if (!contains(tangent_cone(f.domain(), x), h)) return Extended::pos_inf();
  return Extended(max_slope(f, h, active_pieces(f, x)));
}

ConicCombo subdifferential_at(const GPolyFunc& f, const Vector& x) {
  require_in_domain(f, x, "subdifferential_at");
  ConicCombo combo;
  combo.dim = f.dim();
  combo.empty_hull = EmptyHull::EmptySet;
  for (auto k : active_pieces(f, x)) combo.hull.push_back(f.pieces()[k].slope);
  for (auto j : active_set(f.domain(), x)) combo.cone.push_back(f.domain().ineq_matrix().row_vector(j));
  combo.span = canonical_bases(f.domain().eq_matrix()).rowspace_basis;
  return combo;
}

LinearProgram epigraph_lp(const GPolyFunc& f) {
  const std::size_t n = f.dim();
  const GPolySet& dom = f.domain();
  LinearProgram lp;
  lp.num_vars = n + 1;
  lp.cost = zeros(n + 1);
  lp.eq_matrix = Matrix(dom.num_eq(), n + 1);
  for (std::size_t r = 0; r < dom.num_eq(); ++r)
    for (std::size_t c = 0; c < n; ++c) lp.eq_matrix(r, c) = dom.eq_matrix()(r, c);
  lp.eq_rhs = dom.eq_rhs();

  const std::size_t m = f.pieces().size();
  lp.ineq_matrix = Matrix(dom.num_ineq() + m, n + 1);
  lp.ineq_rhs = dom.ineq_rhs();
  for (std::size_t r = 0; r < dom.num_ineq(); ++r)
    for (std::size_t c = 0; c < n; ++c) lp.ineq_matrix(r, c) = dom.ineq_matrix()(r, c);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t r = dom.num_ineq() + k;
    for (std::size_t c = 0; c < n; ++c) lp.ineq_matrix(r, c) = f.pieces()[k].slope[c];
    lp.ineq_matrix(r, n) = -1;
    lp.ineq_rhs.push_back(-f.pieces()[k].offset);
  }
  return lp;
}

Extended conjugate_value(const GPolyFunc& f, const Vector& w) {
  require_dim(f, w, "conjugate_value");
  // sup ⟨w,x⟩ - t  =  -min (t - ⟨w,x⟩)
  LinearProgram lp = epigraph_lp(f);
  for (std::size_t c = 0; c < f.dim(); ++c) lp.cost[c] = -w[c];
  lp.cost[f.dim()] = 1;
  const LpOutcome out = lp_solve(lp);
  if (const auto* opt = std::get_if<LpOptimal>(&out)) return Extended(Rational(-opt->value));
  if (std::holds_alternative<LpUnbounded>(out)) return Extended::pos_inf();
  throw CertificateViolation("conjugate_value: epigraph of a proper function reported empty");
}

SubgradientCheck is_subgradient(const GPolyFunc& f, const Vector& x, const Vector& w) {
  require_in_domain(f, x, "is_subgradient");
  require_dim(f, w, "is_subgradient");

  SubgradientCheck check;
  const Extended conj = conjugate_value(f, w);
  check.fenchel_route = conj.is_finite() && evaluate(f, x).value() + conj.value() == dot(w, x);

  MembershipResult member = conic_membership(w, subdifferential_at(f, x));
  if (auto* witness = std::get_if<ConicWitness>(&member)) {
    check.membership_route = true;
    check.witness = std::move(*witness);
  }
  if (check.fenchel_route != check.membership_route) {
    throw CertificateViolation("is_subgradient: Fenchel equality and subdifferential formula disagree at x = " +
                               to_string(x) + ", w = " + to_string(w));
  }
  check.is_subgradient = check.fenchel_route;
  return check;
}

}  // namespace gpco
