#include "gpco/duality.hpp"

#include "gpco/errors.hpp"
#include "gpco/linalg.hpp"

namespace gpco {
namespace {

struct Layout {
  std::size_t n, pieces, dom_ineq, dom_eq, ineq, eq;
  std::size_t w() const { return 0; }
  std::size_t lambda() const { return n; }
  std::size_t mu() const { return lambda() + pieces; }
  std::size_t nu() const { return mu() + dom_ineq; }
  std::size_t eta() const { return nu() + dom_eq; }
  std::size_t xi() const { return eta() + ineq; }
  std::size_t total() const { return xi() + eq; }
};

Layout layout_of(const Problem& p) {
  const auto& dom = p.objective().domain();
  const auto& d = p.constraints();
  return {p.dim(), p.objective().pieces().size(), dom.num_ineq(), dom.num_eq(), d.num_ineq(), d.num_eq()};
}

LinearProgram compile_composite(const Problem& p) {
  const Layout l = layout_of(p);
  const auto& f = p.objective();
  const auto& dom = f.domain();
  const auto& d = p.constraints();
  const std::size_t n = l.n;

  LinearProgram lp;
  lp.num_vars = l.total();
  lp.cost = zeros(l.total());
  for (std::size_t k = 0; k < l.pieces; ++k) lp.cost[l.lambda() + k] = -f.pieces()[k].offset;
  for (std::size_t j = 0; j < l.dom_ineq; ++j) lp.cost[l.mu() + j] = dom.ineq_rhs()[j];
  for (std::size_t j = 0; j < l.dom_eq; ++j) lp.cost[l.nu() + j] = dom.eq_rhs()[j];
  for (std::size_t i = 0; i < l.ineq; ++i) lp.cost[l.eta() + i] = d.ineq_rhs()[i];
  for (std::size_t i = 0; i < l.eq; ++i) lp.cost[l.xi() + i] = d.eq_rhs()[i];

  lp.eq_matrix = Matrix(1 + 2 * n, l.total());
  lp.eq_rhs = zeros(1 + 2 * n);
  for (std::size_t k = 0; k < l.pieces; ++k) lp.eq_matrix(0, l.lambda() + k) = 1;
  lp.eq_rhs[0] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    // w + Vᵀλ + Uᵀμ + Bᵀν = 0
    const std::size_t r = 1 + c;
    lp.eq_matrix(r, l.w() + c) = 1;
    for (std::size_t k = 0; k < l.pieces; ++k) lp.eq_matrix(r, l.lambda() + k) = f.pieces()[k].slope[c];
    for (std::size_t j = 0; j < l.dom_ineq; ++j) lp.eq_matrix(r, l.mu() + j) = dom.ineq_matrix()(j, c);
    for (std::size_t j = 0; j < l.dom_eq; ++j) lp.eq_matrix(r, l.nu() + j) = dom.eq_matrix()(j, c);
    // Gᵀη + Aᵀξ - w = 0
    const std::size_t s = 1 + n + c;
    lp.eq_matrix(s, l.w() + c) = -1;
    for (std::size_t i = 0; i < l.ineq; ++i) lp.eq_matrix(s, l.eta() + i) = d.ineq_matrix()(i, c);
    for (std::size_t i = 0; i < l.eq; ++i) lp.eq_matrix(s, l.xi() + i) = d.eq_matrix()(i, c);
  }

  std::vector<std::size_t> signed_vars;
  for (std::size_t k = 0; k < l.pieces; ++k) signed_vars.push_back(l.lambda() + k);
  for (std::size_t j = 0; j < l.dom_ineq; ++j) signed_vars.push_back(l.mu() + j);
  for (std::size_t i = 0; i < l.ineq; ++i) signed_vars.push_back(l.eta() + i);
  lp.ineq_matrix = Matrix(signed_vars.size(), l.total());
  lp.ineq_rhs = zeros(signed_vars.size());
  for (std::size_t r = 0; r < signed_vars.size(); ++r) lp.ineq_matrix(r, signed_vars[r]) = -1;
  return lp;
}

}  // namespace

DualProblem::DualProblem(Problem primal) : primal_(std::move(primal)), composite_(compile_composite(primal_)) {}

Extended dual_value(const DualProblem& dp, const Vector& w) {
  const Problem& p = dp.primal();
  if (w.size() != p.dim()) throw DimensionError("dual_value: vector has wrong dimension");
  if (is_empty(p.constraints())) return Extended::pos_inf();
  const Extended conj = conjugate_value(p.objective(), scale(-1, w));
  const Extended support = support_value(p.constraints(), w);
  if (!conj.is_finite() || !support.is_finite()) return Extended::neg_inf();
  return Extended(Rational(-conj.value() - support.value()));
}

DualResult solve_dual(const DualProblem& dp) {
  const LpOutcome out = lp_solve(dp.composite());
  DualResult result;
  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    result.status = DualStatus::Optimal;
    result.maximizer = Vector(opt->point.begin(), opt->point.begin() + static_cast<std::ptrdiff_t>(dp.primal().dim()));
    result.value = -opt->value;
    if (dual_value(dp, result.maximizer) != Extended(result.value))
      throw CertificateViolation("solve_dual: g at the maximizer differs from the composite LP value");
  } else if (std::holds_alternative<LpUnbounded>(out)) {
    result.status = DualStatus::Unbounded;
  } else {
    result.status = DualStatus::Infeasible;
  }
  return result;
}

WeakDualityCheck weak_duality_check(const Problem& p, const Vector& u, const Vector& w) {
  if (u.size() != p.dim() || !contains(p.constraints(), u))
    throw PointNotInSet("weak_duality_check: u is not in D");
  const DualProblem dp(p);
  WeakDualityCheck check{dual_value(dp, w), evaluate(p.objective(), u), false, false};
  check.holds = check.dual_value <= check.primal_value;
  if (!check.holds) throw CertificateViolation("weak duality violated at u = " + to_string(u) + ", w = " + to_string(w));
  check.tight = check.dual_value.is_finite() && check.dual_value == check.primal_value;
  if (check.tight) {
    const DualResult dual = solve_dual(dp);
    if (!std::holds_alternative<OptimalityCertificate>(verify_optimal(p, u)) ||
        dual.status != DualStatus::Optimal || Extended(dual.value) != check.dual_value)
      throw CertificateViolation("weak_duality_check: equal values without joint optimality");
  }
  return check;
}

JointVerdict joint_certificate(const Problem& p, const Vector& u, const Vector& w) {
  if (u.size() != p.dim() || !contains(p.constraints(), u) || !contains(p.objective().domain(), u))
    throw PointNotInSet("joint_certificate: u is not in D ∩ dom f");
  if (w.size() != p.dim()) throw DimensionError("joint_certificate: w has wrong dimension");

  JointMismatch report;
  report.in_normal_cone = support_value(p.constraints(), w) == Extended(dot(w, u));
  report.in_negative_subdifferential = is_subgradient(p.objective(), u, scale(-1, w)).is_subgradient;
  const Extended fu = evaluate(p.objective(), u);
  const Extended gw = dual_value(DualProblem(p), w);
  report.values_equal = fu == gw;

  if (report.in_normal_cone && report.in_negative_subdifferential && report.values_equal)
    return JointCertificate{u, w, fu.value()};
  if (report.in_normal_cone && report.in_negative_subdifferential)
    throw CertificateViolation("joint_certificate: both memberships hold but f(u) != g(w)");
  report.first_failure = !report.in_normal_cone               ? "normal_cone"
                         : !report.in_negative_subdifferential ? "subdifferential"
                                                               : "value";
  return report;
}

DualityReport duality_report(const Problem& p) {
  DualityReport report;
  report.primal = solve_primal(p);
  report.dual = solve_dual(DualProblem(p));

  const bool primal_solved = report.primal.status == SolveStatus::Optimal;
  const bool dual_solved = report.dual.status == DualStatus::Optimal;
  if (primal_solved != dual_solved)
    throw CertificateViolation("strong duality: exactly one of (P), (D) has a solution");
  if (primal_solved) {
    report.gap = report.primal.value - report.dual.value;
    if (sgn(*report.gap) != 0) throw CertificateViolation("strong duality: nonzero gap " + to_string(*report.gap));
  }
  if (report.primal.status == SolveStatus::Unbounded && report.dual.status != DualStatus::Infeasible)
    throw CertificateViolation("weak duality: unbounded primal with a finite dual value");
  if (report.dual.status == DualStatus::Unbounded && report.primal.status != SolveStatus::Infeasible)
    throw CertificateViolation("weak duality: unbounded dual with a feasible primal");
  return report;
}

}  // namespace gpco
