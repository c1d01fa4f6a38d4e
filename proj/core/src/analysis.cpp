#include "gpco/analysis.hpp"

#include <string>

#include "gpco/errors.hpp"
#include "gpco/linalg.hpp"

namespace gpco {
namespace {

void require_feasible(const Problem& p, const char* what) {
  if (!p.feasible()) throw InfeasibleProblem(std::string(what) + ": D ∩ dom f is empty");
}

std::vector<Vector> stacked_rowspace(const Problem& p) {
  return canonical_bases(Matrix::vstack(p.constraints().eq_matrix(), p.objective().domain().eq_matrix()))
      .rowspace_basis;
}

Vector head(const Vector& v, std::size_t n) {
  return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
}

Vector slice(const Vector& v, std::size_t from, std::size_t count) {
  return Vector(v.begin() + static_cast<std::ptrdiff_t>(from),
                v.begin() + static_cast<std::ptrdiff_t>(from + count));
}

bool is_recession_direction(const Problem& p, const Vector& v) {
  return contains(recession_cone(p.constraints()).cone, v);
}

}  // namespace

Problem::Problem(GPolyFunc objective, GPolySet constraints)
    : objective_(std::move(objective)), constraints_(std::move(constraints)) {
  if (objective_.dim() != constraints_.dim()) {
    throw DimensionError("objective lives in dimension " + std::to_string(objective_.dim()) +
                         " but the constraint set in dimension " + std::to_string(constraints_.dim()));
  }
  feasible_ = !is_empty(feasible_region());
}

GPolySet Problem::feasible_region() const { return intersect(constraints_, objective_.domain()); }

LinearProgram Problem::epigraph_program() const {
  const std::size_t n = dim();
  LinearProgram lp = epigraph_lp(objective_);
  const GPolySet& d = constraints_;

  std::vector<Vector> eq = lp.eq_matrix.row_vectors();
  for (std::size_t r = 0; r < d.num_eq(); ++r) {
    Vector row = d.eq_matrix().row_vector(r);
    row.push_back(0);
    eq.insert(eq.begin() + static_cast<std::ptrdiff_t>(r), std::move(row));
  }
  Vector eq_rhs = d.eq_rhs();
  eq_rhs.insert(eq_rhs.end(), lp.eq_rhs.begin(), lp.eq_rhs.end());

  std::vector<Vector> ineq = lp.ineq_matrix.row_vectors();
  for (std::size_t r = 0; r < d.num_ineq(); ++r) {
    Vector row = d.ineq_matrix().row_vector(r);
    row.push_back(0);
    ineq.insert(ineq.begin() + static_cast<std::ptrdiff_t>(r), std::move(row));
  }
  Vector ineq_rhs = d.ineq_rhs();
  ineq_rhs.insert(ineq_rhs.end(), lp.ineq_rhs.begin(), lp.ineq_rhs.end());

  lp.eq_matrix = Matrix::from_rows(eq, n + 1);
  lp.eq_rhs = std::move(eq_rhs);
  lp.ineq_matrix = Matrix::from_rows(ineq, n + 1);
  lp.ineq_rhs = std::move(ineq_rhs);
  lp.cost = unit_vector(n + 1, n);
  return lp;
}

FrankWolfeResult check_frank_wolfe(const Problem& p) {
  require_feasible(p, "check_frank_wolfe");
  const LpOutcome out = lp_solve(p.epigraph_program());
  FrankWolfeResult result;
  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    result.bounded_below = true;
    result.lower_bound = opt->value;
    return result;
  }
  if (std::holds_alternative<LpInfeasible>(out))
    throw CertificateViolation("check_frank_wolfe: feasible problem produced an infeasible epigraph");

  result.descent_ray = head(std::get<LpUnbounded>(out).ray, p.dim());
  const Extended slope = recession_value(p.objective(), result.descent_ray);
  if (!is_recession_direction(p, result.descent_ray) || !(slope < Extended(0)))
    throw CertificateViolation("check_frank_wolfe: epigraph ray is not a descent recession direction");
  return result;
}

EavesResult check_eaves(const Problem& p) {
  require_feasible(p, "check_eaves");
  const GPolySet& d = p.constraints();
  const GPolySet& dom = p.objective().domain();
  const std::size_t n = p.dim();

  // ∃ v: Av = 0, Bv = 0, Gv <= 0, Uv <= 0, ⟨v_k,v⟩ <= -1 for all k.
  // Homogeneity of f0+ makes the -1 normalization lossless.
  LinearProgram lp = LinearProgram::feasibility(n);
  lp.eq_matrix = Matrix::vstack(d.eq_matrix(), dom.eq_matrix());
  lp.eq_rhs = zeros(lp.eq_matrix.rows());
  std::vector<Vector> rows = Matrix::vstack(d.ineq_matrix(), dom.ineq_matrix()).row_vectors();
  Vector rhs = zeros(rows.size());
  for (const auto& piece : p.objective().pieces()) {
    rows.push_back(piece.slope);
    rhs.push_back(-1);
  }
  lp.ineq_matrix = Matrix::from_rows(rows, n);
  lp.ineq_rhs = std::move(rhs);

  const LpOutcome out = lp_solve(lp);
  EavesResult result;
  if (std::holds_alternative<LpInfeasible>(out)) {
    result.confirmed = true;
    return result;
  }
  result.counterexample = std::get<LpOptimal>(out).point;
  if (!is_recession_direction(p, result.counterexample) ||
      !(recession_value(p.objective(), result.counterexample) <= Extended(-1)))
    throw CertificateViolation("check_eaves: counterexample direction failed verification");
  return result;
}

ExplicitResult check_explicit(const Problem& p) {
  require_feasible(p, "check_explicit");
  const GPolySet& d = p.constraints();
  const GPolySet& dom = p.objective().domain();

  ConicCombo combo;
  combo.dim = p.dim();
  combo.empty_hull = EmptyHull::EmptySet;
  for (const auto& piece : p.objective().pieces()) combo.hull.push_back(piece.slope);
  for (std::size_t i = 0; i < d.num_ineq(); ++i) combo.cone.push_back(d.ineq_matrix().row_vector(i));
  for (std::size_t j = 0; j < dom.num_ineq(); ++j) combo.cone.push_back(dom.ineq_matrix().row_vector(j));
  combo.span = stacked_rowspace(p);

  MembershipResult member = conic_membership(zeros(p.dim()), combo);
  ExplicitResult result;
  if (auto* w = std::get_if<ConicWitness>(&member)) {
    result.member = true;
    ExplicitWitness witness;
    witness.lambda = w->lambda;
    witness.mu_constraints = slice(w->mu, 0, d.num_ineq());
    witness.mu_domain = slice(w->mu, d.num_ineq(), dom.num_ineq());
    witness.span_basis = combo.span;
    witness.nu = w->nu;
    result.witness = std::move(witness);
    return result;
  }
  auto& nm = std::get<NotMember>(member);
  result.descent_ray = scale(-1, nm.separator);
  result.separator = std::move(nm);
  if (!is_recession_direction(p, result.descent_ray) ||
      !(recession_value(p.objective(), result.descent_ray) < Extended(0)))
    throw CertificateViolation("check_explicit: separator does not yield a descent recession direction");
  return result;
}

ExistenceReport existence_report(const Problem& p) {
  ExistenceReport report;
  report.feasible = p.feasible();
  if (!report.feasible) return report;
  report.frank_wolfe = check_frank_wolfe(p);
  report.eaves = check_eaves(p);
  report.explicit_criterion = check_explicit(p);
  const bool fw = report.frank_wolfe->bounded_below;
  if (fw != report.eaves->confirmed || fw != report.explicit_criterion->member) {
    throw CertificateViolation(std::string("existence criteria disagree: frank_wolfe=") + (fw ? "1" : "0") +
                               " eaves=" + (report.eaves->confirmed ? "1" : "0") +
                               " explicit=" + (report.explicit_criterion->member ? "1" : "0"));
  }
  return report;
}

PrimalResult solve_primal(const Problem& p) {
  PrimalResult result;
  if (!p.feasible()) {
    result.status = SolveStatus::Infeasible;
    return result;
  }
  const LpOutcome out = lp_solve(p.epigraph_program());
  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    result.status = SolveStatus::Optimal;
    result.minimizer = head(opt->point, p.dim());
    result.value = opt->value;
    if (!contains(p.constraints(), result.minimizer) ||
        evaluate(p.objective(), result.minimizer) != Extended(result.value))
      throw CertificateViolation("solve_primal: minimizer does not attain the epigraph value");
  } else if (const auto* unb = std::get_if<LpUnbounded>(&out)) {
    result.status = SolveStatus::Unbounded;
    result.ray = head(unb->ray, p.dim());
  } else {
    throw CertificateViolation("solve_primal: feasible problem produced an infeasible epigraph");
  }

  const ExistenceReport report = existence_report(p);
  if (report.solution_exists() != (result.status == SolveStatus::Optimal) ||
      (report.solution_exists() && report.frank_wolfe->lower_bound != result.value))
    throw CertificateViolation("solve_primal: solver disagrees with the existence criteria");
  return result;
}

GPolySet solution_set(const Problem& p) {
  const PrimalResult solved = solve_primal(p);
  if (solved.status != SolveStatus::Optimal) throw NoSolution("solution_set: (P) has no minimizer");

  const GPolySet region = p.feasible_region();
  std::vector<Vector> rows = region.ineq_matrix().row_vectors();
  Vector rhs = region.ineq_rhs();
  for (const auto& piece : p.objective().pieces()) {
    rows.push_back(piece.slope);
    rhs.push_back(solved.value - piece.offset);
  }
  GPolySet sol(region.eq_matrix(), region.eq_rhs(), Matrix::from_rows(rows, p.dim()), std::move(rhs));
  if (!contains(sol, solved.minimizer) || evaluate(p.objective(), solved.minimizer) != Extended(solved.value))
    throw CertificateViolation("solution_set: solver minimizer is not in the described set");
  return sol;
}

OptimalityVerdict verify_optimal(const Problem& p, const Vector& x) {
  const GPolyFunc& f = p.objective();
  const GPolySet& d = p.constraints();
  if (x.size() != p.dim()) throw DimensionError("verify_optimal: point has wrong dimension");
  if (!contains(d, x) || !contains(f.domain(), x))
    throw PointNotInSet("verify_optimal: point " + to_string(x) + " is not in D ∩ dom f");

  OptimalityCertificate cert;
  cert.point = x;
  cert.active_pieces = active_pieces(f, x);
  cert.active_constraints = active_set(d, x);
  cert.active_domain = active_set(f.domain(), x);
  cert.span_basis = stacked_rowspace(p);

  ConicCombo combo;
  combo.dim = p.dim();
  combo.empty_hull = EmptyHull::EmptySet;
  for (auto k : cert.active_pieces) combo.hull.push_back(f.pieces()[k].slope);
  for (auto i : cert.active_constraints) combo.cone.push_back(d.ineq_matrix().row_vector(i));
  for (auto j : cert.active_domain) combo.cone.push_back(f.domain().ineq_matrix().row_vector(j));
  combo.span = cert.span_basis;

  MembershipResult member = conic_membership(zeros(p.dim()), combo);
  const PrimalResult solved = solve_primal(p);
  const Rational fx = evaluate(f, x).value();

  if (auto* w = std::get_if<ConicWitness>(&member)) {
    cert.lambda = std::move(w->lambda);
    cert.mu_constraints = slice(w->mu, 0, cert.active_constraints.size());
    cert.mu_domain = slice(w->mu, cert.active_constraints.size(), cert.active_domain.size());
    cert.nu = std::move(w->nu);
    if (solved.status != SolveStatus::Optimal || solved.value != fx)
      throw CertificateViolation("verify_optimal: certificate issued at a non-optimal point");
    return cert;
  }

  // Separator h: ⟨v_k,h⟩ >= -τ > 0 on Θ(x), ⟨x_i*,h⟩ >= 0 on active rows,
  // h ⊥ rowspace[A;B]. Its negation descends into the tangent cone.
  Refutation ref;
  ref.point = x;
  ref.descent_direction = scale(-1, std::get<NotMember>(member).separator);
  const Extended derivative = directional_derivative(f, x, ref.descent_direction);
  if (!contains(tangent_cone(d, x), ref.descent_direction) || !(derivative < Extended(0)))
    throw CertificateViolation("verify_optimal: refutation direction is not a feasible descent direction");
  ref.derivative = derivative.value();
  if (solved.status == SolveStatus::Optimal && solved.value == fx)
    throw CertificateViolation("verify_optimal: refutation issued at an optimal point");
  return ref;
}

bool certificate_holds(const Problem& p, const OptimalityCertificate& cert) {
  const GPolyFunc& f = p.objective();
  const GPolySet& d = p.constraints();
  const Vector& x = cert.point;
  if (!contains(d, x) || !contains(f.domain(), x)) return false;
  if (cert.active_pieces != active_pieces(f, x) || cert.active_constraints != active_set(d, x) ||
      cert.active_domain != active_set(f.domain(), x))
    return false;
  if (cert.lambda.size() != cert.active_pieces.size() ||
      cert.mu_constraints.size() != cert.active_constraints.size() ||
      cert.mu_domain.size() != cert.active_domain.size() || cert.nu.size() != cert.span_basis.size())
    return false;
  if (!in_row_span(Matrix::vstack(d.eq_matrix(), f.domain().eq_matrix()), cert.span_basis)) return false;

  Vector sum = zeros(p.dim());
  Rational total;
  for (std::size_t k = 0; k < cert.lambda.size(); ++k) {
    if (sgn(cert.lambda[k]) < 0) return false;
    total += cert.lambda[k];
    sum = add(sum, scale(cert.lambda[k], f.pieces()[cert.active_pieces[k]].slope));
  }
  if (total != 1) return false;
  for (std::size_t i = 0; i < cert.mu_constraints.size(); ++i) {
    if (sgn(cert.mu_constraints[i]) < 0) return false;
    sum = add(sum, scale(cert.mu_constraints[i], d.ineq_matrix().row_vector(cert.active_constraints[i])));
  }
  for (std::size_t j = 0; j < cert.mu_domain.size(); ++j) {
    if (sgn(cert.mu_domain[j]) < 0) return false;
    sum = add(sum, scale(cert.mu_domain[j], f.domain().ineq_matrix().row_vector(cert.active_domain[j])));
  }
  for (std::size_t l = 0; l < cert.nu.size(); ++l) sum = add(sum, scale(cert.nu[l], cert.span_basis[l]));
  return is_zero(sum);
}

}  // namespace gpco
