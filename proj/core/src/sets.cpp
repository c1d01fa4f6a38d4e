#include "gpco/sets.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gpco/errors.hpp"
#include "gpco/linalg.hpp"

namespace gpco {
namespace {

void require_dim(const GPolySet& d, const Vector& x, const char* what) {
  if (x.size() != d.dim()) {
    throw DimensionError(std::string(what) + ": vector has " + std::to_string(x.size()) +
                         " entries, set lives in dimension " + std::to_string(d.dim()));
  }
}

void require_member(const GPolySet& d, const Vector& x, const char* what) {
  require_dim(d, x, what);
  if (!contains(d, x)) throw PointNotInSet(std::string(what) + ": point " + to_string(x) + " is not in the set");
}

// Calls visit(subset) for every size-k subset of {0,..,n-1} in
// lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void push_unique(std::vector<Vector>& out, Vector v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

}  // namespace

GPolySet::GPolySet(std::size_t dim)
    : dim_(dim), eq_matrix_(0, dim), ineq_matrix_(0, dim) {}

GPolySet::GPolySet(Matrix eq_matrix, Vector eq_rhs, Matrix ineq_matrix, Vector ineq_rhs)
    : dim_(eq_matrix.cols()),
      eq_matrix_(std::move(eq_matrix)),
      eq_rhs_(std::move(eq_rhs)),
      ineq_matrix_(std::move(ineq_matrix)),
      ineq_rhs_(std::move(ineq_rhs)) {
  if (ineq_matrix_.cols() != dim_)
    throw DimensionError("equality and inequality blocks have different widths");
  if (eq_matrix_.rows() != eq_rhs_.size())
    throw DimensionError("equality block: " + std::to_string(eq_matrix_.rows()) + " rows but " +
                         std::to_string(eq_rhs_.size()) + " right-hand sides");
  if (ineq_matrix_.rows() != ineq_rhs_.size())
    throw DimensionError("inequality block: " + std::to_string(ineq_matrix_.rows()) + " rows but " +
                         std::to_string(ineq_rhs_.size()) + " right-hand sides");
}

LinearProgram GPolySet::as_lp(Vector cost) const {
  LinearProgram lp;
  lp.num_vars = dim_;
  lp.cost = std::move(cost);
  lp.eq_matrix = eq_matrix_;
  lp.eq_rhs = eq_rhs_;
  lp.ineq_matrix = ineq_matrix_;
  lp.ineq_rhs = ineq_rhs_;
  return lp;
}

bool contains(const GPolySet& d, const Vector& x) {
  require_dim(d, x, "contains");
  if (d.eq_matrix().apply(x) != d.eq_rhs()) return false;
  const Vector gx = d.ineq_matrix().apply(x);
  for (std::size_t i = 0; i < gx.size(); ++i)
    if (gx[i] > d.ineq_rhs()[i]) return false;
  return true;
}

bool is_empty(const GPolySet& d) {
  return std::holds_alternative<LpInfeasible>(lp_solve(d.as_lp(zeros(d.dim()))));
}

std::vector<std::size_t> active_set(const GPolySet& d, const Vector& x) {
  require_member(d, x, "active_set");
  std::vector<std::size_t> active;
  const Vector gx = d.ineq_matrix().apply(x);
  for (std::size_t i = 0; i < gx.size(); ++i)
    if (gx[i] == d.ineq_rhs()[i]) active.push_back(i);
  return active;
}

RecessionCone recession_cone(const GPolySet& d) {
  GPolySet cone(d.eq_matrix(), zeros(d.num_eq()), d.ineq_matrix(), zeros(d.num_ineq()));
  return {std::move(cone), is_empty(d)};
}

GPolySet tangent_cone(const GPolySet& d, const Vector& x) {
  const auto active = active_set(d, x);
  return GPolySet(d.eq_matrix(), zeros(d.num_eq()), d.ineq_matrix().select_rows(active),
                  zeros(active.size()));
}

ConicCombo normal_cone(const GPolySet& d, const Vector& x) {
  ConicCombo combo;
  combo.dim = d.dim();
  for (auto i : active_set(d, x)) combo.cone.push_back(d.ineq_matrix().row_vector(i));
  combo.span = canonical_bases(d.eq_matrix()).rowspace_basis;
  combo.empty_hull = EmptyHull::PureCone;
  return combo;
}

Extended support_value(const GPolySet& d, const Vector& w) {
  require_dim(d, w, "support_value");
  const LpOutcome out = lp_solve(d.as_lp(scale(-1, w)));
  if (const auto* opt = std::get_if<LpOptimal>(&out)) return Extended(Rational(-opt->value));
  if (std::holds_alternative<LpUnbounded>(out)) return Extended::pos_inf();
  throw EmptySetError("support_value: the set is empty");
}

MembershipResult conic_membership(const Vector& target, const ConicCombo& combo) {
  const std::size_t n = combo.dim;
  if (target.size() != n) throw DimensionError("conic_membership: target has wrong dimension");
  for (const auto* group : {&combo.hull, &combo.cone, &combo.span})
    for (const auto& g : *group)
      if (g.size() != n) throw DimensionError("conic_membership: generator has wrong dimension");

  const std::size_t nw = combo.hull.size();
  const std::size_t nu = combo.cone.size();
  const std::size_t ns = combo.span.size();
  const std::size_t vars = nw + nu + ns;
  const bool hull_row = combo.requires_hull();

  LinearProgram lp;
  lp.num_vars = vars;
  lp.cost = zeros(vars);
  lp.eq_matrix = Matrix(n + (hull_row ? 1 : 0), vars);
  lp.eq_rhs = target;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < nw; ++k) lp.eq_matrix(r, k) = combo.hull[k][r];
    for (std::size_t j = 0; j < nu; ++j) lp.eq_matrix(r, nw + j) = combo.cone[j][r];
    for (std::size_t l = 0; l < ns; ++l) lp.eq_matrix(r, nw + nu + l) = combo.span[l][r];
  }
  if (hull_row) {
    for (std::size_t k = 0; k < nw; ++k) lp.eq_matrix(n, k) = 1;
    lp.eq_rhs.push_back(1);
  }
  lp.ineq_matrix = Matrix(nw + nu, vars);
  lp.ineq_rhs = zeros(nw + nu);
  for (std::size_t i = 0; i < nw + nu; ++i) lp.ineq_matrix(i, i) = -1;

  LpOutcome out = lp_solve(lp);
  MembershipResult result;
  if (auto* opt = std::get_if<LpOptimal>(&out)) {
    const auto& p = opt->point;
    ConicWitness w;
    w.lambda.assign(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(nw));
    w.mu.assign(p.begin() + static_cast<std::ptrdiff_t>(nw),
                p.begin() + static_cast<std::ptrdiff_t>(nw + nu));
    w.nu.assign(p.begin() + static_cast<std::ptrdiff_t>(nw + nu), p.end());
    result = std::move(w);
  } else {
    auto& farkas = std::get<LpInfeasible>(out);
    NotMember nm;
    nm.separator.assign(farkas.eq_multipliers.begin(),
                        farkas.eq_multipliers.begin() + static_cast<std::ptrdiff_t>(n));
    nm.offset = hull_row ? farkas.eq_multipliers[n] : Rational(0);
    nm.farkas = std::move(farkas);
    result = std::move(nm);
  }
  if (!verify_membership(target, combo, result))
    throw CertificateViolation("conic_membership: result failed exact verification");
  return result;
}

bool verify_membership(const Vector& target, const ConicCombo& combo, const MembershipResult& result) {
  const std::size_t n = combo.dim;
  if (const auto* w = std::get_if<ConicWitness>(&result)) {
    if (w->lambda.size() != combo.hull.size() || w->mu.size() != combo.cone.size() ||
        w->nu.size() != combo.span.size())
      return false;
    Vector sum(n);
    Rational total;
    for (std::size_t k = 0; k < combo.hull.size(); ++k) {
      if (sgn(w->lambda[k]) < 0) return false;
      total += w->lambda[k];
      sum = add(sum, scale(w->lambda[k], combo.hull[k]));
    }
    if (combo.requires_hull() && total != 1) return false;
    for (std::size_t j = 0; j < combo.cone.size(); ++j) {
      if (sgn(w->mu[j]) < 0) return false;
      sum = add(sum, scale(w->mu[j], combo.cone[j]));
    }
    for (std::size_t l = 0; l < combo.span.size(); ++l) sum = add(sum, scale(w->nu[l], combo.span[l]));
    return sum == target;
  }
  const auto& nm = std::get<NotMember>(result);
  if (nm.separator.size() != n) return false;
  if (!combo.requires_hull() && sgn(nm.offset) != 0) return false;
  if (sgn(dot(target, nm.separator) + nm.offset) >= 0) return false;
  for (const auto& g : combo.hull)
    if (sgn(dot(g, nm.separator) + nm.offset) < 0) return false;
  for (const auto& g : combo.cone)
    if (sgn(dot(g, nm.separator)) < 0) return false;
  for (const auto& g : combo.span)
    if (sgn(dot(g, nm.separator)) != 0) return false;
  return true;
}

GPolySet intersect(const GPolySet& a, const GPolySet& b) {
  if (a.dim() != b.dim()) throw DimensionError("intersect: dimensions differ");
  Vector eq_rhs = a.eq_rhs();
  eq_rhs.insert(eq_rhs.end(), b.eq_rhs().begin(), b.eq_rhs().end());
  Vector ineq_rhs = a.ineq_rhs();
  ineq_rhs.insert(ineq_rhs.end(), b.ineq_rhs().begin(), b.ineq_rhs().end());
  return GPolySet(Matrix::vstack(a.eq_matrix(), b.eq_matrix()), std::move(eq_rhs),
                  Matrix::vstack(a.ineq_matrix(), b.ineq_matrix()), std::move(ineq_rhs));
}

Vector normalize_direction(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return scale(1 / Rational(abs(x)), v);
  }
  return v;
}

Generators generators_oracle(const GPolySet& d, std::size_t max_dim) {
  const std::size_t n = d.dim();
  if (n > max_dim) {
    throw ScaleExceeded("generators_oracle: dimension " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(max_dim));
  }
  Generators out;
  if (is_empty(d)) return out;

  out.lineality_basis = canonical_bases(Matrix::vstack(d.eq_matrix(), d.ineq_matrix())).kernel_basis;

  // Restrict to the orthogonal complement of the lineality space; the
  // restriction is pointed, so vertices and extreme rays exist.
  Matrix eq = Matrix::vstack(d.eq_matrix(), rows_matrix(out.lineality_basis, n));
  Vector eq_rhs = d.eq_rhs();
  eq_rhs.resize(eq.rows());
  const std::size_t eq_rank = canonical_bases(eq).rank;
  const Matrix& g = d.ineq_matrix();

  auto stacked = [&](const std::vector<std::size_t>& rows) {
    return Matrix::vstack(eq, g.select_rows(rows));
  };

  for_each_subset(g.rows(), n - eq_rank, [&](const std::vector<std::size_t>& rows) {
    Matrix m = stacked(rows);
    if (canonical_bases(m).rank != n) return;
    Vector rhs = eq_rhs;
    for (auto i : rows) rhs.push_back(d.ineq_rhs()[i]);
    auto solved = solve_linear(m, rhs);
    if (auto* s = std::get_if<LinearSolution>(&solved)) {
      if (contains(d, s->solution)) push_unique(out.vertices, s->solution);
    }
  });

  if (eq_rank < n) {
    for_each_subset(g.rows(), n - 1 - eq_rank, [&](const std::vector<std::size_t>& rows) {
      auto bases = canonical_bases(stacked(rows));
      if (bases.rank != n - 1) return;
      const Vector& dir = bases.kernel_basis.front();
      for (int sign : {1, -1}) {
        Vector v = scale(Rational(sign), dir);
        bool recedes = true;
        for (const auto& gv : g.apply(v)) recedes = recedes && sgn(gv) <= 0;
        if (recedes) push_unique(out.extreme_rays, normalize_direction(v));
      }
    });
  }
  return out;
}

}  // namespace gpco
