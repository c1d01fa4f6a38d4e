#include "gpco/lp.hpp"

#include <atomic>
#include <limits>

#include "gpco/errors.hpp"
#include "gpco/linalg.hpp"

namespace gpco {
namespace {

std::atomic<std::uint64_t> g_certified{0};
std::atomic<std::uint64_t> g_violations{0};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for  min cᵀx, A x = b, x >= 0, b >= 0, where every row
// starts with an identity column (a slack or an artificial).
class Tableau {
 public:
  Tableau(Matrix a, Vector b, std::vector<std::size_t> identity_cols)
      : m_(a.rows()), n_(a.cols()), t_(m_, n_ + 1), basis_(identity_cols),
        identity_cols_(std::move(identity_cols)) {
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) t_(r, c) = a(r, c);
      t_(r, n_) = b[r];
    }
  }

  enum class Result { Optimal, Unbounded };

  // Bland's rule: lowest-index improving column enters; ties in the
  // ratio test go to the lowest-index basic variable.
  Result run(const Vector& cost, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < n_ && entering == kNone; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        if (sgn(reduced_cost(cost, j)) < 0) entering = j;
      }
      if (entering == kNone) return Result::Optimal;

      std::size_t leaving = kNone;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(t_(r, entering)) <= 0) continue;
        Rational ratio = t_(r, n_) / t_(r, entering);
        if (leaving == kNone || ratio < best || (ratio == best && basis_[r] < basis_[leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (leaving == kNone) {
        unbounded_column_ = entering;
        return Result::Unbounded;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_(row, col);
    for (std::size_t c = 0; c <= n_; ++c) t_(row, c) *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || sgn(t_(r, col)) == 0) continue;
      const Rational factor = t_(r, col);
      for (std::size_t c = 0; c <= n_; ++c) t_(r, c) -= factor * t_(row, c);
    }
    basis_[row] = col;
  }

  Rational reduced_cost(const Vector& cost, std::size_t j) const {
    Rational d = cost[j];
    for (std::size_t r = 0; r < m_; ++r) {
      if (sgn(cost[basis_[r]]) != 0) d -= cost[basis_[r]] * t_(r, j);
    }
    return d;
  }

  // π = c_Bᵀ B⁻¹, read off the columns that started as the identity.
  Vector duals(const Vector& cost) const {
    Vector pi(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational acc;
      for (std::size_t r = 0; r < m_; ++r) {
        if (sgn(cost[basis_[r]]) != 0) acc += cost[basis_[r]] * t_(r, identity_cols_[i]);
      }
      pi[i] = acc;
    }
    return pi;
  }

  Vector primal() const {
    Vector x(n_);
    for (std::size_t r = 0; r < m_; ++r) x[basis_[r]] = t_(r, n_);
    return x;
  }

  // Standard-form direction along which the objective decreases forever.
  Vector unbounded_direction() const {
    Vector d(n_);
    d[unbounded_column_] = 1;
    for (std::size_t r = 0; r < m_; ++r) d[basis_[r]] = -t_(r, unbounded_column_);
    return d;
  }

  Rational objective(const Vector& cost) const {
    Rational v;
    for (std::size_t r = 0; r < m_; ++r) v += cost[basis_[r]] * t_(r, n_);
    return v;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  std::size_t rows() const { return m_; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  const Rational& entry(std::size_t r, std::size_t c) const { return t_(r, c); }

 private:
  std::size_t m_;
  std::size_t n_;
  Matrix t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_cols_;
  std::size_t unbounded_column_ = kNone;
};

// Solve Eᵀy = rhs; the caller guarantees consistency.
Vector equality_multipliers(const Matrix& e, const Vector& rhs) {
  if (e.rows() == 0) return {};
  auto solved = solve_linear(e.transpose(), rhs);
  if (auto* s = std::get_if<LinearSolution>(&solved)) return s->solution;
  throw CertificateViolation("lp_solve: stationarity residual is not in the row space of E");
}

LpOutcome solve_unverified(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;

  // x = x0 + K t parametrizes {E x = e}.
  Vector x0(n);
  Matrix kernel = Matrix::identity(n);
  if (lp.eq_matrix.rows() > 0) {
    auto solved = solve_linear(lp.eq_matrix, lp.eq_rhs);
    if (auto* bad = std::get_if<LinearInconsistency>(&solved)) {
      Vector y = bad->left_certificate;
      if (sgn(dot(y, lp.eq_rhs)) > 0) y = scale(-1, y);
      return LpInfeasible{std::move(y), Vector(lp.ineq_matrix.rows())};
    }
    x0 = std::get<LinearSolution>(solved).solution;
    const auto bases = canonical_bases(lp.eq_matrix);
    kernel = Matrix(n, bases.kernel_basis.size());
    for (std::size_t j = 0; j < bases.kernel_basis.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) kernel(i, j) = bases.kernel_basis[j][i];
  }
  const std::size_t k = kernel.cols();
  const std::size_t m = lp.ineq_matrix.rows();

  const Matrix reduced = lp.ineq_matrix.multiply(kernel);
  const Vector reduced_rhs = subtract(lp.ineq_rhs, lp.ineq_matrix.apply(x0));
  const Vector reduced_cost = kernel.apply_transpose(lp.cost);

  // Columns: t+ [0,k), t- [k,2k), slack [2k,2k+m), then artificials.
  std::vector<int> sign(m, 1);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(reduced_rhs[i]) < 0) {
      sign[i] = -1;
      ++artificials;
    }
  }
  const std::size_t slack0 = 2 * k;
  const std::size_t art0 = slack0 + m;
  const std::size_t cols = art0 + artificials;

  Matrix a(m, cols);
  Vector b(m);
  std::vector<std::size_t> identity_cols(m);
  std::vector<bool> is_artificial(cols, false);
  for (std::size_t i = 0, next_art = art0; i < m; ++i) {
    const Rational s = sign[i];
    for (std::size_t j = 0; j < k; ++j) {
      a(i, j) = s * reduced(i, j);
      a(i, k + j) = -s * reduced(i, j);
    }
    a(i, slack0 + i) = s;
    b[i] = s * reduced_rhs[i];
    if (sign[i] < 0) {
      a(i, next_art) = 1;
      is_artificial[next_art] = true;
      identity_cols[i] = next_art++;
    } else {
      identity_cols[i] = slack0 + i;
    }
  }

  Tableau tab(std::move(a), std::move(b), identity_cols);

  // Maps a standard-form multiplier vector π to z = -σπ >= 0.
  auto to_ineq_multipliers = [&](const Vector& pi) {
    Vector z(m);
    for (std::size_t i = 0; i < m; ++i) z[i] = -(sign[i] * pi[i]);
    return z;
  };
  auto to_point = [&](const Vector& std_x) {
    Vector t(k);
    for (std::size_t j = 0; j < k; ++j) t[j] = std_x[j] - std_x[k + j];
    return add(x0, kernel.apply(t));
  };

  if (artificials > 0) {
    Vector phase1_cost(cols);
    for (std::size_t j = art0; j < cols; ++j) phase1_cost[j] = 1;
    tab.run(phase1_cost, std::vector<bool>(cols, true));
    if (sgn(tab.objective(phase1_cost)) > 0) {
      Vector z = to_ineq_multipliers(tab.duals(phase1_cost));
      Vector y = equality_multipliers(lp.eq_matrix, scale(-1, lp.ineq_matrix.apply_transpose(z)));
      return LpInfeasible{std::move(y), std::move(z)};
    }
    // Drive zero-level artificials out of the basis where possible; a row
    // with no non-artificial entry is redundant and its artificial stays.
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (!is_artificial[tab.basic(r)]) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (sgn(tab.entry(r, j)) != 0 && !tab.is_basic(j)) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  Vector cost(cols);
  for (std::size_t j = 0; j < k; ++j) {
    cost[j] = reduced_cost[j];
    cost[k + j] = -reduced_cost[j];
  }
  std::vector<bool> allowed(cols, true);
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;

  if (tab.run(cost, allowed) == Tableau::Result::Unbounded) {
    const Vector d = tab.unbounded_direction();
    Vector t(k);
    for (std::size_t j = 0; j < k; ++j) t[j] = d[j] - d[k + j];
    return LpUnbounded{to_point(tab.primal()), kernel.apply(t)};
  }

  Vector x = to_point(tab.primal());
  Vector z = to_ineq_multipliers(tab.duals(cost));
  Vector residual = add(lp.cost, lp.ineq_matrix.apply_transpose(z));
  Vector y = equality_multipliers(lp.eq_matrix, scale(-1, residual));
  Rational value = dot(lp.cost, x);
  return LpOptimal{std::move(x), std::move(value), std::move(y), std::move(z)};
}

bool all_nonnegative(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) < 0) return false;
  return true;
}

std::optional<std::string> feasibility_defect(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.num_vars) return "point has wrong length";
  if (lp.eq_matrix.apply(x) != lp.eq_rhs) return "point violates an equality";
  const Vector fx = lp.ineq_matrix.apply(x);
  for (std::size_t i = 0; i < fx.size(); ++i)
    if (fx[i] > lp.ineq_rhs[i]) return "point violates inequality " + std::to_string(i);
  return std::nullopt;
}

}  // namespace

LinearProgram LinearProgram::feasibility(std::size_t n) {
  LinearProgram lp;
  lp.num_vars = n;
  lp.cost = Vector(n);
  lp.eq_matrix = Matrix(0, n);
  lp.ineq_matrix = Matrix(0, n);
  return lp;
}

void LinearProgram::add_equality(Vector row, Rational rhs) {
  std::vector<Vector> rows = eq_matrix.row_vectors();
  rows.push_back(std::move(row));
  eq_matrix = Matrix::from_rows(rows, num_vars);
  eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_inequality(Vector row, Rational rhs) {
  std::vector<Vector> rows = ineq_matrix.row_vectors();
  rows.push_back(std::move(row));
  ineq_matrix = Matrix::from_rows(rows, num_vars);
  ineq_rhs.push_back(std::move(rhs));
}

void validate(const LinearProgram& lp) {
  const auto n = lp.num_vars;
  if (lp.cost.size() != n) throw DimensionError("LP cost vector length differs from num_vars");
  if (lp.eq_matrix.cols() != n || lp.eq_matrix.rows() != lp.eq_rhs.size())
    throw DimensionError("LP equality block shape mismatch");
  if (lp.ineq_matrix.cols() != n || lp.ineq_matrix.rows() != lp.ineq_rhs.size())
    throw DimensionError("LP inequality block shape mismatch");
}

std::optional<std::string> certificate_defect(const LinearProgram& lp, const LpOutcome& outcome) {
  const std::size_t meq = lp.eq_matrix.rows();
  const std::size_t min = lp.ineq_matrix.rows();

  if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
    if (auto bad = feasibility_defect(lp, opt->point)) return "optimal: " + *bad;
    if (opt->eq_multipliers.size() != meq || opt->ineq_multipliers.size() != min)
      return "optimal: multiplier lengths";
    if (!all_nonnegative(opt->ineq_multipliers)) return "optimal: negative inequality multiplier";
    Vector stationarity = add(add(lp.cost, lp.eq_matrix.apply_transpose(opt->eq_multipliers)),
                              lp.ineq_matrix.apply_transpose(opt->ineq_multipliers));
    if (!is_zero(stationarity)) return "optimal: stationarity fails";
    const Vector slack = subtract(lp.ineq_rhs, lp.ineq_matrix.apply(opt->point));
    for (std::size_t i = 0; i < min; ++i)
      if (sgn(opt->ineq_multipliers[i]) != 0 && sgn(slack[i]) != 0)
        return "optimal: complementary slackness fails on row " + std::to_string(i);
    const Rational primal = dot(lp.cost, opt->point);
    const Rational dual = -dot(lp.eq_rhs, opt->eq_multipliers) - dot(lp.ineq_rhs, opt->ineq_multipliers);
    if (primal != opt->value || dual != opt->value) return "optimal: duality gap";
    return std::nullopt;
  }
  if (const auto* inf = std::get_if<LpInfeasible>(&outcome)) {
    if (inf->eq_multipliers.size() != meq || inf->ineq_multipliers.size() != min)
      return "infeasible: multiplier lengths";
    if (!all_nonnegative(inf->ineq_multipliers)) return "infeasible: negative multiplier";
    Vector combo = add(lp.eq_matrix.apply_transpose(inf->eq_multipliers),
                       lp.ineq_matrix.apply_transpose(inf->ineq_multipliers));
    if (!is_zero(combo)) return "infeasible: combination of rows is not zero";
    if (sgn(dot(lp.eq_rhs, inf->eq_multipliers) + dot(lp.ineq_rhs, inf->ineq_multipliers)) >= 0)
      return "infeasible: combined right-hand side is not negative";
    return std::nullopt;
  }
  const auto& unb = std::get<LpUnbounded>(outcome);
  if (auto bad = feasibility_defect(lp, unb.point)) return "unbounded: " + *bad;
  if (unb.ray.size() != lp.num_vars) return "unbounded: ray length";
  if (!is_zero(lp.eq_matrix.apply(unb.ray))) return "unbounded: ray leaves the equality set";
  for (const auto& v : lp.ineq_matrix.apply(unb.ray))
    if (sgn(v) > 0) return "unbounded: ray is not a recession direction";
  if (sgn(dot(lp.cost, unb.ray)) >= 0) return "unbounded: ray is not a descent direction";
  return std::nullopt;
}

LpOutcome lp_solve(const LinearProgram& lp) {
  validate(lp);
  LpOutcome outcome = solve_unverified(lp);
  if (auto defect = certificate_defect(lp, outcome)) {
    g_violations.fetch_add(1, std::memory_order_relaxed);
    throw CertificateViolation("lp_solve produced an invalid certificate: " + *defect);
  }
  g_certified.fetch_add(1, std::memory_order_relaxed);
  return outcome;
}

LpAudit lp_audit() {
  return {g_certified.load(std::memory_order_relaxed), g_violations.load(std::memory_order_relaxed)};
}

}  // namespace gpco
