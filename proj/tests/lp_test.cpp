#include <gtest/gtest.h>

#include "gpco/errors.hpp"
#include "gpco/linalg.hpp"
#include "gpco/lp.hpp"
#include "gpco/sets.hpp"
#include "support/instances.hpp"

namespace gpco {
namespace {

using testing::mat;
using testing::vec;

LinearProgram one_var(const char* cost, std::initializer_list<std::initializer_list<const char*>> rows,
                      std::initializer_list<const char*> rhs) {
  LinearProgram lp = LinearProgram::feasibility(1);
  lp.cost = vec({cost});
  lp.ineq_matrix = mat(rows, 1);
  lp.ineq_rhs = vec(rhs);
  return lp;
}

TEST(LpSolve, ZeroObjectiveIsAFeasibilityQuery) {
  const LinearProgram lp = one_var("0", {{"1"}, {"-1"}}, {"1", "0"});
  const LpOutcome out = lp_solve(lp);
  ASSERT_TRUE(std::holds_alternative<LpOptimal>(out));
  const auto& opt = std::get<LpOptimal>(out);
  EXPECT_EQ(opt.value, 0);
  EXPECT_GE(opt.point[0], 0);
  EXPECT_LE(opt.point[0], 1);
}

TEST(LpSolve, UnboundedRayInOneVariable) {
  const LinearProgram lp = one_var("1", {{"1"}}, {"0"});
  const LpOutcome out = lp_solve(lp);
  ASSERT_TRUE(std::holds_alternative<LpUnbounded>(out));
  EXPECT_EQ(normalize_direction(std::get<LpUnbounded>(out).ray), vec({"-1"}));
}

TEST(LpSolve, FarkasCertificateForContradictoryBounds) {
  const LinearProgram lp = one_var("0", {{"1"}, {"-1"}}, {"-1", "-1"});
  const LpOutcome out = lp_solve(lp);
  ASSERT_TRUE(std::holds_alternative<LpInfeasible>(out));
  const auto& z = std::get<LpInfeasible>(out).ineq_multipliers;
  // Any valid certificate is a positive multiple of (1, 1): 0 <= -2.
  ASSERT_EQ(z.size(), 2u);
  EXPECT_GT(z[0], 0);
  EXPECT_EQ(z[0], z[1]);
  EXPECT_EQ(dot(lp.ineq_rhs, scale(1 / z[0], z)), -2);
  EXPECT_FALSE(certificate_defect(lp, out).has_value());
}

TEST(LpSolve, InconsistentEqualitiesGiveLeftCertificate) {
  LinearProgram lp = LinearProgram::feasibility(2);
  lp.eq_matrix = mat({{"1", "1"}, {"2", "2"}}, 2);
  lp.eq_rhs = vec({"1", "3"});
  const LpOutcome out = lp_solve(lp);
  ASSERT_TRUE(std::holds_alternative<LpInfeasible>(out));
  EXPECT_FALSE(certificate_defect(lp, out).has_value());
}

TEST(LpSolve, EqualitiesAndInequalitiesTogether) {
  // min x + 2y + 3z  s.t. x + y + z = 1, x, y, z >= 0  → value 1 at (1,0,0)
  LinearProgram lp = LinearProgram::feasibility(3);
  lp.cost = vec({"1", "2", "3"});
  lp.add_equality(vec({"1", "1", "1"}), 1);
  for (std::size_t i = 0; i < 3; ++i) lp.add_inequality(scale(-1, unit_vector(3, i)), 0);
  const LpOutcome out = lp_solve(lp);
  ASSERT_TRUE(std::holds_alternative<LpOptimal>(out));
  EXPECT_EQ(std::get<LpOptimal>(out).value, 1);
  EXPECT_EQ(std::get<LpOptimal>(out).point, vec({"1", "0", "0"}));
}

TEST(LpSolve, NoConstraintsAtAll) {
  LinearProgram lp = LinearProgram::feasibility(2);
  EXPECT_TRUE(std::holds_alternative<LpOptimal>(lp_solve(lp)));
  lp.cost = vec({"0", "1"});
  EXPECT_TRUE(std::holds_alternative<LpUnbounded>(lp_solve(lp)));
}

TEST(LpSolve, RejectsMalformedInput) {
  LinearProgram lp = LinearProgram::feasibility(2);
  lp.cost = vec({"1"});
  EXPECT_THROW(lp_solve(lp), DimensionError);
  lp = LinearProgram::feasibility(2);
  lp.ineq_matrix = Matrix(1, 2);
  EXPECT_THROW(lp_solve(lp), DimensionError);
}

TEST(LpSolve, CertificateCheckerCatchesForgedAnswers) {
  const LinearProgram lp = one_var("1", {{"-1"}}, {"0"});  // min x, x >= 0
  EXPECT_TRUE(certificate_defect(lp, LpOptimal{vec({"1"}), 1, {}, vec({"1"})}).has_value());
  EXPECT_TRUE(certificate_defect(lp, LpUnbounded{vec({"0"}), vec({"-1"})}).has_value());
  EXPECT_TRUE(certificate_defect(lp, LpInfeasible{{}, vec({"1"})}).has_value());
  EXPECT_FALSE(certificate_defect(lp, LpOptimal{vec({"0"}), 0, {}, vec({"1"})}).has_value());
}

TEST(LpSolve, DegenerateCyclingCandidateTerminates) {
  // Beale's classic cycling example (in <= form); Bland's rule terminates.
  LinearProgram lp = LinearProgram::feasibility(4);
  lp.cost = vec({"-3/4", "150", "-1/50", "6"});
  lp.add_inequality(vec({"1/4", "-60", "-1/25", "9"}), 0);
  lp.add_inequality(vec({"1/2", "-90", "-1/50", "3"}), 0);
  lp.add_inequality(vec({"0", "0", "1", "0"}), 1);
  for (std::size_t i = 0; i < 4; ++i) lp.add_inequality(scale(-1, unit_vector(4, i)), 0);
  const LpOutcome out = lp_solve(lp);
  ASSERT_TRUE(std::holds_alternative<LpOptimal>(out));
  EXPECT_EQ(std::get<LpOptimal>(out).value, Rational(-1, 20));
}

TEST(LpSolve, DeterministicOutcomes) {
  testing::InstanceGenerator gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    GPolySet d = gen.random_set(3, gen.uniform(0, 1), gen.uniform(1, 5), gen.coin());
    const LinearProgram lp = d.as_lp(gen.small_vector(3));
    const LpOutcome a = lp_solve(lp), b = lp_solve(lp);
    ASSERT_EQ(a.index(), b.index());
    if (const auto* oa = std::get_if<LpOptimal>(&a)) {
      EXPECT_EQ(oa->point, std::get<LpOptimal>(b).point);
      EXPECT_EQ(oa->ineq_multipliers, std::get<LpOptimal>(b).ineq_multipliers);
    }
  }
}

// Bounded instances: the simplex value equals the best enumerated vertex.
TEST(LpSolve, MatchesVertexEnumerationOracle) {
  testing::InstanceGenerator gen(23);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen.uniform(1, 6);
    const std::size_t rows = gen.uniform(1, 10);
    const std::size_t eq = gen.coin(0.3) ? gen.uniform(1, std::min<std::size_t>(2, rows)) : 0;
    GPolySet d = gen.random_set(n, eq, rows - eq, gen.coin());
    const Vector c = gen.small_vector(n);
    const LpOutcome out = lp_solve(d.as_lp(c));
    const auto* opt = std::get_if<LpOptimal>(&out);
    if (opt == nullptr) {
      if (std::holds_alternative<LpInfeasible>(out)) EXPECT_TRUE(generators_oracle(d).vertices.empty());
      continue;
    }
    const Generators gens = generators_oracle(d);
    ASSERT_FALSE(gens.vertices.empty());
    Rational best = dot(c, gens.vertices.front());
    for (const auto& v : gens.vertices) best = std::min(best, Rational(dot(c, v)));
    EXPECT_EQ(opt->value, best);
    ++compared;
  }
  EXPECT_GT(compared, 50);
}

TEST(LpAudit, CountsEveryCertifiedSolve) {
  const LpAudit before = lp_audit();
  lp_solve(LinearProgram::feasibility(1));
  const LpAudit after = lp_audit();
  EXPECT_EQ(after.certified, before.certified + 1);
  EXPECT_EQ(after.violations, 0u);
}

}  // namespace
}  // namespace gpco
