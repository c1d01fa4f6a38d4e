#include <gtest/gtest.h>

#include "gpco/errors.hpp"
#include "gpco/functions.hpp"
#include "gpco/linalg.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

namespace gpco {
namespace {

using testing::ex1_function;
using testing::interval;
using testing::mat;
using testing::univariate;
using testing::vec;

using Indices = std::vector<std::size_t>;

GPolyFunc zero_on(GPolySet dom) { return GPolyFunc({{Vector(dom.dim()), 0}}, std::move(dom)); }

TEST(GPolyFunc, RejectsImproperData) {
  EXPECT_THROW(GPolyFunc({}, GPolySet(1)), ImproperFunction);
  EXPECT_THROW(zero_on(GPolySet(Matrix(0, 1), {}, mat({{"1"}, {"-1"}}, 1), vec({"-1", "-1"}))), ImproperFunction);
  EXPECT_THROW(GPolyFunc({{vec({"1", "2"}), 0}}, GPolySet(1)), DimensionError);
}

TEST(GPolyFunc, FromEpigraph) {
  // t >= x1 - x2 + 1, 2t >= -2x1 - 2x2, x1 <= 4.
  const Matrix ineq = mat({{"1", "-1", "-1"}, {"-2", "-2", "-2"}, {"1", "0", "0"}}, 3);
  const GPolyFunc f = GPolyFunc::from_epigraph(Matrix(0, 3), {}, ineq, vec({"-1", "0", "4"}));
  EXPECT_EQ(f.pieces(), ex1_function().pieces());
  EXPECT_EQ(f.domain().ineq_matrix(), mat({{"1", "0"}}, 2));
  EXPECT_EQ(f.domain().ineq_rhs(), vec({"4"}));

  EXPECT_THROW(GPolyFunc::from_epigraph(Matrix(0, 2), {}, mat({{"1", "1"}}, 2), vec({"0"})), ImproperFunction);
  EXPECT_THROW(GPolyFunc::from_epigraph(mat({{"0", "1"}}, 2), vec({"0"}), mat({{"1", "-1"}}, 2), vec({"0"})),
               ImproperFunction);
}

TEST(Evaluate, Examples) {
  const GPolyFunc f = ex1_function();
  EXPECT_EQ(evaluate(f, vec({"0", "0"})), Extended(1));
  EXPECT_EQ(evaluate(f, vec({"-1/2", "2"})), Extended(Rational(-3, 2)));
  EXPECT_TRUE(evaluate(zero_on(interval(1, std::nullopt)), vec({"0"})).is_pos_inf());
  EXPECT_THROW(evaluate(f, vec({"0"})), DimensionError);
}

TEST(ActivePieces, Examples) {
  const GPolyFunc f = ex1_function();
  EXPECT_EQ(active_pieces(f, vec({"0", "0"})), Indices{0});
  EXPECT_EQ(active_pieces(f, vec({"-1/2", "2"})), (Indices{0, 1}));
  EXPECT_EQ(active_pieces(f, vec({"-1", "0"})), Indices{1});
  EXPECT_THROW(active_pieces(zero_on(interval(1, std::nullopt)), vec({"0"})), OutsideDomain);
}

TEST(RecessionValue, Examples) {
  const GPolyFunc f = ex1_function();
  EXPECT_EQ(recession_value(f, vec({"0", "-1"})), Extended(1));
  EXPECT_EQ(recession_value(f, vec({"1", "1"})), Extended(0));
  EXPECT_TRUE(recession_value(zero_on(interval(std::nullopt, 0)), vec({"1"})).is_pos_inf());
  EXPECT_EQ(recession_value(zero_on(interval(std::nullopt, 0)), vec({"-1"})), Extended(0));
}

TEST(DirectionalDerivative, Examples) {
  const GPolyFunc f = ex1_function();
  EXPECT_EQ(directional_derivative(f, vec({"-1/2", "2"}), vec({"1", "0"})), Extended(1));
  EXPECT_EQ(directional_derivative(f, vec({"-1/2", "2"}), vec({"0", "-1"})), Extended(1));
  EXPECT_EQ(directional_derivative(f, vec({"0", "0"}), vec({"5", "7"})), Extended(-2));

  const GPolyFunc g = zero_on(interval(0, 1));
  EXPECT_TRUE(directional_derivative(g, vec({"1"}), vec({"1"})).is_pos_inf());
  EXPECT_EQ(directional_derivative(g, vec({"1"}), vec({"-1"})), Extended(0));
  EXPECT_THROW(directional_derivative(g, vec({"2"}), vec({"1"})), OutsideDomain);
}

TEST(Subdifferential, Examples) {
  const GPolyFunc f = ex1_function();
  const ConicCombo kink = subdifferential_at(f, vec({"-1/2", "2"}));
  EXPECT_EQ(kink.hull, (std::vector<Vector>{vec({"1", "-1"}), vec({"-1", "-1"})}));
  EXPECT_TRUE(kink.cone.empty());
  EXPECT_TRUE(kink.span.empty());

  const ConicCombo smooth = subdifferential_at(f, vec({"0", "0"}));
  EXPECT_EQ(smooth.hull, std::vector<Vector>{vec({"1", "-1"})});
  EXPECT_TRUE(smooth.cone.empty());
  EXPECT_TRUE(smooth.span.empty());

  const GPolySet plane(mat({{"0", "0", "1"}}, 3), vec({"0"}), Matrix(0, 3), {});
  const GPolyFunc linear({{vec({"2", "-1", "3"}), 5}}, plane);
  const ConicCombo sub = subdifferential_at(linear, vec({"7", "1", "0"}));
  EXPECT_EQ(sub.hull, std::vector<Vector>{vec({"2", "-1", "3"})});
  EXPECT_EQ(sub.span, std::vector<Vector>{vec({"0", "0", "1"})});
  EXPECT_TRUE(std::holds_alternative<ConicWitness>(conic_membership(vec({"2", "-1", "-40"}), sub)));
  EXPECT_TRUE(std::holds_alternative<NotMember>(conic_membership(vec({"2", "0", "3"}), sub)));

  // An active domain inequality enters the cone part.
  const ConicCombo edge = subdifferential_at(zero_on(interval(0, 1)), vec({"1"}));
  EXPECT_EQ(edge.cone, std::vector<Vector>{vec({"1"})});
  EXPECT_THROW(subdifferential_at(zero_on(interval(0, 1)), vec({"3"})), OutsideDomain);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate_value(ex1_function(), vec({"0", "-1"})), Extended(Rational(-1, 2)));
  const GPolyFunc abs = univariate({{1, 0}, {-1, 0}});
  EXPECT_EQ(conjugate_value(abs, vec({"0"})), Extended(0));
  EXPECT_TRUE(conjugate_value(abs, vec({"2"})).is_pos_inf());
  EXPECT_EQ(conjugate_value(abs, vec({"-1"})), Extended(0));
  // f = 0 on [0,1] is the indicator, whose conjugate is max(w, 0).
  EXPECT_EQ(conjugate_value(zero_on(interval(0, 1)), vec({"3"})), Extended(3));
  EXPECT_EQ(conjugate_value(zero_on(interval(0, 1)), vec({"-3"})), Extended(0));
}

TEST(IsSubgradient, Examples) {
  const GPolyFunc f = ex1_function();
  const auto kink = is_subgradient(f, vec({"-1/2", "2"}), vec({"0", "-1"}));
  EXPECT_TRUE(kink.is_subgradient);
  EXPECT_TRUE(kink.fenchel_route);
  EXPECT_TRUE(kink.membership_route);
  ASSERT_TRUE(kink.witness.has_value());
  EXPECT_EQ(kink.witness->lambda, vec({"1/2", "1/2"}));

  EXPECT_TRUE(is_subgradient(f, vec({"0", "0"}), vec({"1", "-1"})).is_subgradient);

  // f is unbounded below on Q² (t2 → ∞), so f*(0) = +inf and 0 is no subgradient.
  EXPECT_TRUE(conjugate_value(f, vec({"0", "0"})).is_pos_inf());
  const auto zero = is_subgradient(f, vec({"0", "0"}), vec({"0", "0"}));
  EXPECT_FALSE(zero.is_subgradient);
  EXPECT_FALSE(zero.fenchel_route);
  EXPECT_FALSE(zero.membership_route);

  EXPECT_THROW(is_subgradient(zero_on(interval(0, 1)), vec({"2"}), vec({"0"})), OutsideDomain);
}

class FunctionProperties : public ::testing::Test {
 protected:
  testing::InstanceGenerator gen{202};

  GPolyFunc function() {
    const std::size_t n = gen.uniform(1, 3);
    const std::size_t rows = gen.uniform(0, 4);
    const std::size_t eq = rows > 0 && gen.coin(0.25) ? 1 : 0;
    return gen.random_function(n, eq, rows - eq, gen.coin());
  }

  // A direction that stays in dom f for a while, or an arbitrary one.
  Vector direction(const GPolyFunc& f, const Vector& x) {
    if (gen.coin(0.3)) return gen.small_vector(f.dim());
    return subtract(gen.point_in(f.domain()), x);
  }
};

TEST_F(FunctionProperties, PiecesAreLowerBounds) {
  for (int trial = 0; trial < 200; ++trial) {
    const GPolyFunc f = function();
    const Vector x = gen.point_in(f.domain());
    const Extended fx = evaluate(f, x);
    ASSERT_TRUE(fx.is_finite());
    for (std::size_t k = 0; k < f.pieces().size(); ++k) EXPECT_GE(fx, Extended(f.piece_value(k, x)));
  }
}

TEST_F(FunctionProperties, DirectionalDerivativeMatchesQuotients) {
  int finite = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GPolyFunc f = function();
    const Vector x = gen.point_in(f.domain());
    const Vector h = direction(f, x);
    const Extended d = directional_derivative(f, x, h);
    const testing::QuotientOracle q = testing::directional_quotient(f, x, h);
    EXPECT_EQ(d, q.stabilized) << "x = " << to_string(x) << " h = " << to_string(h);
    if (d.is_finite()) {
      ++finite;
      EXPECT_TRUE(q.monotone);
      EXPECT_TRUE(q.stable);
    }
  }
  EXPECT_GT(finite, 50);
}

TEST_F(FunctionProperties, RecessionValueMatchesSecants) {
  int finite = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GPolyFunc f = function();
    const Vector x = gen.point_in(f.domain());
    const Vector v = gen.coin(0.8) ? gen.recession_direction(f.domain()) : gen.small_vector(f.dim());
    const Extended r = recession_value(f, v);
    const testing::SecantOracle s = testing::recession_secant(f, x, v);
    EXPECT_EQ(r, s.slope) << "v = " << to_string(v);
    if (r.is_finite()) {
      ++finite;
      EXPECT_TRUE(s.agrees);
    }
  }
  EXPECT_GT(finite, 50);
}

TEST_F(FunctionProperties, SubgradientInequalityAndFenchelYoung) {
  for (int trial = 0; trial < 150; ++trial) {
    const GPolyFunc f = function();
    const Vector x = gen.point_in(f.domain());
    const Rational fx = evaluate(f, x).value();

    // A reported subgradient: a combination drawn from the formula.
    const ConicCombo sub = subdifferential_at(f, x);
    Vector w = sub.hull.front();
    for (const auto& u : sub.cone) w = add(w, scale(Rational(static_cast<long>(gen.uniform(0, 2))), u));
    for (const auto& s : sub.span) w = add(w, scale(gen.small_rational(), s));
    const SubgradientCheck check = is_subgradient(f, x, w);
    ASSERT_TRUE(check.is_subgradient);
    for (int s = 0; s < 3; ++s) {
      const Vector u = gen.point_in(f.domain());
      EXPECT_LE(dot(w, subtract(u, x)), evaluate(f, u).value() - fx);
    }

    // Fenchel-Young for an arbitrary w.
    const Vector any = gen.small_vector(f.dim());
    const Extended conj = conjugate_value(f, any);
    if (conj.is_finite()) EXPECT_GE(fx + conj.value(), dot(any, x));
  }
}

TEST_F(FunctionProperties, SubgradientRoutesAgree) {
  int positive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const GPolyFunc f = function();
    const Vector x = gen.point_in(f.domain());
    Vector w;
    if (gen.coin()) {
      const auto& pieces = f.pieces();
      w = pieces[gen.uniform(0, pieces.size() - 1)].slope;
    } else {
      w = gen.small_vector(f.dim());
    }
    // is_subgradient throws CertificateViolation when the routes disagree.
    const SubgradientCheck c = is_subgradient(f, x, w);
    EXPECT_EQ(c.fenchel_route, c.membership_route);
    positive += c.is_subgradient ? 1 : 0;
  }
  EXPECT_GT(positive, 10);
}

}  // namespace
}  // namespace gpco
