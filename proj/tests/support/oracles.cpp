#include "support/oracles.hpp"

#include <algorithm>

#include "gpco/linalg.hpp"

namespace gpco::testing {
namespace {

// f along the line x + s d is max_k (a_k + b_k s) on the part of the
// line inside dom f. Collect the positive parameters where either two
// pieces cross or a domain row becomes tight.
struct LineEvents {
  std::vector<Rational> events;
  bool leaves_immediately = false;  // d is not admissible at s = 0+
};

LineEvents line_events(const GPolyFunc& f, const Vector& x, const Vector& d) {
  LineEvents out;
  const auto& pieces = f.pieces();
  for (std::size_t k = 0; k < pieces.size(); ++k)
    for (std::size_t l = k + 1; l < pieces.size(); ++l) {
      const Rational bk = dot(pieces[k].slope, d), bl = dot(pieces[l].slope, d);
      if (bk == bl) continue;
      const Rational ak = f.piece_value(k, x), al = f.piece_value(l, x);
      const Rational s = (al - ak) / (bk - bl);
      if (sgn(s) > 0) out.events.push_back(s);
    }
  const auto& dom = f.domain();
  if (!is_zero(dom.eq_matrix().apply(d))) out.leaves_immediately = true;
  const Vector ux = dom.ineq_matrix().apply(x);
  const Vector ud = dom.ineq_matrix().apply(d);
  for (std::size_t j = 0; j < ud.size(); ++j) {
    if (sgn(ud[j]) <= 0) continue;
    const Rational s = (dom.ineq_rhs()[j] - ux[j]) / ud[j];
    if (sgn(s) == 0) out.leaves_immediately = true;
    else out.events.push_back(s);
  }
  return out;
}

Vector along(const Vector& x, const Rational& s, const Vector& d) { return add(x, scale(s, d)); }

Extended quotient(const GPolyFunc& f, const Vector& x, const Rational& t, const Vector& h) {
  const Extended ft = evaluate(f, along(x, t, h));
  if (!ft.is_finite()) return ft;
  return Extended(Rational((ft.value() - evaluate(f, x).value()) / t));
}

}  // namespace

QuotientOracle directional_quotient(const GPolyFunc& f, const Vector& x, const Vector& h) {
  QuotientOracle out{Extended::pos_inf()};
  const LineEvents ev = line_events(f, x, h);
  Rational limit = 1;
  for (const auto& s : ev.events) limit = std::min(limit, s);

  Rational t = 1;
  Extended previous = quotient(f, x, t, h);
  while (t >= limit) {
    t /= 2;
    const Extended q = quotient(f, x, t, h);
    if (q > previous) out.monotone = false;
    previous = q;
  }
  out.stabilized = previous;
  out.stable = quotient(f, x, t / 2, h) == previous;
  if (ev.leaves_immediately && previous.is_finite()) out.stable = false;
  return out;
}

SecantOracle recession_secant(const GPolyFunc& f, const Vector& x, const Vector& v) {
  const LineEvents ev = line_events(f, x, v);
  Rational past = 1;
  for (const auto& s : ev.events) past = std::max(past, s);
  mpz_class t1 = past.get_num() / past.get_den() + 1;
  const Rational T1(t1), T2(2 * t1 + 7), T3(2 * (2 * t1 + 7));

  auto secant = [&](const Rational& a, const Rational& b) -> Extended {
    const Extended fa = evaluate(f, along(x, a, v));
    const Extended fb = evaluate(f, along(x, b, v));
    if (!fa.is_finite() || !fb.is_finite()) return Extended::pos_inf();
    return Extended(Rational((fb.value() - fa.value()) / (b - a)));
  };
  SecantOracle out{secant(T1, T2)};
  out.agrees = secant(T2, T3) == out.slope;
  return out;
}

GPolySet epigraph_set(const Problem& p) {
  const LinearProgram lp = p.epigraph_program();
  return GPolySet(lp.eq_matrix, lp.eq_rhs, lp.ineq_matrix, lp.ineq_rhs);
}

std::optional<Rational> vertex_minimum(const Problem& p) {
  const Generators gens = generators_oracle(epigraph_set(p));
  std::optional<Rational> best;
  for (const auto& vertex : gens.vertices) {
    const Rational& t = vertex.back();
    if (!best || t < *best) best = t;
  }
  return best;
}

Extended support_by_generators(const GPolySet& d, const Vector& w) {
  const Generators gens = generators_oracle(d);
  for (const auto& r : gens.extreme_rays)
    if (sgn(dot(w, r)) > 0) return Extended::pos_inf();
  for (const auto& l : gens.lineality_basis)
    if (sgn(dot(w, l)) != 0) return Extended::pos_inf();
  std::optional<Rational> best;
  for (const auto& vertex : gens.vertices) {
    Rational value = dot(w, vertex);
    if (!best || value > *best) best = value;
  }
  return Extended(*best);
}

}  // namespace gpco::testing
