#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gpco {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Accepts "[+-]digits", "[+-]p/q" and finite decimals such as "-0.25".
/// Throws ParseError on anything else (including "nan", "1e3", "1/0").
Rational parse_rational(std::string_view text);

/// Canonical text: "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);

std::string to_string(const Vector& values);

/// A rational extended by the two infinities. Used for values of
/// proper convex functions (+inf off the domain), support functions and
/// dual objectives (-inf).
class Extended {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  Extended(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  Extended(long value) : kind_(Kind::Finite), value_(value) {}  // NOLINT

  static Extended pos_inf() { return Extended(Kind::PosInf); }
  static Extended neg_inf() { return Extended(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Throws std::logic_error when not finite.
  const Rational& value() const;

  Extended operator-() const;

  friend bool operator==(const Extended& a, const Extended& b);
  friend bool operator<(const Extended& a, const Extended& b);
  friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

  /// "+inf", "-inf", or the canonical rational text.
  std::string str() const;

 private:
  explicit Extended(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

}  // namespace gpco
