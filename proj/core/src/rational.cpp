#include "gpco/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "gpco/errors.hpp"

namespace gpco {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text) {
  throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) reject(text);
    result = Rational(mpz_class(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) reject(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      reject(text);
    }
    mpz_class num(whole.empty() ? std::string("0") : std::string(whole), 10);
    mpz_class den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    result = Rational(num, den);
    result.canonicalize();
  } else {
    if (!all_digits(body)) reject(text);
    result = Rational(mpz_class(std::string(body), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Vector& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values[i]);
  }
  return out + ")";
}

const Rational& Extended::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("Extended::value() on an infinite value");
  return value_;
}

Extended Extended::operator-() const {
  switch (kind_) {
    case Kind::PosInf:
      return neg_inf();
    case Kind::NegInf:
      return pos_inf();
    case Kind::Finite:
      break;
  }
  return Extended(Rational(-value_));
}

bool operator==(const Extended& a, const Extended& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != Extended::Kind::Finite || a.value_ == b.value_;
}

bool operator<(const Extended& a, const Extended& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  return a.kind_ == Extended::Kind::Finite && a.value_ < b.value_;
}

std::string Extended::str() const {
  switch (kind_) {
    case Kind::PosInf:
      return "+inf";
    case Kind::NegInf:
      return "-inf";
    case Kind::Finite:
      break;
  }
  return to_string(value_);
}

}  // namespace gpco
