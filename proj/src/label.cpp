#include "pathmax/label.hpp"

#include <cctype>
#include <ostream>

#include "pathmax/errors.hpp"

namespace pathmax {

Label::Label(int n) {
  if (n < 0) throw HypothesisError("labels must be non-negative");
  value_ = n;
}

Label::Label(const Rational& v) {
  if (v < 0) throw HypothesisError("labels must be non-negative");
  value_ = v;
}

Label Label::fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw HypothesisError("label denominator must be nonzero");
  if (num < 0 || den < 0) throw HypothesisError("labels must be non-negative");
  return Label(Rational(num, den), 0);
}

Label Label::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(text))
      throw ParseError("bad label '" + std::string(text) +
                       "': expected p or p/q with decimal digits");
    return Label(Rational(Integer(std::string(text))), 0);
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("bad label '" + std::string(text) +
                     "': expected p or p/q with decimal digits");
  try {
    return fraction(Integer(std::string(num)), Integer(std::string(den)));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Label Label::operator/(const Label& o) const {
  if (o.is_zero()) throw HypothesisError("division by zero label");
  return Label(value_ / o.value_, 0);
}

Label Label::pow(std::uint64_t e) const {
  Rational r = 1;
  Rational base = value_;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return Label(std::move(r), 0);
}

bool Label::is_integer() const {
  return boost::multiprecision::denominator(value_) == 1;
}

Label::Integer Label::numerator() const {
  return boost::multiprecision::numerator(value_);
}

Label::Integer Label::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string Label::str() const { return value_.str(); }

std::string Label::decimal(unsigned digits) const {
  Integer num = numerator();
  Integer den = denominator();
  Integer whole = num / den;
  Integer rem = num % den;
  std::string out = whole.str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned i = 0; i < digits; ++i) {
    rem *= 10;
    Integer digit = rem / den;
    out += digit.str();
    rem %= den;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Label& l) {
  return os << l.str();
}

}  // namespace pathmax
