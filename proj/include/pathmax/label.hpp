#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pathmax {

// Exact non-negative rational value used for edge labels, graph weights
// and path contents. Arithmetic never leaves the domain: there is no
// subtraction and no negation, so (Label, +, *) is a commutative
// semiring with the usual 0 and 1. Division by a nonzero Label is
// provided because the domain is closed under it.
class Label {
 public:
  using Integer = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  Label() = default;  // zero
  Label(std::uint64_t n) : value_(n) {}
  Label(int n);                       // rejects negatives
  explicit Label(const Rational& v);  // rejects negatives
  static Label fraction(const Integer& num, const Integer& den);

  // Accepts "p" or "p/q" with decimal digits only, q != 0.
  static Label parse(std::string_view text);

  Label operator+(const Label& o) const { return Label(value_ + o.value_, 0); }
  Label operator*(const Label& o) const { return Label(value_ * o.value_, 0); }
  Label operator/(const Label& o) const;
  Label& operator+=(const Label& o) {
    value_ += o.value_;
    return *this;
  }
  Label& operator*=(const Label& o) {
    value_ *= o.value_;
    return *this;
  }
  Label pow(std::uint64_t e) const;

  bool operator==(const Label& o) const { return value_ == o.value_; }
  bool operator!=(const Label& o) const { return value_ != o.value_; }
  bool operator<(const Label& o) const { return value_ < o.value_; }
  bool operator<=(const Label& o) const { return value_ <= o.value_; }
  bool operator>(const Label& o) const { return value_ > o.value_; }
  bool operator>=(const Label& o) const { return value_ >= o.value_; }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const;
  Integer numerator() const;
  Integer denominator() const;

  // "p" for integers, "p/q" in lowest terms otherwise.
  std::string str() const;
  // Truncated decimal expansion with `digits` fractional digits; callers
  // must present it as approximate.
  std::string decimal(unsigned digits) const;

  // Raw value, for internal computations that need subtraction
  // (inclusion-exclusion); not part of the semiring interface.
  const Rational& value() const { return value_; }

 private:
  Label(Rational v, int) : value_(std::move(v)) {}  // unchecked
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Label& l);

}  // namespace pathmax
