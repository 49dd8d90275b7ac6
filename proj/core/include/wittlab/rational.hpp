#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wittlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary-precision numerator over a positive
/// arbitrary-precision denominator, always stored in lowest terms. Every
/// operation in the library is exact; there is no floating-point mode and
/// no rounding anywhere.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : num_(value) {}
  Rational(BigInt value) : num_(std::move(value)) {}
  Rational(BigInt numerator, BigInt denominator);

  /// Parses "p" or "p/q" with an optional leading sign.
  /// Throws std::invalid_argument on malformed input or q = 0.
  static Rational from_string(std::string_view text);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

Rational abs(const Rational& r);

/// Exact integer power; negative exponents invert (base 0 then throws
/// std::domain_error).
Rational pow(const Rational& base, long long exponent);

}  // namespace wittlab
