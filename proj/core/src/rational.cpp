#include "wittlab/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace wittlab {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&]() -> BigInt {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail();
    return BigInt(std::string(text.substr(start, pos - start)));
  };
  BigInt num = digits();
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
    if (den.is_zero()) fail();
  }
  if (pos != text.size()) fail();
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string out = num_.str();
  if (den_ != 1) {
    out += '/';
    out += den_.str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long long exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero()) {
    if (exponent < 0) throw std::domain_error("Rational: 0 raised to a negative power");
    return Rational(0);
  }
  const auto e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  BigInt n = mp::pow(base.numerator(), e);
  BigInt d = mp::pow(base.denominator(), e);
  return exponent < 0 ? Rational(std::move(d), std::move(n))
                      : Rational(std::move(n), std::move(d));
}

}  // namespace wittlab
