#include "tsing/rational.hpp"

#include <ostream>

#include "tsing/checked.hpp"
#include "tsing/errors.hpp"

namespace tsing {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow_checked(num);
  r.den_ = narrow_checked(den);
  return r;
}

std::int64_t Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::fractional_part() const { return *this - Rational(floor()); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_sub(0, num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  const __int128 d = static_cast<__int128>(den_) * o.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  // cross-reduce first to keep the 128-bit products small
  const std::int64_t g1 = std::gcd(num_, o.den_);
  const std::int64_t g2 = std::gcd(o.num_, den_);
  const __int128 n = static_cast<__int128>(g1 ? num_ / g1 : num_) * (g2 ? o.num_ / g2 : o.num_);
  const __int128 d = static_cast<__int128>(g2 ? den_ / g2 : den_) * (g1 ? o.den_ / g1 : o.den_);
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero");
  const __int128 n = static_cast<__int128>(num_) * o.den_;
  const __int128 d = static_cast<__int128>(den_) * o.num_;
  return *this = from_wide(n, d);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace tsing
