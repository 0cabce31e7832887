#include "subsums/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "subsums/errors.hpp"

namespace subsums {

namespace {

using i128 = __int128;

long long checked_narrow(i128 v, const char* what) {
  if (v > i128(0x7fffffffffffffffLL) || v < -i128(0x7fffffffffffffffLL)) {
    throw DomainError(std::string("rational overflow in ") + what);
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational");
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      long long num = std::stoll(s.substr(0, slash), &p1);
      long long den = std::stoll(s.substr(slash + 1), &p2);
      if (p1 != slash || p2 != s.size() - slash - 1) {
        throw DomainError("trailing characters in rational '" + s + "'");
      }
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
      std::size_t p = 0;
      long long v = std::stoll(s, &p);
      if (p != s.size()) throw DomainError("trailing characters in rational '" + s + "'");
      return Rational(v, 1);
    }
    // decimal: sign, integer part, fractional digits
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (fp.empty()) throw DomainError("missing digits after '.' in '" + s + "'");
    if (fp.size() > 17) throw DomainError("decimal '" + s + "' has too many digits; use p/q");
    bool neg = !ip.empty() && ip[0] == '-';
    if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    for (char c : ip)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw DomainError("bad rational '" + s + "'");
    for (char c : fp)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw DomainError("bad rational '" + s + "'");
    i128 den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    i128 num = 0;
    for (char c : ip) num = num * 10 + (c - '0');
    num *= den;
    i128 frac = 0;
    for (char c : fp) frac = frac * 10 + (c - '0');
    num += frac;
    if (neg) num = -num;
    return Rational(checked_narrow(num, "decimal parse"), checked_narrow(den, "decimal parse"));
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw DomainError("rational '" + s + "' out of 64-bit range");
  }
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  // normalize in the 128-bit domain before narrowing
  i128 g = n < 0 ? -n : n;
  i128 dd = d;
  while (dd != 0) {
    i128 t = g % dd;
    g = dd;
    dd = t;
  }
  if (g == 0) g = 1;
  return Rational(checked_narrow(n / g, "add"), checked_narrow(d / g, "add"));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  // cross-reduce first to keep intermediates small
  long long g1 = std::gcd(std::llabs(num_), o.den_);
  long long g2 = std::gcd(std::llabs(o.num_), den_);
  i128 n = i128(num_ / g1) * (o.num_ / g2);
  i128 d = i128(den_ / g2) * (o.den_ / g1);
  return Rational(checked_narrow(n, "mul"), checked_narrow(d, "mul"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

bool Rational::operator<=(const Rational& o) const {
  return i128(num_) * o.den_ <= i128(o.num_) * den_;
}

}  // namespace subsums
