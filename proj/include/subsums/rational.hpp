#pragma once

#include <string>
#include <string_view>

namespace subsums {

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (gcd 1, den > 0). Arithmetic and comparisons run through 128-bit
/// intermediates; anything that would leave the 64-bit range throws
/// DomainError instead of overflowing silently.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num, long long den);

  /// Accepts "p/q", plain integers, and decimal strings ("0.25").
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool positive() const { return num_ > 0; }
  double to_double() const;
  std::string str() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  long long num_;
  long long den_;
};

}  // namespace subsums
