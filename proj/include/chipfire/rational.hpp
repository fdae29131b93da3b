#pragma once

#include <cstdint>
#include <string>

namespace chipfire {

/// Exact rational number on 64-bit words, always in lowest terms with a
/// positive denominator. Arithmetic is checked and throws ResourceError on
/// overflow instead of wrapping. There is no floating point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  /// Accepts "p" or "p/q" with an optional leading '-'.
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }
  bool is_zero() const { return num_ == 0; }

  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

long long checked_lcm(long long a, long long b);

}  // namespace chipfire
