#include "chipfire/rational.hpp"

#include <cctype>
#include <numeric>

#include "chipfire/errors.hpp"

namespace chipfire {

namespace {

long long checked(__int128 v, const char* op) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw ResourceError(std::string("rational overflow in ") + op);
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw GraphError("rational with zero denominator");
  if (denominator < 0) {
    numerator = checked(-static_cast<__int128>(numerator), "negate");
    denominator = checked(-static_cast<__int128>(denominator), "negate");
  }
  long long g = std::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  num_ = numerator;
  den_ = denominator;
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [](const std::string& s) -> long long {
    if (s.empty()) throw GraphError("empty integer in rational '" + s + "'");
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw GraphError("malformed rational component '" + s + "'");
    }
    if (pos != s.size()) throw GraphError("malformed rational component '" + s + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  return Rational(checked(n, "+"), checked(d, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  // cross-reduce before multiplying to keep words small
  long long g1 = std::gcd(num_, o.den_);
  long long g2 = std::gcd(o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  return Rational(checked(n, "*"), checked(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw GraphError("rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

long long checked_lcm(long long a, long long b) {
  if (a == 0 || b == 0) throw GraphError("lcm of zero");
  __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
  return checked(l < 0 ? -l : l, "lcm");
}

}  // namespace chipfire
