#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace knots {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(std::int64_t num, std::int64_t den) : v_(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {}

  const BigInt num() const { return boost::multiprecision::numerator(v_); }
  const BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_integer() const { return den() == 1; }

  /// Largest integer n with n <= *this.
  BigInt floor() const {
    BigInt n = num(), d = den();
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.v_ / b.v_); }
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.convert_to<double>(); }

  /// Serialized as "num/den", e.g. "3/4", "-7/1".
  std::string str() const { return num().str() + "/" + den().str(); }

  /// Parses the "num/den" form; throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }

 private:
  explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}
  boost::multiprecision::cpp_rational v_;
};

/// sign(-1)^[r] for exact rational r.
inline int sigma(const Rational& r) { return (r.floor() % 2) == 0 ? +1 : -1; }

}  // namespace knots
