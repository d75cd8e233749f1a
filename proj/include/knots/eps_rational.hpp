#pragma once

#include "knots/rational.hpp"

#include <string>

namespace knots {

/// Rational augmented with a formal positive infinitesimal delta:
/// value = std + inf * delta, where 0 < delta << every positive rational.
/// Total order is lexicographic on (std, inf). This models the "very small
/// positive irrational" offsets exactly, so every comparison and floor in the
/// crossing enumeration is deterministic.
///
/// Only affine arithmetic is provided; a product of two infinitesimal parts
/// has no representation here and is deliberately not defined.
class EpsRational {
 public:
  EpsRational() = default;
  EpsRational(Rational std_part) : std_(std::move(std_part)) {}  // NOLINT
  EpsRational(Rational std_part, Rational inf_part)
      : std_(std::move(std_part)), inf_(std::move(inf_part)) {}

  /// The canonical infinitesimal delta itself.
  static EpsRational delta() { return EpsRational(Rational(0), Rational(1)); }

  const Rational& std_part() const { return std_; }
  const Rational& inf_part() const { return inf_; }

  bool is_integer() const { return inf_ == Rational(0) && std_.is_integer(); }

  friend EpsRational operator+(const EpsRational& a, const EpsRational& b) {
    return EpsRational(a.std_ + b.std_, a.inf_ + b.inf_);
  }
  friend EpsRational operator-(const EpsRational& a, const EpsRational& b) {
    return EpsRational(a.std_ - b.std_, a.inf_ - b.inf_);
  }
  EpsRational operator-() const { return EpsRational(-std_, -inf_); }

  /// Scalar multiple by an exact rational (keeps the model affine).
  friend EpsRational operator*(const Rational& c, const EpsRational& x) {
    return EpsRational(c * x.std_, c * x.inf_);
  }

  friend bool operator==(const EpsRational& a, const EpsRational& b) {
    return a.std_ == b.std_ && a.inf_ == b.inf_;
  }
  friend bool operator!=(const EpsRational& a, const EpsRational& b) { return !(a == b); }
  friend bool operator<(const EpsRational& a, const EpsRational& b) {
    if (a.std_ != b.std_) return a.std_ < b.std_;
    return a.inf_ < b.inf_;
  }
  friend bool operator>(const EpsRational& a, const EpsRational& b) { return b < a; }
  friend bool operator<=(const EpsRational& a, const EpsRational& b) { return !(b < a); }
  friend bool operator>=(const EpsRational& a, const EpsRational& b) { return !(a < b); }

  std::string str() const { return std_.str() + "+" + inf_.str() + "d"; }

 private:
  Rational std_{0};
  Rational inf_{0};
};

/// Unique integer n with n <= x < n+1 in the EpsRational order.
inline BigInt floor_eps(const EpsRational& x) {
  if (!x.std_part().is_integer()) return x.std_part().floor();
  BigInt n = x.std_part().num();
  if (x.inf_part() < Rational(0)) return n - 1;
  return n;
}

/// sign(-1)^[x] with the exact infinitesimal-aware floor.
inline int sigma(const EpsRational& x) { return (floor_eps(x) % 2) == 0 ? +1 : -1; }

}  // namespace knots
