#pragma once

#include "knots/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace knots {

/// Sparse two-variable Laurent polynomial over the integers, variables (v, z).
/// Terms are keyed by exponent pairs; zero coefficients are never stored.
class LaurentPoly2 {
 public:
  using Exp = std::pair<int, int>;  // (e_v, e_z)
  using TermMap = std::map<Exp, BigInt>;

  LaurentPoly2() = default;

  static LaurentPoly2 zero() { return LaurentPoly2(); }
  static LaurentPoly2 one() { return monomial(0, 0, 1); }
  static LaurentPoly2 monomial(int ev, int ez, BigInt coeff);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  BigInt coeff(int ev, int ez) const;

  void add_term(int ev, int ez, const BigInt& c);

  /// Smallest / largest exponent of v over the support; polynomial must be nonzero.
  int min_deg_v() const;
  int max_deg_v() const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;

  /// Multiply in place by coeff * v^ev * z^ez.
  void mul_monomial(int ev, int ez, const BigInt& coeff);

  /// Image under v -> 1/v (mirror of the underlying knot, z fixed).
  LaurentPoly2 mirror_v() const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

  /// Human-readable form, deterministic term order, e.g. "2 v^2 - v^4 + v^2 z^2".
  std::string str() const;

 private:
  TermMap terms_;
};

}  // namespace knots
