#include "knots/circle.hpp"

namespace knots {

EpsRational fold_sin(const EpsRational& x) {
  // Reduce mod 1, then reflect the descending half-wave onto the ascending one.
  BigInt n = floor_eps(x);
  EpsRational y = x - EpsRational(Rational(n));
  const EpsRational quarter{Rational(1, 4)};
  const EpsRational three_quarters{Rational(3, 4)};
  if (y >= quarter && y <= three_quarters) return EpsRational(Rational(1, 2)) - y;
  if (y > three_quarters) return y - EpsRational(Rational(1));
  return y;
}

int compare_sin(const EpsRational& a, const EpsRational& b) {
  EpsRational fa = fold_sin(a), fb = fold_sin(b);
  if (fa < fb) return -1;
  if (fb < fa) return +1;
  return 0;
}

}  // namespace knots
