#include "knots/laurent.hpp"

#include <sstream>

namespace knots {

LaurentPoly2 LaurentPoly2::monomial(int ev, int ez, BigInt coeff) {
  LaurentPoly2 p;
  if (coeff != 0) p.terms_[{ev, ez}] = std::move(coeff);
  return p;
}

BigInt LaurentPoly2::coeff(int ev, int ez) const {
  auto it = terms_.find({ev, ez});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly2::add_term(int ev, int ez, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Exp{ev, ez}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LaurentPoly2::min_deg_v() const { return terms_.begin()->first.first; }
int LaurentPoly2::max_deg_v() const { return terms_.rbegin()->first.first; }

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

void LaurentPoly2::mul_monomial(int ev, int ez, const BigInt& coeff) {
  TermMap out;
  if (coeff != 0)
    for (const auto& [e, c] : terms_) out[{e.first + ev, e.second + ez}] = c * coeff;
  terms_ = std::move(out);
}

LaurentPoly2 LaurentPoly2::mirror_v() const {
  LaurentPoly2 r;
  for (const auto& [e, c] : terms_) r.terms_[{-e.first, e.second}] = c;
  return r;
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool has_var = e.first != 0 || e.second != 0;
    if (a != 1 || !has_var) {
      os << a.str();
      if (has_var) os << " ";
    }
    if (e.first != 0) {
      os << "v";
      if (e.first != 1) os << "^" << e.first;
      if (e.second != 0) os << " ";
    }
    if (e.second != 0) {
      os << "z";
      if (e.second != 1) os << "^" << e.second;
    }
    first = false;
  }
  return os.str();
}

}  // namespace knots
