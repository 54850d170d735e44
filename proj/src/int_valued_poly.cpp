#include "affschur/int_valued_poly.hpp"

#include <algorithm>

#include "affschur/binomial.hpp"
#include "affschur/errors.hpp"

namespace affschur {

IntValuedPoly::IntValuedPoly(long c) { add_term(0, Integer(c)); }

IntValuedPoly::IntValuedPoly(const Integer& c) { add_term(0, c); }

IntValuedPoly::IntValuedPoly(std::map<long, Integer> coeffs) {
  for (auto& [k, c] : coeffs) {
    if (k < 0) throw DomainError("binomial basis index must be >= 0");
    add_term(k, c);
  }
}

IntValuedPoly IntValuedPoly::basis(long k) {
  if (k < 0) throw DomainError("binomial basis index must be >= 0");
  IntValuedPoly p;
  p.add_term(k, Integer(1));
  return p;
}

IntValuedPoly IntValuedPoly::binom_shift(const Integer& a, long t) {
  IntValuedPoly p;
  for (long j = 0; j <= t; ++j) p.add_term(j, binom(a, t - j));
  return p;
}

Integer IntValuedPoly::coeff(long k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Integer(0) : it->second;
}

Integer IntValuedPoly::eval(const Integer& x) const {
  Integer out = 0;
  for (const auto& [k, c] : c_) out += c * binom(x, k);
  return out;
}

void IntValuedPoly::add_term(long k, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = c_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

IntValuedPoly& IntValuedPoly::operator+=(const IntValuedPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

IntValuedPoly& IntValuedPoly::operator-=(const IntValuedPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

IntValuedPoly& IntValuedPoly::operator*=(const Integer& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [k, c] : c_) c *= s;
  return *this;
}

IntValuedPoly IntValuedPoly::operator-() const {
  IntValuedPoly p = *this;
  p *= Integer(-1);
  return p;
}

// binom(x,a) binom(x,b) = sum_c multinom(a+b-c; c, a-c, b-c) binom(x, a+b-c)
IntValuedPoly operator*(const IntValuedPoly& p, const IntValuedPoly& q) {
  IntValuedPoly out;
  for (const auto& [a, ca] : p.c_)
    for (const auto& [b, cb] : q.c_) {
      Integer cc = ca * cb;
      for (long c = 0; c <= std::min(a, b); ++c)
        out.add_term(a + b - c, cc * multinom(Integer(a + b - c), {c, a - c, b - c}));
    }
  return out;
}

std::string IntValuedPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : c_) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (k > 0) s += "*C(x," + std::to_string(k) + ")";
  }
  return s;
}

}  // namespace affschur
