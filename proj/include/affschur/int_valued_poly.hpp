#pragma once

#include <map>
#include <string>

#include "affschur/integer.hpp"

namespace affschur {

// sum_k c_k binom(x, k) with integer c_k: the ring of integer-valued
// polynomials in x, written in its binomial basis.
class IntValuedPoly {
 public:
  IntValuedPoly() = default;
  IntValuedPoly(long c);  // NOLINT: constants convert implicitly
  IntValuedPoly(const Integer& c);  // NOLINT
  explicit IntValuedPoly(std::map<long, Integer> coeffs);

  // binom(x, k)
  static IntValuedPoly basis(long k);
  // binom(x + a, t) = sum_j binom(a, t - j) binom(x, j)
  static IntValuedPoly binom_shift(const Integer& a, long t);

  const std::map<long, Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  Integer coeff(long k) const;

  Integer eval(const Integer& x) const;
  Integer at_zero() const { return coeff(0); }

  IntValuedPoly& operator+=(const IntValuedPoly& o);
  IntValuedPoly& operator-=(const IntValuedPoly& o);
  IntValuedPoly& operator*=(const Integer& s);
  friend IntValuedPoly operator+(IntValuedPoly a, const IntValuedPoly& b) { return a += b; }
  friend IntValuedPoly operator-(IntValuedPoly a, const IntValuedPoly& b) { return a -= b; }
  friend IntValuedPoly operator*(const IntValuedPoly& a, const IntValuedPoly& b);
  friend IntValuedPoly operator*(IntValuedPoly a, const Integer& s) { return a *= s; }
  IntValuedPoly operator-() const;

  bool operator==(const IntValuedPoly& o) const { return c_ == o.c_; }

  std::string str() const;

 private:
  void add_term(long k, const Integer& c);
  std::map<long, Integer> c_;
};

}  // namespace affschur
