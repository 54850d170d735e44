#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affschur/combination.hpp"
#include "affschur/periodic_matrix.hpp"
#include "affschur/schur_element.hpp"
#include "affschur/weight.hpp"

namespace affschur {

// The symbol A<lambda> with A in Theta^pm(n) and lambda in N^n.
struct VKey {
  PeriodicMatrix matrix;
  Weight lambda;
  auto operator<=>(const VKey&) const = default;
  bool operator==(const VKey&) const = default;
  std::string str() const;
};

// Element of V_Z in the basis A<lambda>.
class VElement : public Combination<VKey, Integer> {
 public:
  VElement() = default;
  explicit VElement(int n) : n_(n) {}

  int n() const { return n_; }
  // Rejects keys outside Theta^pm x N^n or of the wrong size.
  void add_checked(const VKey& k, const Integer& c);

  VElement& operator+=(const VElement& o);
  VElement& operator-=(const VElement& o);
  bool operator==(const VElement& o) const;

  std::string str() const;

 private:
  int n_ = 0;
};

VElement v_basis(const PeriodicMatrix& a, const Weight& lambda);
// 0<0>, the identity.
VElement v_unit(int n);

// The same symbols with rational coefficients, used for the A[j] basis.
class QVElement : public Combination<VKey, Rational> {
 public:
  QVElement() = default;
  explicit QVElement(int n) : n_(n) {}
  int n() const { return n_; }
  bool operator==(const QVElement& o) const;
  std::string str() const;

 private:
  int n_ = 0;
};

QVElement to_rational(const VElement& x);
// Throws DomainError if a coefficient is not an integer.
VElement to_integral(const QVElement& x);

// Left multiplication by 0<mu>, by (sum alpha_i E_{i,i+1})<0> and by
// (sum alpha_i E_{i+1,i})<0>.
VElement vmul_zero(const Weight& mu, const VElement& x);
VElement vmul_E(const Weight& alpha, const VElement& x);
VElement vmul_F(const Weight& alpha, const VElement& x);

// The generators E(alpha), 0<mu>, F(alpha).
struct Generator {
  enum class Kind { E, Zero, F };
  Kind kind;
  Weight weight;

  static Generator e(const Weight& a) { return {Kind::E, a}; }
  static Generator zero(const Weight& mu) { return {Kind::Zero, mu}; }
  static Generator f(const Weight& a) { return {Kind::F, a}; }

  auto operator<=>(const Generator&) const = default;
  bool operator==(const Generator&) const = default;
  std::string str() const;
};

using Word = std::vector<Generator>;
std::string word_str(const Word& w);

VElement apply_generator(const Generator& g, const VElement& x);
// w_1 w_2 ... w_k x, applied right to left.
VElement apply_word(const Word& w, VElement x);
VElement evaluate(const Word& w, int n);

// E-chunks of A+, the diagonal generators 0<lambda_i e_i>, F-chunks of A-.
Word leading_word(const PeriodicMatrix& a, const Weight& lambda);

// Multiplication in V_Z with memoized rewriting.
class VAlgebra {
 public:
  explicit VAlgebra(int n) : n_(n) {}
  int n() const { return n_; }

  VElement mul(const VElement& x, const VElement& y);
  VElement mul_basis(const VKey& b, const VKey& a);

  // A<lambda> as an integer combination of generator words.
  const std::map<Word, Integer>& rewrite(const VKey& k);

  // evaluate(leading_word(A, lambda)), checked to be A<lambda> plus terms
  // A<nu> with nu < lambda and B<nu> with B strictly below A.
  const VElement& leading_product(const VKey& k);

  void clear_products() { products_.clear(); }

 private:
  int n_;
  std::map<VKey, VElement> leads_;
  std::map<VKey, std::map<Word, Integer>> rewrites_;
  std::map<std::pair<VKey, VKey>, VElement> products_;
};

VElement vmul(const VElement& x, const VElement& y);

// A[j] in the A<lambda> basis, and back.
VElement bracket_in_brace(const PeriodicMatrix& a, const Weight& j);
QVElement brace_in_bracket(const PeriodicMatrix& a, const Weight& lambda);
// x in the brace basis -> coefficients in the bracket basis.
QVElement brace_to_bracket(const VElement& x);
// y in the bracket basis -> coefficients in the brace basis.
QVElement bracket_to_brace(const QVElement& y);

// A<lambda> -> A(lambda, r).
SchurElement zeta_r(const VElement& x, long r);

// prod (E_{i,j}<0>)^{a_ij} 0<lambda> prod (E_{i,j}<0>)^{b_ij}, the products
// taken in increasing (i, j) order.
struct PBWMonomial {
  int n = 0;
  std::map<std::pair<long, long>, long> upper;
  Weight diag;
  std::map<std::pair<long, long>, long> lower;

  // Rejects rows outside 1..n, misplaced columns and negative exponents.
  void validate() const;
  std::string str() const;
};

// E_{i,j}<0> for i != j and 0<e_i> for i == j.
VElement loop_generator(int n, long i, long j);

VElement xi_pbw(VAlgebra& alg, const PBWMonomial& m);
VElement xi_pbw(const PBWMonomial& m);

}  // namespace affschur
