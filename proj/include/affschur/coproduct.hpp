#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "affschur/report.hpp"
#include "affschur/vz.hpp"

namespace affschur {

using GeneratorPair = std::pair<Generator, Generator>;

// Delta(E(alpha)) = sum E(a1) (x) E(a2) over a1 + a2 = alpha, likewise for F,
// and Delta(0<mu>) = sum 0<k> (x) 0<mu - k> over k <= mu.
std::map<GeneratorPair, Integer> coproduct_gen(const Generator& g);

// Finite elements of V (x) V and V (x) V (x) V.
class Tensor2 : public Combination<std::pair<VKey, VKey>, Integer> {
 public:
  Tensor2() = default;
  explicit Tensor2(int n) : n_(n) {}
  int n() const { return n_; }
  bool operator==(const Tensor2& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  int n_ = 0;
};

class Tensor3 : public Combination<std::tuple<VKey, VKey, VKey>, Integer> {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n) {}
  int n() const { return n_; }
  bool operator==(const Tensor3& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_ = 0;
};

Tensor2 tensor(const VElement& x, const VElement& y);
Tensor2 swap_factors(const Tensor2& t);
// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
Tensor2 tensor_mul(VAlgebra& alg, const Tensor2& s, const Tensor2& t);

// Delta(g) with both factors evaluated in V.
Tensor2 coproduct_value(const Generator& g, int n);
// Delta(w_1) ... Delta(w_k).
Tensor2 coproduct_monomial(VAlgebra& alg, const Word& w);
// Delta of an element, through the words of rewrite.
Tensor2 coproduct_element(VAlgebra& alg, const VElement& x);

// (Delta (x) id) Delta(g) and (id (x) Delta) Delta(g).
Tensor3 coproduct_left_twice(const Generator& g, int n);
Tensor3 coproduct_right_twice(const Generator& g, int n);

// The counit on generators: zero on E(alpha), F(alpha) with alpha != 0 and
// 0<mu> -> [mu == 0].
Integer counit_gen(const Generator& g);
// zeta_0, read as an integer.
Integer counit(const VElement& x);
VElement counit_left(const Tensor2& t);
VElement counit_right(const Tensor2& t);

// Coassociativity, both counit laws, counit = zeta_0 on generators and
// cocommutativity on 0<t e_i>, over E(alpha), F(alpha) with alpha_i <= max_alpha
// and 0<t e_i> with t <= max_t.
CheckReport verify_coproduct(int n, long max_t, long max_alpha);

// Delta(w) against Delta of the rewritten value of w, for words of length
// <= 2 over small generators. These are instances only.
CheckReport verify_coproduct_words(int n);

}  // namespace affschur
