#include "affschur/coproduct.hpp"

#include "affschur/errors.hpp"

namespace affschur {

namespace {

Generator with_weight(const Generator& g, const Weight& w) { return {g.kind, w}; }

bool is_unit_generator(const Generator& g) { return g.weight.is_zero(); }

}  // namespace

std::map<GeneratorPair, Integer> coproduct_gen(const Generator& g) {
  if (!g.weight.is_natural()) throw DomainError("generator weights are in N^n");
  std::map<GeneratorPair, Integer> out;
  for (const auto& k : weights_below(g.weight))
    out[{with_weight(g, k), with_weight(g, g.weight - k)}] += 1;
  return out;
}

std::string Tensor2::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + k.first.str() + "(x)" + k.second.str();
  }
  return s;
}

Tensor2 tensor(const VElement& x, const VElement& y) {
  Tensor2 t(x.n());
  for (const auto& [a, c] : x.terms())
    for (const auto& [b, d] : y.terms()) t.add({a, b}, c * d);
  return t;
}

Tensor2 swap_factors(const Tensor2& t) {
  Tensor2 s(t.n());
  for (const auto& [k, c] : t.terms()) s.add({k.second, k.first}, c);
  return s;
}

Tensor2 tensor_mul(VAlgebra& alg, const Tensor2& s, const Tensor2& t) {
  Tensor2 out(alg.n());
  for (const auto& [k1, c1] : s.terms())
    for (const auto& [k2, c2] : t.terms()) {
      const VElement left = alg.mul_basis(k1.first, k2.first);
      const VElement right = alg.mul_basis(k1.second, k2.second);
      const Integer c = c1 * c2;
      for (const auto& [a, x] : left.terms())
        for (const auto& [b, y] : right.terms()) out.add({a, b}, c * x * y);
    }
  return out;
}

Tensor2 coproduct_value(const Generator& g, int n) {
  Tensor2 out(n);
  for (const auto& [gp, c] : coproduct_gen(g)) {
    const Tensor2 t = tensor(evaluate({gp.first}, n), evaluate({gp.second}, n));
    out.add_scaled(t, c);
  }
  return out;
}

Tensor2 coproduct_monomial(VAlgebra& alg, const Word& w) {
  Tensor2 out = tensor(v_unit(alg.n()), v_unit(alg.n()));
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = tensor_mul(alg, coproduct_value(*it, alg.n()), out);
  return out;
}

Tensor2 coproduct_element(VAlgebra& alg, const VElement& x) {
  Tensor2 out(alg.n());
  for (const auto& [k, c] : x.terms()) {
    const auto words = alg.rewrite(k);
    for (const auto& [w, d] : words) out.add_scaled(coproduct_monomial(alg, w), c * d);
  }
  return out;
}

Tensor3 coproduct_left_twice(const Generator& g, int n) {
  Tensor3 out(n);
  for (const auto& [gp, c] : coproduct_gen(g)) {
    const Tensor2 left = coproduct_value(gp.first, n);
    const VElement right = evaluate({gp.second}, n);
    for (const auto& [ab, x] : left.terms())
      for (const auto& [z, y] : right.terms()) out.add({ab.first, ab.second, z}, c * x * y);
  }
  return out;
}

Tensor3 coproduct_right_twice(const Generator& g, int n) {
  Tensor3 out(n);
  for (const auto& [gp, c] : coproduct_gen(g)) {
    const VElement left = evaluate({gp.first}, n);
    const Tensor2 right = coproduct_value(gp.second, n);
    for (const auto& [a, x] : left.terms())
      for (const auto& [bc, y] : right.terms()) out.add({a, bc.first, bc.second}, c * x * y);
  }
  return out;
}

Integer counit_gen(const Generator& g) { return is_unit_generator(g) ? Integer(1) : Integer(0); }

Integer counit(const VElement& x) {
  const SchurElement s = zeta_r(x, 0);
  return s.coeff(PeriodicMatrix(x.n()));
}

VElement counit_left(const Tensor2& t) {
  VElement out(t.n());
  for (const auto& [k, c] : t.terms()) out.add(k.second, c * counit(v_basis(k.first.matrix, k.first.lambda)));
  return out;
}

VElement counit_right(const Tensor2& t) {
  VElement out(t.n());
  for (const auto& [k, c] : t.terms()) out.add(k.first, c * counit(v_basis(k.second.matrix, k.second.lambda)));
  return out;
}

CheckReport verify_coproduct(int n, long max_t, long max_alpha) {
  CheckReport rep;
  rep.name = "coproduct";
  std::vector<Generator> gens;
  Weight top = Weight::zero(n);
  for (int i = 0; i < n; ++i) top[static_cast<std::size_t>(i)] = max_alpha;
  for (const auto& a : weights_below(top)) {
    gens.push_back(Generator::e(a));
    gens.push_back(Generator::f(a));
  }
  for (int i = 1; i <= n; ++i)
    for (long t = 0; t <= max_t; ++t) gens.push_back(Generator::zero(t * Weight::unit(n, i)));

  for (const auto& g : gens) {
    const std::string tag = g.str();
    const VElement value = evaluate({g}, n);
    const Tensor2 d = coproduct_value(g, n);
    rep.record(coproduct_left_twice(g, n) == coproduct_right_twice(g, n), "coassociativity at " + tag);
    rep.record(counit_left(d) == value, "left counit law at " + tag);
    rep.record(counit_right(d) == value, "right counit law at " + tag);
    rep.record(counit_gen(g) == counit(value), "counit differs from zeta_0 at " + tag);
    if (g.kind == Generator::Kind::Zero) rep.record(swap_factors(d) == d, "cocommutativity at " + tag);
  }
  return rep;
}

CheckReport verify_coproduct_words(int n) {
  CheckReport rep;
  rep.name = "coproduct word instances";
  VAlgebra alg(n);
  std::vector<Generator> small;
  for (int i = 1; i <= n; ++i) {
    const Weight e = Weight::unit(n, i);
    small.push_back(Generator::e(e));
    small.push_back(Generator::f(e));
    small.push_back(Generator::zero(e));
  }
  std::vector<Word> words;
  for (const auto& g : small) words.push_back({g});
  for (const auto& g : small)
    for (const auto& h : small) words.push_back({g, h});
  for (const auto& w : words) {
    const VElement x = evaluate(w, n);
    rep.record(coproduct_element(alg, x) == coproduct_monomial(alg, w), "word " + word_str(w));
  }
  return rep;
}

}  // namespace affschur
