#include <random>

#include "affschur/binomial.hpp"
#include "affschur/errors.hpp"
#include "affschur/schur.hpp"
#include "affschur/vz.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace affschur;

namespace {

PeriodicMatrix E(int n, long i, long j) { return PeriodicMatrix::unit(n, i, j); }
Weight eps(int n, long i) { return Weight::unit(n, i); }
Weight Z(int n) { return Weight::zero(n); }

VElement V(std::initializer_list<std::tuple<PeriodicMatrix, Weight, long>> terms) {
  VElement x(std::get<0>(*terms.begin()).n());
  for (const auto& [a, l, c] : terms) x.add_checked({a, l}, Integer(c));
  return x;
}

// Stirling numbers of the second kind.
Integer stirling2(long j, long k) {
  std::vector<std::vector<Integer>> s(static_cast<std::size_t>(j + 1), std::vector<Integer>(static_cast<std::size_t>(j + 1), 0));
  s[0][0] = 1;
  for (long a = 1; a <= j; ++a)
    for (long b = 1; b <= a; ++b)
      s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          b * s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] +
          s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
  return k <= j ? s[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] : Integer(0);
}

// lambda^j = sum_kappa prod_i S(j_i, kappa_i) kappa_i! binom(lambda_i, kappa_i)
VElement bracket_by_stirling(const PeriodicMatrix& a, const Weight& j) {
  VElement x(a.n());
  for (const auto& kappa : weights_below(j)) {
    Integer c = 1;
    for (std::size_t i = 0; i < j.coords().size(); ++i) c *= stirling2(j[i], kappa[i]) * factorial(kappa[i]);
    x.add({a, kappa}, c);
  }
  return x;
}

using testing_helpers::random_v;

SchurElement zeta_mul(const VElement& x, const VElement& y, long r) {
  return mul(zeta_r(x, r), zeta_r(y, r));
}

}  // namespace

TEST_CASE("generator actions, worked examples") {
  const int n = 2;
  CHECK(vmul_E(eps(n, 1), v_basis(E(n, 2, 1), Z(n))) ==
        V({{PeriodicMatrix(n), eps(n, 1), 1}, {E(n, 1, 2) + E(n, 2, 1), Z(n), 1}}));
  CHECK(vmul_F(eps(n, 1), v_basis(E(n, 1, 2), Z(n))) ==
        V({{PeriodicMatrix(n), eps(n, 2), 1}, {E(n, 1, 2) + E(n, 2, 1), Z(n), 1}}));
  CHECK(vmul_zero(eps(n, 1), v_basis(PeriodicMatrix(n), eps(n, 1))) ==
        V({{PeriodicMatrix(n), eps(n, 1), 1}, {PeriodicMatrix(n), 2 * eps(n, 1), 2}}));
  const auto x = V({{E(n, 1, 3), Weight{1, 2}, 3}, {E(n, 2, 1), Z(n), -1}});
  CHECK(vmul_zero(Z(n), x) == x);
  CHECK(vmul_E(Weight{2, 1}, v_unit(n)) == v_basis(upper_chunk(Weight{2, 1}), Z(n)));
  CHECK(vmul_F(Weight{0, 3}, v_unit(n)) == v_basis(lower_chunk(Weight{0, 3}), Z(n)));

  // 0<mu> A<0> = sum_{delta <= mu} binom(ro(A), mu - delta) A<delta>
  const auto a = E(n, 1, 2) + E(n, 1, 4) + E(n, 2, 1);
  const Weight mu{2, 1};
  VElement expected(n);
  for (const auto& d : weights_below(mu)) expected.add({a, d}, weight_binom(ro(a), mu - d));
  CHECK(vmul_zero(mu, v_basis(a, Z(n))) == expected);
}

TEST_CASE("generator actions agree with Schur products under zeta_r") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      const VKey k{testing_helpers::random_pm(rng, n, 2, 2), testing_helpers::random_weight(rng, n, 2)};
      const VElement x = v_basis(k.matrix, k.lambda);
      const Weight alpha = testing_helpers::random_weight(rng, n, 2);
      const VElement ex = vmul_E(alpha, x), fx = vmul_F(alpha, x), zx = vmul_zero(alpha, x);
      for (long r = 0; r <= (n == 2 ? 6 : 4); ++r) {
        const SchurElement zr = zeta_r(x, r);
        INFO("A<lambda> = ", k.str(), ", alpha = ", alpha.str(), ", r = ", r);
        CHECK(zeta_r(ex, r) == mul(brace_r(upper_chunk(alpha), Z(n), r), zr));
        CHECK(zeta_r(fx, r) == mul(brace_r(lower_chunk(alpha), Z(n), r), zr));
        CHECK(zeta_r(zx, r) == mul(brace_r(PeriodicMatrix(n), alpha, r), zr));
      }
    }
  }
}

TEST_CASE("zeta_r examples") {
  const int n = 2;
  CHECK(zeta_r(v_basis(E(n, 1, 2), Z(n)), 1) == std_basis(E(n, 1, 2), 1));
  for (const auto& lambda : compositions(3, 3))
    CHECK(zeta_r(v_basis(PeriodicMatrix(3), lambda), 3) == std_basis(PeriodicMatrix::diag(lambda), 3));
  CHECK(zeta_r(v_basis(E(n, 1, 4), Z(n)), 0).is_zero());
  CHECK(zeta_r(v_basis(E(n, 1, 4), Z(n)), 1) == std_basis(E(n, 1, 4), 1));
}

TEST_CASE("leading words and rewriting") {
  VAlgebra alg(2);
  const int n = 2;
  CHECK(leading_word(PeriodicMatrix(n), Weight{2, 1}) ==
        Word{Generator::zero(Weight{2, 0}), Generator::zero(Weight{0, 1})});
  CHECK(leading_word(E(n, 1, 2), Z(n)) == Word{Generator::e(eps(n, 1))});
  CHECK(leading_word(E(n, 1, 4), Z(n)) ==
        Word{Generator::e(eps(n, 1)), Generator::e(eps(n, 2)), Generator::e(eps(n, 1))});
  CHECK(leading_word(E(n, 1, 2) + E(n, 2, 1), Z(n)) == Word{Generator::e(eps(n, 1)), Generator::f(eps(n, 1))});

  const auto& w = alg.rewrite({E(n, 1, 2) + E(n, 2, 1), Z(n)});
  CHECK(w.size() == 2);
  CHECK(w.at(Word{Generator::e(eps(n, 1)), Generator::f(eps(n, 1))}) == 1);
  CHECK(w.at(Word{Generator::zero(eps(n, 1))}) == -1);

  std::mt19937_64 rng(5);
  for (int nn : {2, 3}) {
    VAlgebra a(nn);
    for (int trial = 0; trial < 30; ++trial) {
      const VKey k{testing_helpers::random_pm(rng, nn, 3, 2, 2), testing_helpers::random_weight(rng, nn, 2)};
      VElement sum(nn);
      for (const auto& [word, c] : a.rewrite(k)) {
        const VElement e = evaluate(word, nn);
        for (const auto& [z, d] : e.terms()) sum.add(z, c * d);
      }
      INFO(k.str());
      CHECK(sum == v_basis(k.matrix, k.lambda));
    }
  }
}

TEST_CASE("gl2 commutator") {
  const int n = 2;
  const auto e = v_basis(E(n, 1, 2), Z(n));
  const auto f = v_basis(E(n, 2, 1), Z(n));
  VElement c = vmul(e, f);
  c -= vmul(f, e);
  CHECK(c == V({{PeriodicMatrix(n), eps(n, 1), 1}, {PeriodicMatrix(n), eps(n, 2), -1}}));
}

TEST_CASE("vmul is compatible with zeta_r") {
  std::mt19937_64 rng(23);
  for (int n : {2, 3}) {
    VAlgebra alg(n);
    for (int trial = 0; trial < 30; ++trial) {
      const VElement x = random_v(rng, n, 2, 2), y = random_v(rng, n, 2, 2);
      const VElement p = alg.mul(x, y);
      for (const auto& [k, c] : p.terms()) CHECK(in_theta_pm(k.matrix));
      for (long r = 0; r <= (n == 2 ? 5 : 3); ++r) {
        INFO("x = ", x.str(), ", y = ", y.str(), ", r = ", r);
        CHECK(zeta_r(p, r) == zeta_mul(x, y, r));
      }
    }
  }
}

TEST_CASE("vmul associativity") {
  std::mt19937_64 rng(29);
  for (int n : {2, 3}) {
    VAlgebra alg(n);
    for (int trial = 0; trial < 20; ++trial) {
      const VElement x = random_v(rng, n, 2, 1, 1), y = random_v(rng, n, 2, 1, 1), z = random_v(rng, n, 2, 1, 1);
      CHECK(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
    }
  }
}

TEST_CASE("bracket basis against Stirling expansion") {
  std::mt19937_64 rng(3);
  for (int n : {2, 3})
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing_helpers::random_pm(rng, n, 2, 2);
      const auto j = testing_helpers::random_weight(rng, n, 3);
      CHECK(bracket_in_brace(a, j) == bracket_by_stirling(a, j));
    }

  // 0<2e1> = (0[2e1] - 0[e1]) / 2
  const int n = 2;
  QVElement expected(n);
  expected.add({PeriodicMatrix(n), Weight{2, 0}}, Rational(1, 2));
  expected.add({PeriodicMatrix(n), Weight{1, 0}}, Rational(-1, 2));
  CHECK(brace_in_bracket(PeriodicMatrix(n), Weight{2, 0}) == expected);
  CHECK(brace_to_bracket(v_basis(E(n, 1, 2), Z(n))) == to_rational(v_basis(E(n, 1, 2), Z(n))));
}

TEST_CASE("bracket conversions round trip") {
  std::mt19937_64 rng(17);
  for (int n : {2, 3})
    for (int trial = 0; trial < 30; ++trial) {
      VElement x(n);
      for (int t = 0; t < 3; ++t)
        x.add({testing_helpers::random_pm(rng, n, 2, 2), testing_helpers::random_weight(rng, n, 3)},
              Integer(static_cast<long>(rng() % 7) - 3));
      const QVElement y = brace_to_bracket(x);
      CHECK(to_integral(bracket_to_brace(y)) == x);
      CHECK(brace_to_bracket(to_integral(bracket_to_brace(y))) == y);
    }
}

TEST_CASE("0[j'] 0[j] = 0[j + j']") {
  for (int n : {2, 3}) {
    VAlgebra alg(n);
    std::mt19937_64 rng(static_cast<unsigned>(n));
    for (int trial = 0; trial < 15; ++trial) {
      const auto j = testing_helpers::random_weight(rng, n, 2), jp = testing_helpers::random_weight(rng, n, 2);
      const VElement a = bracket_in_brace(PeriodicMatrix(n), jp), b = bracket_in_brace(PeriodicMatrix(n), j);
      CHECK(alg.mul(a, b) == bracket_in_brace(PeriodicMatrix(n), j + jp));
    }
  }
  CHECK_THROWS_AS(to_integral(brace_in_bracket(PeriodicMatrix(2), Weight{2, 0})), DomainError);
}

TEST_CASE("xi on PBW monomials") {
  const int n = 2;
  PBWMonomial d{n, {}, Weight{2, 1}, {}};
  CHECK(xi_pbw(d) == v_basis(PeriodicMatrix(n), Weight{2, 1}));

  PBWMonomial ef{n, {{{1, 2}, 1}}, Z(n), {{{2, 1}, 1}}};
  VElement c = xi_pbw(ef);
  c -= vmul(loop_generator(n, 2, 1), loop_generator(n, 1, 2));
  CHECK(c == V({{PeriodicMatrix(n), eps(n, 1), 1}, {PeriodicMatrix(n), eps(n, 2), -1}}));

  PBWMonomial sq{n, {{{1, 2}, 2}}, Z(n), {}};
  const VElement x = xi_pbw(sq);
  CHECK(x.coeff({E(n, 1, 2) + E(n, 1, 2), Z(n)}) == 2);
  for (long r = 0; r <= 5; ++r) {
    const SchurElement g = brace_r(E(n, 1, 2), Z(n), r);
    CHECK(zeta_r(x, r) == mul(g, g));
  }

  // xi_r on generators
  for (long r = 1; r <= 4; ++r) {
    CHECK(zeta_r(loop_generator(3, 1, 3), r) == brace_r(E(3, 1, 3), Z(3), r));
    CHECK(zeta_r(loop_generator(3, 2, 2), r) == bracket_r(PeriodicMatrix(3), eps(3, 2), r));
  }

  CHECK_THROWS_AS((PBWMonomial{n, {{{2, 1}, 1}}, Z(n), {}}.validate()), DomainError);
  CHECK_THROWS_AS((PBWMonomial{n, {}, Z(n), {{{1, 3}, 1}}}.validate()), DomainError);
}
