#include <random>

#include "affschur/errors.hpp"
#include "affschur/schur.hpp"
#include "affschur/stab.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace affschur;

namespace {

PeriodicMatrix M(int n, std::vector<std::tuple<long, long, long>> e) { return PeriodicMatrix(n, e); }

IntValuedPoly x_plus(long c) { return IntValuedPoly::basis(1) + IntValuedPoly(c); }

// A random pair (B, A) in Theta~ with co(B) = ro(A), entries bounded by bound.
std::pair<PeriodicMatrix, PeriodicMatrix> random_pair(std::mt19937_64& rng, int n, long band, long bound) {
  while (true) {
    auto a = testing_helpers::random_tilde(rng, n, band, bound);
    auto b = off_diagonal(testing_helpers::random_tilde(rng, n, band, bound));
    Weight target = ro(a);
    Weight have = co(b);
    bool ok = true;
    for (long i = 1; i <= n; ++i) {
      long d = target.at(i) - have.at(i);
      if (d < -bound || d > bound) ok = false;
      b.add(i, i, d);
    }
    if (ok) return {b, a};
  }
}

}  // namespace

TEST_CASE("semisimple symbolic products, worked examples") {
  auto e12 = PeriodicMatrix::unit(2, 1, 2);
  auto e21 = PeriodicMatrix::unit(2, 2, 1);
  auto up = kmul_ss_upper(e12, k_basis(e21));
  KElement expected(2);
  expected.add(PeriodicMatrix::diag(Weight{1, 0}), x_plus(1));
  expected.add(M(2, {{1, 2, 1}, {2, 1, 1}, {2, 2, -1}}), IntValuedPoly(1));
  CHECK(up == expected);

  auto low = kmul_ss_lower(e21, k_basis(e12));
  KElement expected_low(2);
  expected_low.add(PeriodicMatrix::diag(Weight{0, 1}), x_plus(1));
  expected_low.add(M(2, {{1, 2, 1}, {2, 1, 1}, {1, 1, -1}}), IntValuedPoly(1));
  CHECK(low == expected_low);

  auto a = M(2, {{1, 2, 1}, {2, 2, -1}});
  CHECK(kmul_ss_upper(PeriodicMatrix::diag(ro(a)), k_basis(a)) == k_basis(a));
  CHECK_THROWS_AS(kmul_ss_upper(PeriodicMatrix::unit(2, 1, 3), k_basis(a)), DomainError);
}

TEST_CASE("general symbolic products") {
  auto e12 = PeriodicMatrix::unit(2, 1, 2);
  auto e21 = PeriodicMatrix::unit(2, 2, 1);
  auto p = kmul(k_basis(e12), k_basis(e21));
  auto z = specialize_x0(p);
  CHECK(z.coeff(PeriodicMatrix::diag(Weight{1, 0})) == 1);
  CHECK(z.coeff(M(2, {{1, 2, 1}, {2, 1, 1}, {2, 2, -1}})) == 1);
  CHECK(z.size() == 2);
  auto d = PeriodicMatrix::diag(Weight{0, 1});
  CHECK(kmul(k_basis(PeriodicMatrix::diag(Weight{3, -1})), k_basis(e21)).is_zero());
  CHECK(kmul(k_basis(d), k_basis(e21)) == k_basis(e21));
}

TEST_CASE("specialization and truncation") {
  KElement x(2);
  x.add(PeriodicMatrix::diag(Weight{1, 0}), x_plus(1));
  x.add(PeriodicMatrix::unit(2, 1, 2), IntValuedPoly::basis(2));
  auto z = specialize_x0(x);
  CHECK(z.size() == 1);
  CHECK(z.coeff(PeriodicMatrix::diag(Weight{1, 0})) == 1);

  KZeroElement y(2);
  y.add(M(2, {{1, 2, 1}, {2, 1, 1}, {2, 2, -1}}), 1);
  y.add(PeriodicMatrix::diag(Weight{1, 1}), 1);
  auto t = delta_r(y, 2);
  CHECK(t == std_basis(PeriodicMatrix::diag(Weight{1, 1})));
}

TEST_CASE("symbolic products agree with Schur products after shifting") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 2;
    auto [b, a] = random_pair(rng, n, 2, 2);
    KMultiplier km(n);
    const KElement sym = km.mul_basis(b, a);
    long base = default_a_min(b, a);
    for (long s = base; s < base + 5; ++s) {
      long r = sigma(a) + s * n;
      SchurMultiplier sm(n, r);
      SchurElement direct = sm.mul_basis(shift_a(b, s), shift_a(a, s));
      SchurElement from_sym(n, r);
      for (const auto& [x, c] : sym.terms()) from_sym.add(shift_a(x, s), c.eval(Integer(s)));
      CHECK_MESSAGE(direct == from_sym, b.str(), " * ", a.str(), " at a=", s);
    }
  }
}

TEST_CASE("stabilization report") {
  auto e12 = PeriodicMatrix::unit(2, 1, 2);
  auto e21 = PeriodicMatrix::unit(2, 2, 1);
  auto rep = verify_stabilization(e12, e21, 1, 5);
  CHECK(rep.all_match);
  CHECK(rep.fit_failures == 0);
  REQUIRE(rep.terms.size() == 2);
  for (const auto& t : rep.terms) {
    REQUIRE(t.fitted.has_value());
    if (t.matrix == PeriodicMatrix::diag(Weight{1, 0})) CHECK(*t.fitted == x_plus(1));
    else CHECK(*t.fitted == IntValuedPoly(1));
  }
  auto zero = verify_stabilization(PeriodicMatrix(2), PeriodicMatrix(2), 1, 3);
  REQUIRE(zero.terms.size() == 1);
  CHECK(zero.terms[0].matrix == PeriodicMatrix(2));
  CHECK(zero.all_match);
  auto a = M(2, {{1, 2, 2}, {2, 1, 1}, {1, 1, -1}});
  auto diag = verify_stabilization(PeriodicMatrix::diag(ro(a)), a, 2, 4);
  REQUIRE(diag.terms.size() == 1);
  CHECK(diag.terms[0].matrix == a);
  CHECK(diag.all_match);
  // a window of one point cannot pin down a degree-one coefficient
  auto short_window = verify_stabilization(e12, e21, 1, 1);
  CHECK(short_window.fit_failures == 1);
  CHECK_FALSE(short_window.all_match);
}

TEST_CASE("symbolic chunk products are unitriangular") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + trial % 2;
    auto b = testing_helpers::random_tilde(rng, n, 3, 3);
    KMultiplier km(n);
    CHECK_NOTHROW(km.chunk_product(b));
  }
}

TEST_CASE("symbolic product is associative and truncates to Schur products") {
  std::mt19937_64 rng(31);
  KMultiplier km(2);
  for (int trial = 0; trial < 30; ++trial) {
    auto [b, a] = random_pair(rng, 2, 2, 2);
    auto [c, b2] = random_pair(rng, 2, 2, 2);
    // make c compatible with b
    PeriodicMatrix cc = off_diagonal(c);
    Weight d = ro(b) - co(cc);
    cc += PeriodicMatrix::diag(d);
    auto left = km.mul(km.mul(k_basis(cc), k_basis(b)), k_basis(a));
    auto right = km.mul(k_basis(cc), km.mul(k_basis(b), k_basis(a)));
    CHECK(left == right);
    (void)b2;
    for (long r = 1; r <= 4; ++r) {
      SchurMultiplier sm(2, r);
      auto lhs = delta_r(km.mul(k_basis(b), k_basis(a)), r);
      SchurElement bb(2, r), aa(2, r);
      if (in_theta(b) && sigma(b) == r) bb.add(b, 1);
      if (in_theta(a) && sigma(a) == r) aa.add(a, 1);
      CHECK(lhs == sm.mul(bb, aa));
    }
  }
}
