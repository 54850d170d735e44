#include <random>

#include "affschur/binomial.hpp"
#include "affschur/errors.hpp"
#include "affschur/int_valued_poly.hpp"
#include "affschur/periodic_matrix.hpp"
#include "affschur/weight.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace affschur;

namespace {

// Brute-force versions over an explicit window of the infinite matrix.
constexpr long kWide = 40;

Weight ro_brute(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (long i = 1; i <= a.n(); ++i)
    for (long j = -kWide; j <= kWide; ++j) w[static_cast<std::size_t>(i - 1)] += a.at(i, j);
  return w;
}

Weight co_brute(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (long j = 1; j <= a.n(); ++j)
    for (long i = -kWide; i <= kWide; ++i) w[static_cast<std::size_t>(j - 1)] += a.at(i, j);
  return w;
}

Weight sigma_vec_brute(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (long i = 1; i <= a.n(); ++i) {
    long s = a.at(i, i);
    for (long j = -kWide; j < i; ++j) s += a.at(i, j) + a.at(j, i);
    w[static_cast<std::size_t>(i - 1)] = s;
  }
  return w;
}

long corner_brute(const PeriodicMatrix& a, long i, long j) {
  long s = 0;
  for (long p = -kWide; p <= kWide; ++p)
    for (long q = -kWide; q <= kWide; ++q) {
      if (i < j && p <= i && q >= j) s += a.at(p, q);
      if (i > j && p >= i && q <= j) s += a.at(p, q);
    }
  return s;
}

bool preceq_brute(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  for (long i = 1; i <= a.n(); ++i)
    for (long j = i - 12; j <= i + 12; ++j)
      if (j != i && corner_brute(a, i, j) > corner_brute(b, i, j)) return false;
  return true;
}

Integer binom_brute(long m, long t) {
  // falling factorial over t!
  Integer num = 1, den = 1;
  for (long s = 0; s < t; ++s) {
    num *= m - s;
    den *= s + 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("binomials agree with the falling factorial") {
  CHECK(binom(-1, 2) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(-2, 3) == -4);
  CHECK_THROWS_AS(binom(3, -1), DomainError);
  for (long m = -8; m <= 8; ++m)
    for (long t = 0; t <= 6; ++t) CHECK(binom(m, t) == binom_brute(m, t));
}

TEST_CASE("multinomials") {
  CHECK(multinom(Integer(4), {1, 1, 2}) == 12);
  CHECK(multinom(Integer(0), {0, 0}) == 1);
  CHECK_THROWS_AS(multinom(Integer(3), {1, 1}), DomainError);
  // iterated product for negative m
  CHECK(multinom(Integer(-2), {1, 1}) == binom(-2, 1) * binom(-3, 1));
  CHECK(weight_multinom(Weight{2, 3}, {Weight{1, 1}, Weight{1, 2}}) == 2 * 3);
}

TEST_CASE("integer-valued polynomials") {
  IntValuedPoly x = IntValuedPoly::basis(1);
  IntValuedPoly sq = x * x;
  CHECK(sq == IntValuedPoly(std::map<long, Integer>{{1, 1}, {2, 2}}));
  CHECK(IntValuedPoly::binom_shift(Integer(-2), 3).eval(Integer(5)) == 1);
  CHECK((x + IntValuedPoly(1)).at_zero() == 1);
  CHECK(IntValuedPoly::basis(2).at_zero() == 0);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-5, 5), deg(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<long, Integer> pc, qc;
    for (long k = 0; k <= deg(rng); ++k) pc[k] = c(rng);
    for (long k = 0; k <= deg(rng); ++k) qc[k] = c(rng);
    IntValuedPoly p(pc), q(qc);
    long a = c(rng);
    IntValuedPoly s = IntValuedPoly::binom_shift(Integer(a), deg(rng));
    for (long v = -10; v <= 10; ++v) {
      CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
      CHECK((p - q).eval(v) == p.eval(v) - q.eval(v));
    }
    for (long t = 0; t <= 4; ++t) {
      IntValuedPoly st = IntValuedPoly::binom_shift(Integer(a), t);
      for (long v = -10; v <= 10; ++v) CHECK(st.eval(v) == binom(a + v, t));
    }
    (void)s;
  }
}

TEST_CASE("periodic matrices fold rows into 1..n") {
  PeriodicMatrix a = PeriodicMatrix::unit(2, 3, 4);
  CHECK(a == PeriodicMatrix::unit(2, 1, 2));
  CHECK(a.at(-1, 0) == 1);
  CHECK(a.at(1, 0) == 0);
  PeriodicMatrix b(3, {{1, 2, 1}, {4, 5, 2}, {2, 1, -1}});
  CHECK(b.at(1, 2) == 3);
  CHECK(b.entries().size() == 2);
  b.add(1, 2, -3);
  CHECK(b.at(1, 2) == 0);
  CHECK(b.entries().size() == 1);
}

TEST_CASE("row and column sums and sigma") {
  PeriodicMatrix a(2, {{1, 2, 1}, {2, 1, 1}});
  CHECK(ro(a) == Weight{1, 1});
  CHECK(co(a) == Weight{1, 1});
  CHECK(sigma(a) == 2);
  CHECK(sigma_vec(a) == Weight{0, 2});
  CHECK(sigma_vec(PeriodicMatrix::diag(Weight{2, 1})) == Weight{2, 1});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 3;
    auto m = testing_helpers::random_matrix(rng, n, 4, -3, 3);
    CHECK(ro(m) == ro_brute(m));
    CHECK(co(m) == co_brute(m));
    CHECK(sigma_vec(m) == sigma_vec_brute(m));
    CHECK(sigma(sigma_vec(m)) == sigma(m));
    CHECK(ro(transpose(m)) == co(m));
    CHECK(transpose(transpose(m)) == m);
  }
}

TEST_CASE("corner sums, order and norm") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 2;
    auto a = testing_helpers::random_matrix(rng, n, 3, 0, 2);
    auto b = testing_helpers::random_matrix(rng, n, 3, 0, 2);
    for (long i = 1; i <= n; ++i)
      for (long j = i - 5; j <= i + 5; ++j)
        if (j != i) CHECK(corner_sum(a, i, j) == corner_brute(a, i, j));
    CHECK(preceq(a, b) == preceq_brute(a, b));
    CHECK(preceq(a, a));
    CHECK_FALSE(prec(a, a));
    // the norm is the sum of all corner sums with i in 1..n
    long total = 0;
    for (long i = 1; i <= n; ++i)
      for (long j = i - 5; j <= i + 5; ++j)
        if (j != i) total += corner_brute(a, i, j);
    CHECK(norm(a) == total);
  }
  PeriodicMatrix lower = PeriodicMatrix::diag(Weight{1, 1});
  PeriodicMatrix upper(2, {{1, 2, 1}, {2, 1, 1}});
  CHECK(prec(lower, upper));
  CHECK_FALSE(preceq(upper, lower));
  CHECK(norm(upper) == 2);
  CHECK(norm(PeriodicMatrix::unit(2, 1, 3)) == 3);
  CHECK_THROWS_AS(preceq(PeriodicMatrix::unit(2, 1, 2) - PeriodicMatrix::unit(2, 2, 1) - PeriodicMatrix::unit(2, 2, 1), upper),
                  DomainError);
}

TEST_CASE("tilde shift, split and transpose") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = testing_helpers::random_matrix(rng, 3, 3, 0, 3);
    auto s = tilde_shift(t);
    for (long i = -3; i <= 6; ++i)
      for (long j = -6; j <= 9; ++j) CHECK(s.at(i, j) == t.at(i - 1, j));
    auto p = split(t);
    CHECK(p.upper + p.diagonal + p.lower == t);
    CHECK(is_strictly_upper(p.upper));
    CHECK(is_strictly_lower(p.lower));
    CHECK(is_diagonal(p.diagonal));
    CHECK(lambda_of(shift_a(t, 2)) == lambda_of(t) + Weight{2, 2, 2});
  }
}

TEST_CASE("weights") {
  CHECK(compositions(2, 3).size() == 4);
  CHECK(compositions(3, 3).size() == 10);
  CHECK(weights_below(Weight{1, 2}).size() == 6);
  CHECK(Weight::unit(3, 4) == Weight{1, 0, 0});
  CHECK(leq(Weight{0, 1}, Weight{1, 1}));
  CHECK_FALSE(leq(Weight{0, 2}, Weight{1, 1}));
  CHECK(less(Weight{0, 1}, Weight{1, 1}));
  CHECK(Weight{1, 2}.at(0) == 2);
}

TEST_CASE("enumerating Theta") {
  // n = 2, r = 2, band <= 1: slots (1,0),(1,1),(1,2),(2,1),(2,2),(2,3)
  CHECK(enumerate_theta(2, 2, 1).size() == 21);
  for (const auto& a : enumerate_theta(2, 3, 2)) {
    CHECK(sigma(a) == 3);
    CHECK(in_theta(a));
    CHECK(band_width(a) <= 2);
  }
  for (const auto& a : enumerate_theta_pm(2, 2, 2)) CHECK(in_theta_pm(a));
}
