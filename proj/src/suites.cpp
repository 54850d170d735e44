#include "affschur/suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <thread>

#include "affschur/binomial.hpp"
#include "affschur/coproduct.hpp"
#include "affschur/errors.hpp"
#include "affschur/oracle.hpp"
#include "affschur/sampling.hpp"
#include "affschur/schur.hpp"
#include "affschur/stab.hpp"
#include "affschur/vz.hpp"
#include "affschur/vz_checks.hpp"

namespace affschur {

long SuiteResult::checked() const {
  long c = 0;
  for (const auto& p : parts) c += p.checked;
  return c;
}

long SuiteResult::passed() const {
  long c = 0;
  for (const auto& p : parts) c += p.passed;
  return c;
}

bool SuiteResult::ok() const {
  for (const auto& p : parts)
    if (!p.ok()) return false;
  return true;
}

namespace {

CheckReport named(const std::string& name) {
  CheckReport r;
  r.name = name;
  return r;
}

SchurElement oracle_product(const SchurElement& x, const SchurElement& y) {
  SchurElement out(x.n(), x.r());
  for (const auto& [b, cb] : x.terms())
    for (const auto& [a, ca] : y.terms()) {
      if (co(b) != ro(a)) continue;
      const SchurElement p = oracle_mul(b, a);
      for (const auto& [z, c] : p.terms()) out.add(z, cb * ca * c);
    }
  return out;
}

// Runs fn(k, report) for k = 0..count-1 on `workers` threads, merging the
// reports in index order.
template <class Fn>
CheckReport run_indexed(std::size_t count, int workers, const std::string& name, Fn make_worker) {
  std::vector<CheckReport> per(count);
  auto body = [&](int w, int total) {
    auto fn = make_worker();
    for (std::size_t k = static_cast<std::size_t>(w); k < count; k += static_cast<std::size_t>(total)) fn(k, per[k]);
  };
  if (workers <= 1) {
    body(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(body, w, workers);
    for (auto& t : threads) t.join();
  }
  CheckReport rep = named(name);
  for (const auto& p : per) rep.merge(p);
  return rep;
}

std::vector<Weight> weights_up_to(int n, long total) {
  std::vector<Weight> out;
  for (long s = 0; s <= total; ++s)
    for (const auto& w : compositions(n, s)) out.push_back(w);
  return out;
}

}  // namespace

SuiteResult suite_oracle(int n, long r, long band, int workers) {
  SuiteResult res;
  res.name = "oracle";
  const auto basis = enumerate_theta(n, r, band);
  std::map<Weight, std::vector<std::size_t>> by_co;
  long negative_chunks = 0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    by_co[co(basis[k])].push_back(k);
    for (const auto& c : chunk_decomposition(basis[k]))
      if (!in_theta(c)) {
        ++negative_chunks;
        break;
      }
  }
  long pairs = 0;
  for (const auto& a : basis)
    if (auto it = by_co.find(ro(a)); it != by_co.end()) pairs += static_cast<long>(it->second.size());

  res.parts.push_back(run_indexed(basis.size(), workers, "mul = oracle_mul", [&]() {
    return [&, m = std::make_shared<SchurMultiplier>(n, r)](std::size_t ai, CheckReport& rep) {
      const PeriodicMatrix& a = basis[ai];
      auto it = by_co.find(ro(a));
      if (it == by_co.end()) return;
      for (std::size_t bi : it->second) {
        const PeriodicMatrix& b = basis[bi];
        std::string err;
        bool ok = false;
        try {
          ok = m->mul_basis(b, a) == oracle_mul(b, a);
        } catch (const AlgebraError& e) {
          err = std::string(": ") + e.code() + " " + e.what();
        }
        rep.record(ok, ok ? std::string() : "[" + b.str() + "] * [" + a.str() + "]" + err);
      }
      m->clear_products();
    };
  }));
  res.stats = {{"n", n}, {"r", r}, {"band", band}, {"basis_size", static_cast<long>(basis.size())},
               {"pairs", pairs}, {"negative_chunk_bases", negative_chunks}};
  return res;
}

SuiteResult suite_stabilization(int n, long samples, long band, long bound, long width, std::uint64_t seed) {
  SuiteResult res;
  res.name = "stabilization";
  CheckReport ex = named("E12 * E21 example");
  if (n == 2) {
    const auto e12 = PeriodicMatrix::unit(2, 1, 2), e21 = PeriodicMatrix::unit(2, 2, 1);
    KElement want(2);
    want.add(PeriodicMatrix::diag(Weight{1, 0}), IntValuedPoly::basis(1) + IntValuedPoly(1));
    want.add(PeriodicMatrix(2, {{1, 2, 1}, {2, 1, 1}, {2, 2, -1}}), IntValuedPoly(1));
    ex.record(kmul(k_basis(e12), k_basis(e21)) == want, "kmul([E12], [E21])");
    const auto rep = verify_stabilization(e12, e21, 1, 5);
    ex.record(rep.all_match, "stabilization window [1, 5] for E12 * E21");
  }
  CheckReport fits = named("interpolated = symbolic");
  std::mt19937_64 rng(seed);
  long fit_failures = 0, keys = 0;
  for (long s = 0; s < samples; ++s) {
    const auto [b, a] = sampling::random_pair(rng, n, band, bound);
    const long a0 = default_a_min(b, a);
    const auto rep = verify_stabilization(b, a, a0, a0 + width - 1);
    fit_failures += rep.fit_failures;
    keys += static_cast<long>(rep.terms.size());
    fits.record(rep.all_match, "sample " + std::to_string(s) + ": [" + b.str() + "] * [" + a.str() + "] over a in [" +
                                   std::to_string(a0) + ", " + std::to_string(a0 + width - 1) + "]");
  }
  res.parts = {ex, fits};
  res.stats = {{"samples", samples}, {"stabilized_keys", keys}, {"fit_failures", fit_failures}};
  return res;
}

SuiteResult suite_relations(int n, long bound) {
  SuiteResult res;
  res.name = "relations";
  const auto rep = verify_loop_relations(n, bound);
  CheckReport inst = named("commutator instance");
  VAlgebra alg(n);
  VElement c = alg.mul(loop_generator(n, 1, 2), loop_generator(n, 2, 1));
  c -= alg.mul(loop_generator(n, 2, 1), loop_generator(n, 1, 2));
  VElement want = loop_generator(n, 1, 1);
  want -= loop_generator(n, 2, 2);
  inst.record(c == want, "[E12<0>, E21<0>] = 0<e1> - 0<e2>: got " + c.str());
  res.parts = {rep.r1, rep.r2, rep.r3, inst};
  res.stats = {{"n", n}, {"bound", bound}};
  return res;
}

SuiteResult suite_triangular(int n, long r, long band) {
  SuiteResult res;
  res.name = "triangular";
  CheckReport lead = named("unit leading term, strictly lower rest");
  CheckReport orc = named("triangular_basis = oracle product");
  SchurMultiplier m(n, r);
  long cases = 0;
  for (const auto& a : enumerate_theta_pm(n, r, band)) {
    const Weight sv = sigma_vec(a);
    const auto parts = split(a);
    for (const auto& lambda : compositions(n, r)) {
      if (!leq(sv, lambda)) continue;
      ++cases;
      const std::string tag = "A = " + a.str() + ", lambda = " + lambda.str();
      const PeriodicMatrix target = a + PeriodicMatrix::diag(lambda - sv);
      SchurElement x(n, r);
      try {
        x = triangular_basis(m, a, lambda);
      } catch (const AlgebraError& e) {
        lead.record(false, tag + ": " + e.code());
        continue;
      }
      bool ok = x.coeff(target) == 1;
      for (const auto& [z, c] : x.terms())
        if (z != target && (ro(z) != ro(target) || co(z) != co(target) || !prec(z, target))) ok = false;
      lead.record(ok, tag);
      const SchurElement y =
          oracle_product(oracle_product(brace_r(parts.upper, Weight::zero(n), r), std_basis(PeriodicMatrix::diag(lambda), r)),
                         brace_r(parts.lower, Weight::zero(n), r));
      orc.record(x == y, tag);
    }
  }
  res.parts = {lead, orc};
  res.stats = {{"n", n}, {"r", r}, {"band", band}, {"cases", cases}};
  return res;
}

SuiteResult suite_surjectivity(int n, long r, long band) {
  SuiteResult res;
  res.name = "surjectivity";
  const auto rep = surjectivity_certificate(n, r, band);
  res.parts = {rep.checks};
  long verified = 0;
  for (const auto& c : rep.certificates) verified += c.verified ? 1 : 0;
  res.stats = {{"n", n},
               {"r", r},
               {"band", band},
               {"certificates", static_cast<long>(rep.certificates.size())},
               {"verified", verified},
               {"non_integer_steps", rep.non_integer_steps}};
  return res;
}

namespace {

struct SchurSampler {
  int n;
  long r;
  std::vector<PeriodicMatrix> basis;
  std::map<Weight, std::vector<PeriodicMatrix>> by_co;

  SchurSampler(int n_, long r_, long band) : n(n_), r(r_), basis(enumerate_theta(n_, r_, band)) {
    for (const auto& b : basis) by_co[co(b)].push_back(b);
  }
  PeriodicMatrix any(std::mt19937_64& rng) const { return basis[rng() % basis.size()]; }
  // A basis matrix B with co(B) = ro(a).
  PeriodicMatrix left_of(std::mt19937_64& rng, const PeriodicMatrix& a) const {
    const auto& v = by_co.at(ro(a));
    return v[rng() % v.size()];
  }
};

void check_schur(long samples, std::mt19937_64& rng, CheckReport& assoc, CheckReport& tau_rep) {
  const SchurSampler s2(2, 3, 2), s3(3, 2, 2);
  for (long k = 0; k < samples; ++k) {
    const SchurSampler& s = k % 2 ? s3 : s2;
    SchurMultiplier m(s.n, s.r);
    const PeriodicMatrix c = s.any(rng);
    const PeriodicMatrix b = s.left_of(rng, c);
    const PeriodicMatrix a = s.left_of(rng, b);
    const SchurElement xa = std_basis(a, s.r), xb = std_basis(b, s.r), xc = std_basis(c, s.r);
    const std::string tag = "sample " + std::to_string(k) + ": " + a.str() + ", " + b.str() + ", " + c.str();
    assoc.record(m.mul(m.mul(xa, xb), xc) == m.mul(xa, m.mul(xb, xc)), "mul " + tag);
    tau_rep.record(tau(m.mul(xa, xb)) == m.mul(tau(xb), tau(xa)), "tau " + tag);
  }
}

void check_stab(long samples, std::mt19937_64& rng, CheckReport& assoc, CheckReport& delta) {
  for (long k = 0; k < samples; ++k) {
    const int n = k % 2 ? 3 : 2;
    KMultiplier km(n);
    const PeriodicMatrix a = sampling::random_tilde(rng, n, 2, 2, 2);
    const PeriodicMatrix b = sampling::random_with_co(rng, ro(a), 2, 2);
    const PeriodicMatrix c = sampling::random_with_co(rng, ro(b), 2, 2);
    const KElement xa = k_basis(a), xb = k_basis(b), xc = k_basis(c);
    const std::string tag = "sample " + std::to_string(k) + ": " + c.str() + ", " + b.str() + ", " + a.str();
    assoc.record(km.mul(km.mul(xc, xb), xa) == km.mul(xc, km.mul(xb, xa)), "kmul " + tag);

    long shift = 0;
    for (long i = 1; i <= n; ++i) shift = std::max({shift, -a.at(i, i), -b.at(i, i)});
    const PeriodicMatrix as = shift_a(a, shift), bs = shift_a(b, shift);
    const long r = sigma(as);
    SchurMultiplier sm(n, r);
    delta.record(delta_r(km.mul(k_basis(bs), k_basis(as)), r) ==
                     sm.mul(delta_r(k_basis(bs), r), delta_r(k_basis(as), r)),
                 "delta_r " + tag);
  }
}

// The A<lambda> coefficients of p forced by zeta_r(x) zeta_r(y) for r <= top.
bool matches_schur_side(const VElement& p, const VElement& x, const VElement& y, long top) {
  const int n = p.n();
  std::map<VKey, Integer> d;
  std::map<PeriodicMatrix, bool> shapes;
  for (long r = 0; r <= top; ++r) {
    const SchurElement s = mul(zeta_r(x, r), zeta_r(y, r));
    for (const auto& [m, c] : s.terms()) {
      d[{off_diagonal(m), lambda_of(m)}] = c;
      shapes[off_diagonal(m)] = true;
    }
  }
  for (const auto& [k, c] : p.terms()) shapes[k.matrix] = true;
  for (const auto& [a, unused] : shapes) {
    const long room = top - sigma(a);
    if (room < 0) continue;
    for (const auto& lambda : weights_up_to(n, room)) {
      Integer c = 0;
      for (const auto& mu : weights_below(lambda)) {
        auto it = d.find({a, mu});
        if (it == d.end()) continue;
        const Integer t = weight_binom(lambda, mu) * it->second;
        if ((sigma(lambda) - sigma(mu)) % 2)
          c -= t;
        else
          c += t;
      }
      if (c != p.coeff({a, lambda})) return false;
    }
  }
  return true;
}

void check_v(long samples, std::mt19937_64& rng, CheckReport& assoc, CheckReport& zeta, CheckReport& integral,
             CheckReport& conv, CheckReport& zero_bracket) {
  VAlgebra a2(2), a3(3);
  for (long k = 0; k < samples; ++k) {
    const int n = k % 2 ? 3 : 2;
    VAlgebra& alg = n == 2 ? a2 : a3;
    const std::string tag = "sample " + std::to_string(k);
    {
      const VElement x = sampling::random_v(rng, n, 2, 1, 1), y = sampling::random_v(rng, n, 2, 1, 1),
                     z = sampling::random_v(rng, n, 2, 1, 1);
      assoc.record(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)),
                   "vmul " + tag + ": " + x.str() + " | " + y.str() + " | " + z.str());
    }
    const VElement x = sampling::random_v(rng, n, 2, 2), y = sampling::random_v(rng, n, 2, 2);
    const VElement p = alg.mul(x, y);
    const long r = static_cast<long>(rng() % 4) + 1;
    zeta.record(zeta_r(p, r) == mul(zeta_r(x, r), zeta_r(y, r)),
                "zeta_r " + tag + " r=" + std::to_string(r) + ": " + x.str() + " | " + y.str());
    integral.record(matches_schur_side(p, x, y, n == 2 ? 5 : 4), "vmul coefficients " + tag + ": " + x.str() + " | " + y.str());

    VElement w(n);
    for (int t = 0; t < 3; ++t)
      w.add({sampling::random_pm(rng, n, 2, 2), sampling::random_weight(rng, n, 3)}, Integer(static_cast<long>(rng() % 7) - 3));
    bool ok = false;
    try {
      ok = to_integral(bracket_to_brace(brace_to_bracket(w))) == w;
    } catch (const AlgebraError&) {
      ok = false;
    }
    conv.record(ok, "round trip " + tag + ": " + w.str());

    const Weight j = sampling::random_weight(rng, n, 2), jp = sampling::random_weight(rng, n, 2);
    const PeriodicMatrix zero(n);
    zero_bracket.record(alg.mul(bracket_in_brace(zero, jp), bracket_in_brace(zero, j)) == bracket_in_brace(zero, j + jp),
                        "0[j'] 0[j] " + tag + ": j' = " + jp.str() + ", j = " + j.str());
  }
}

}  // namespace

SuiteResult suite_properties(long samples, std::uint64_t seed) {
  SuiteResult res;
  res.name = "properties";
  std::mt19937_64 rng(seed);
  CheckReport sa = named("mul associativity"), st = named("tau anti-involution");
  CheckReport ka = named("kmul associativity"), kd = named("delta_r homomorphism");
  CheckReport va = named("vmul associativity"), vz = named("zeta_r homomorphism"),
              vi = named("vmul integral coefficients"), vc = named("bracket round trip"),
              vb = named("0[j'] 0[j] = 0[j + j']");
  check_schur(samples, rng, sa, st);
  check_stab(samples, rng, ka, kd);
  check_v(samples, rng, va, vz, vi, vc, vb);
  CheckReport co = verify_coproduct(2, 2, 2);
  co.name = "coassociativity";
  res.parts = {sa, st, ka, kd, va, vz, vi, vc, vb, co};
  res.stats = {{"samples", samples}, {"seed", static_cast<long>(seed)}};
  return res;
}

SuiteResult suite_coproduct(int n, long max_t, long max_alpha) {
  SuiteResult res;
  res.name = "coproduct";
  res.parts = {verify_coproduct(n, max_t, max_alpha), verify_coproduct_words(n)};
  res.stats = {{"n", n}, {"max_t", max_t}, {"max_alpha", max_alpha}};
  return res;
}

}  // namespace affschur
