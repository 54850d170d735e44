#include "affschur/vz_checks.hpp"

#include <string>

#include "affschur/errors.hpp"
#include "affschur/schur.hpp"

namespace affschur {

namespace {

long residue(long i, int n) { return ((i - 1) % n + n) % n; }

bool same_residue(long a, long b, int n) { return residue(a, n) == residue(b, n); }

std::string idx(std::initializer_list<long> v) {
  std::string s = "(";
  for (long x : v) {
    if (s.size() > 1) s += ",";
    s += std::to_string(x);
  }
  return s + ")";
}

VElement commutator(VAlgebra& alg, const VElement& x, const VElement& y) {
  VElement c = alg.mul(x, y);
  c -= alg.mul(y, x);
  return c;
}

}  // namespace

LoopRelationReport verify_loop_relations(int n, long bound) {
  if (bound < 1) throw DomainError("bound must be positive");
  LoopRelationReport rep;
  rep.r1.name = "R1";
  rep.r2.name = "R2";
  rep.r3.name = "R3";
  VAlgebra alg(n);
  auto g = [&](long i, long j) { return loop_generator(n, i, j); };

  for (long i = 1; i <= n; ++i)
    for (long k = 1 - bound; k <= n + bound; ++k)
      rep.r1.record(commutator(alg, g(i, i), g(k, k)).is_zero(), "R1 i,k=" + idx({i, k}));

  for (long i = 1; i <= n; ++i)
    for (long k = 1 - bound; k <= n + bound; ++k)
      for (long l = k - bound; l <= k + bound; ++l) {
        if (l == k) continue;
        const VElement ekl = g(k, l);
        VElement rhs(n);
        const long c = (same_residue(i, k, n) ? 1 : 0) - (same_residue(i, l, n) ? 1 : 0);
        rhs.add_scaled(ekl, Integer(c));
        rep.r2.record(commutator(alg, g(i, i), ekl) == rhs, "R2 i,k,l=" + idx({i, k, l}));
      }

  for (long i = 1; i <= n; ++i)
    for (long j = i - bound; j <= i + bound; ++j) {
      if (j == i) continue;
      const VElement eij = g(i, j);
      for (long k = 1 - bound; k <= n + bound; ++k)
        for (long l = k - bound; l <= k + bound; ++l) {
          if (l == k) continue;
          VElement rhs(n);
          if (same_residue(j, k, n)) rhs += g(i, l + j - k);
          if (same_residue(l, i, n)) rhs -= g(k, j + l - i);
          rep.r3.record(commutator(alg, eij, g(k, l)) == rhs, "R3 i,j,k,l=" + idx({i, j, k, l}));
        }
    }
  return rep;
}

namespace {

struct Solver {
  int n;
  long r;
  VAlgebra alg;
  SurjectivityReport* rep;
  std::map<PeriodicMatrix, TriangularImage> images;
  std::map<PeriodicMatrix, std::map<PeriodicMatrix, Integer>> inverse;

  const TriangularImage& image(const PeriodicMatrix& c) {
    if (auto it = images.find(c); it != images.end()) return it->second;
    const PeriodicMatrix a = off_diagonal(c);
    const auto parts = split(a);
    const Weight lambda = lambda_of(c) + sigma_vec(a);
    VElement x = alg.mul(v_basis(parts.upper, Weight::zero(n)),
                         alg.mul(v_basis(PeriodicMatrix(n), lambda), v_basis(parts.lower, Weight::zero(n))));
    SchurElement s = zeta_r(x, r);
    return images.emplace(c, TriangularImage{{a, lambda}, std::move(x), std::move(s)}).first->second;
  }

  // [c] = sum_D u_D zeta_r(V_D)
  const std::map<PeriodicMatrix, Integer>& solve(const PeriodicMatrix& c) {
    if (auto it = inverse.find(c); it != inverse.end()) return it->second;
    const TriangularImage& t = image(c);
    const Integer lead = t.image.coeff(c);
    std::map<PeriodicMatrix, Integer> u;
    u[c] = 1;
    const long nc = norm(c);
    for (const auto& [d, coef] : t.image.terms()) {
      if (d == c) continue;
      if (!prec(d, c) || norm(d) >= nc)
        throw TriangularityViolation("triangular image of " + c.str() + " has term " + d.str() + " not below it");
      const auto sub = solve(d);
      for (const auto& [e, v] : sub) u[e] -= coef * v;
    }
    std::map<PeriodicMatrix, Integer> out;
    for (auto& [e, v] : u) {
      if (v == 0) continue;
      if (!mpz_divisible_p(v.get_mpz_t(), lead.get_mpz_t())) {
        ++rep->non_integer_steps;
        rep->checks.record(false, "non-integral solve step at " + c.str());
        continue;
      }
      out[e] = v / lead;
    }
    return inverse.emplace(c, std::move(out)).first->second;
  }
};

}  // namespace

SurjectivityReport surjectivity_certificate(int n, long r, long band) {
  SurjectivityReport rep;
  rep.n = n;
  rep.r = r;
  rep.band = band;
  rep.checks.name = "surjectivity";
  Solver s{n, r, VAlgebra(n), &rep, {}, {}};
  for (const auto& c : enumerate_theta(n, r, band)) {
    Certificate cert;
    cert.target = c;
    try {
      const TriangularImage& t = s.image(c);
      rep.checks.record(t.image.coeff(c) == 1, "leading coefficient of the triangular image of " + c.str());
      cert.coefficients = s.solve(c);
      SchurElement sum(n, r);
      for (const auto& [d, u] : cert.coefficients) {
        const SchurElement& img = s.image(d).image;
        for (const auto& [e, v] : img.terms()) sum.add(e, u * v);
      }
      cert.verified = sum == std_basis(c, r);
      rep.checks.record(cert.verified, "certificate for " + c.str() + " does not reproduce [C]");
    } catch (const AlgebraError& e) {
      rep.checks.record(false, std::string(e.code()) + " at " + c.str() + ": " + e.what());
    }
    rep.certificates.push_back(std::move(cert));
  }
  return rep;
}

}  // namespace affschur
