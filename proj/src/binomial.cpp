#include "affschur/binomial.hpp"

#include "affschur/errors.hpp"

namespace affschur {

Integer binom(const Integer& m, long t) {
  if (t < 0) throw DomainError("binomial needs t >= 0");
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(t));
  return out;
}

Integer binom(long m, long t) { return binom(Integer(m), t); }

Integer weight_binom(const Weight& alpha, const Weight& lambda) {
  if (alpha.n() != lambda.n()) throw DomainError("weight size mismatch");
  Integer out = 1;
  for (int k = 0; k < alpha.n() && out != 0; ++k) out *= binom(alpha[k], lambda[k]);
  return out;
}

Integer multinom(const Integer& m, const std::vector<long>& parts) {
  long total = 0;
  for (long p : parts) {
    if (p < 0) throw DomainError("multinomial parts must be >= 0");
    total += p;
  }
  if (m >= 0 && m != total) throw DomainError("multinomial parts must sum to m");
  Integer out = 1;
  Integer rest = m;
  for (long p : parts) {
    out *= binom(rest, p);
    rest -= p;
  }
  return out;
}

Integer weight_multinom(const Weight& total, const std::vector<Weight>& parts) {
  Integer out = 1;
  std::vector<long> ks(parts.size());
  for (int i = 0; i < total.n(); ++i) {
    for (std::size_t p = 0; p < parts.size(); ++p) ks[p] = parts[p][static_cast<std::size_t>(i)];
    out *= multinom(Integer(total[static_cast<std::size_t>(i)]), ks);
  }
  return out;
}

Integer factorial(long k) {
  if (k < 0) throw DomainError("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer weight_factorial(const Weight& lambda) {
  Integer out = 1;
  for (long x : lambda.coords()) out *= factorial(x);
  return out;
}

}  // namespace affschur
