#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "affschur/periodic_matrix.hpp"
#include "affschur/vz.hpp"

namespace affschur::sampling {

// Entries in rows 1..n, columns within band of the diagonal, values in [lo, hi].
inline PeriodicMatrix random_matrix(std::mt19937_64& rng, int n, long band, long lo, long hi, double density = 0.5) {
  std::uniform_int_distribution<long> val(lo, hi);
  std::bernoulli_distribution keep(density);
  PeriodicMatrix m(n);
  for (long i = 1; i <= n; ++i)
    for (long j = i - band; j <= i + band; ++j)
      if (keep(rng)) m.add(i, j, val(rng));
  return m;
}

// Diagonal in [-bound, bound]; at most max_off off-diagonal entries in [1, bound].
inline PeriodicMatrix random_tilde(std::mt19937_64& rng, int n, long band, long bound, int max_off = 3) {
  std::uniform_int_distribution<long> off(1, bound), diag(-bound, bound), row(1, n), dist(1, band);
  std::uniform_int_distribution<int> count(0, max_off);
  std::bernoulli_distribution up(0.5);
  PeriodicMatrix m(n);
  for (long i = 1; i <= n; ++i) m.add(i, i, diag(rng));
  for (int k = count(rng); k > 0; --k) {
    long i = row(rng), d = dist(rng);
    m.add(i, up(rng) ? i + d : i - d, off(rng));
  }
  // repeated positions may exceed the bound; clamp them
  PeriodicMatrix out(n);
  for (const auto& e : m.entries()) out.add(e.row, e.col, e.row == e.col ? e.value : std::min(e.value, bound));
  return out;
}

// Zero diagonal; at most max_off off-diagonal entries in [1, bound].
inline PeriodicMatrix random_pm(std::mt19937_64& rng, int n, long band, long bound, int max_off = 2) {
  PeriodicMatrix m = random_tilde(rng, n, band, bound, max_off);
  return off_diagonal(m);
}

inline Weight random_weight(std::mt19937_64& rng, int n, long bound) {
  std::uniform_int_distribution<long> val(0, bound);
  Weight w = Weight::zero(n);
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = val(rng);
  return w;
}

// A matrix with column sums target: random off-diagonal part, diagonal
// adjusted, retried until every diagonal entry lies in [-bound, bound].
inline PeriodicMatrix random_with_co(std::mt19937_64& rng, const Weight& target, long band, long bound) {
  const int n = target.n();
  while (true) {
    PeriodicMatrix b = off_diagonal(random_tilde(rng, n, band, bound));
    const Weight have = co(b);
    bool ok = true;
    for (long i = 1; i <= n; ++i) {
      const long d = target.at(i) - have.at(i);
      if (d < -bound || d > bound) ok = false;
      b.add(i, i, d);
    }
    if (ok) return b;
  }
}

// (B, A) in Theta~ with co(B) = ro(A).
inline std::pair<PeriodicMatrix, PeriodicMatrix> random_pair(std::mt19937_64& rng, int n, long band, long bound) {
  PeriodicMatrix a = random_tilde(rng, n, band, bound);
  PeriodicMatrix b = random_with_co(rng, ro(a), band, bound);
  return {b, a};
}

// Between 1 and max_terms symbols A<lambda>, coefficients in [-2, 2].
inline VElement random_v(std::mt19937_64& rng, int n, long band, long bound, int max_terms = 2) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<long> coeff(-2, 2);
  VElement x(n);
  for (int t = count(rng); t > 0; --t) {
    VKey k{random_pm(rng, n, band, bound), random_weight(rng, n, 1)};
    x.add(k, Integer(coeff(rng)));
  }
  if (x.is_zero()) x.add({PeriodicMatrix(n), Weight::zero(n)}, Integer(1));
  return x;
}

}  // namespace affschur::sampling
