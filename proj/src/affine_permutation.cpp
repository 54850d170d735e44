#include "affschur/affine_permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "affschur/errors.hpp"

namespace affschur {

namespace {

long mod1(long i, long r) { return ((i - 1) % r + r) % r + 1; }

}  // namespace

AffinePermutation::AffinePermutation(std::vector<long> window) : w_(std::move(window)) {
  const long r = static_cast<long>(w_.size());
  if (r == 0) throw DomainError("affine permutation needs r >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  for (long v : w_) {
    auto k = static_cast<std::size_t>(mod1(v, r) - 1);
    if (seen[k]) throw DomainError("window residues are not a permutation of 1..r");
    seen[k] = true;
  }
}

AffinePermutation AffinePermutation::identity(int r) {
  std::vector<long> w(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::simple_reflection(int r, long i) {
  std::vector<long> w = identity(r).w_;
  if (r == 1) return AffinePermutation(std::move(w));
  long k = mod1(i, r);
  if (k == r) {
    w[0] = 0;
    w[static_cast<std::size_t>(r - 1)] = r + 1;
  } else {
    std::swap(w[static_cast<std::size_t>(k - 1)], w[static_cast<std::size_t>(k)]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rho(int r) {
  std::vector<long> w(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = i + 2;
  return AffinePermutation(std::move(w));
}

long AffinePermutation::operator()(long i) const {
  const long r = static_cast<long>(w_.size());
  long p = mod1(i, r);
  return w_[static_cast<std::size_t>(p - 1)] + (i - p);
}

AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.r() != v.r()) throw DomainError("affine permutations of different r");
  AffinePermutation out;
  out.w_.resize(v.w_.size());
  for (std::size_t k = 0; k < v.w_.size(); ++k) out.w_[k] = u(v.w_[k]);
  return out;
}

AffinePermutation AffinePermutation::inverse() const {
  const long r = static_cast<long>(w_.size());
  AffinePermutation out;
  out.w_.resize(w_.size());
  for (long p = 1; p <= r; ++p) {
    long v = w_[static_cast<std::size_t>(p - 1)];
    long q = mod1(v, r);
    out.w_[static_cast<std::size_t>(q - 1)] = p - (v - q);
  }
  return out;
}

bool AffinePermutation::in_coxeter_group() const {
  long s = 0;
  for (long v : w_) s += v;
  const long r = static_cast<long>(w_.size());
  return s == r * (r + 1) / 2;
}

std::string AffinePermutation::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w_[k]);
  }
  return s + "]";
}

int block_of(const Weight& lambda, long p) {
  long acc = 0;
  for (int k = 0; k < lambda.n(); ++k) {
    acc += lambda[static_cast<std::size_t>(k)];
    if (p <= acc) return k + 1;
  }
  throw DomainError("position outside 1..sigma(lambda)");
}

bool is_min_rep(const AffinePermutation& d, const Weight& lambda) {
  if (sigma(lambda) != d.r()) throw DomainError("sigma(lambda) != r");
  long start = 1;
  for (long part : lambda.coords()) {
    for (long p = start; p + 1 < start + part; ++p)
      if (d(p) >= d(p + 1)) return false;
    start += part;
  }
  return true;
}

namespace {

// Simple reflections s_p (1 <= p < r) with p, p+1 in a common block.
std::vector<AffinePermutation> block_generators(const Weight& lambda) {
  const int r = static_cast<int>(sigma(lambda));
  std::vector<AffinePermutation> gens;
  long start = 1;
  for (long part : lambda.coords()) {
    for (long p = start; p + 1 < start + part; ++p) gens.push_back(AffinePermutation::simple_reflection(r, p));
    start += part;
  }
  return gens;
}

}  // namespace

std::vector<AffinePermutation> young_subgroup(const Weight& lambda) {
  if (!lambda.is_natural()) throw DomainError("young_subgroup needs a natural weight");
  const int r = static_cast<int>(sigma(lambda));
  if (r < 1) throw DomainError("young_subgroup needs sigma(lambda) >= 1");
  std::vector<std::vector<long>> out{AffinePermutation::identity(r).window()};
  long start = 0;
  for (long part : lambda.coords()) {
    std::vector<long> block(static_cast<std::size_t>(part));
    for (long k = 0; k < part; ++k) block[static_cast<std::size_t>(k)] = start + k + 1;
    std::vector<std::vector<long>> next;
    for (const auto& w : out) {
      std::vector<long> perm = block;
      do {
        auto v = w;
        for (long k = 0; k < part; ++k) v[static_cast<std::size_t>(start + k)] = perm[static_cast<std::size_t>(k)];
        next.push_back(std::move(v));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out = std::move(next);
    start += part;
  }
  std::vector<AffinePermutation> perms;
  perms.reserve(out.size());
  for (auto& w : out) perms.emplace_back(std::move(w));
  std::sort(perms.begin(), perms.end());
  return perms;
}

std::vector<AffinePermutation> double_coset(const Weight& lambda, const AffinePermutation& d,
                                            const Weight& mu) {
  if (sigma(lambda) != d.r() || sigma(mu) != d.r()) throw DomainError("sigma mismatch in double_coset");
  const auto left = block_generators(lambda);
  const auto right = block_generators(mu);
  std::set<AffinePermutation> seen{d};
  std::deque<AffinePermutation> queue{d};
  while (!queue.empty()) {
    AffinePermutation w = queue.front();
    queue.pop_front();
    auto visit = [&](AffinePermutation x) {
      if (seen.insert(x).second) queue.push_back(std::move(x));
    };
    for (const auto& s : left) visit(s * w);
    for (const auto& s : right) visit(w * s);
  }
  return {seen.begin(), seen.end()};
}

PeriodicMatrix kappa(const Weight& lambda, const AffinePermutation& d, const Weight& mu) {
  const long r = d.r();
  if (lambda.n() != mu.n()) throw DomainError("weight size mismatch");
  if (sigma(lambda) != r || sigma(mu) != r) throw DomainError("sigma mismatch in kappa");
  if (!lambda.is_natural() || !mu.is_natural()) throw DomainError("kappa needs natural weights");
  const int n = lambda.n();
  PeriodicMatrix a(n);
  for (long p = 1; p <= r; ++p) {
    long l = block_of(mu, p);
    long v = d(p);
    long q = mod1(v, r);
    long shift = (v - q) / r;
    long k = block_of(lambda, q);
    a.add(k + shift * n, l, 1);
  }
  return a;
}

CosetTriple kappa_inverse(const PeriodicMatrix& a) {
  if (!in_theta(a)) throw DomainError("kappa_inverse needs a matrix with nonnegative entries");
  const long r = sigma(a);
  if (r < 1) throw DomainError("kappa_inverse needs sigma(A) >= 1");
  const int n = a.n();
  Weight lambda = ro(a), mu = co(a);
  // Start of the sub-block of row k0 belonging to column j0, inside R^lambda_{k0}.
  std::vector<long> row_start(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) row_start[static_cast<std::size_t>(k)] = row_start[static_cast<std::size_t>(k - 1)] + lambda.at(k);
  std::vector<long> window(static_cast<std::size_t>(r), 0);
  std::vector<long> offset(static_cast<std::size_t>(n + 1), 0);
  // entries are sorted by (row, col), which orders each row's sub-blocks by column
  std::vector<long> sub_start(a.entries().size());
  for (std::size_t idx = 0; idx < a.entries().size(); ++idx) {
    const auto& e = a.entries()[idx];
    sub_start[idx] = row_start[static_cast<std::size_t>(e.row - 1)] + offset[static_cast<std::size_t>(e.row)];
    offset[static_cast<std::size_t>(e.row)] += e.value;
  }
  long mu_start = 0;
  for (int l = 1; l <= n; ++l) {
    // (row index k in Z, entry index) for all entries in column l
    std::vector<std::pair<long, std::size_t>> column;
    for (std::size_t idx = 0; idx < a.entries().size(); ++idx) {
      const auto& e = a.entries()[idx];
      long diff = l - e.col;
      if (((diff % n) + n) % n != 0) continue;
      column.emplace_back(e.row + diff, idx);
    }
    std::sort(column.begin(), column.end());
    long next = mu_start;
    for (const auto& [k, idx] : column) {
      const auto& e = a.entries()[idx];
      long m = (k - e.row) / n;
      for (long s = 0; s < e.value; ++s)
        window[static_cast<std::size_t>(next++)] = sub_start[idx] + s + 1 + m * r;
    }
    mu_start = next;
  }
  return CosetTriple{lambda, AffinePermutation(std::move(window)), mu};
}

}  // namespace affschur
