#include "affschur/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "affschur/affine_permutation.hpp"
#include "affschur/errors.hpp"

namespace affschur {

namespace {

struct Packed {
  std::array<int, kOracleMaxR> w{};
  bool operator==(const Packed&) const = default;
  auto operator<=>(const Packed&) const = default;
};

struct PackedHash {
  std::size_t operator()(const Packed& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.w) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ull;
    return h;
  }
};

using PackedSet = std::unordered_set<Packed, PackedHash>;

class Group {
 public:
  explicit Group(int r) : r_(r) {}

  Packed pack(const AffinePermutation& p) const {
    Packed out;
    for (int k = 0; k < r_; ++k) out.w[static_cast<std::size_t>(k)] = static_cast<int>(p.window()[static_cast<std::size_t>(k)]);
    return out;
  }

  AffinePermutation unpack(const Packed& p) const {
    return AffinePermutation(std::vector<long>(p.w.begin(), p.w.begin() + r_));
  }

  int apply(const Packed& u, int v) const {
    int p = ((v - 1) % r_ + r_) % r_ + 1;
    return u.w[static_cast<std::size_t>(p - 1)] + (v - p);
  }

  Packed mul(const Packed& u, const Packed& v) const {
    Packed out;
    for (int k = 0; k < r_; ++k) out.w[static_cast<std::size_t>(k)] = apply(u, v.w[static_cast<std::size_t>(k)]);
    return out;
  }

  // Left multiplication by the transposition (p p+1), 1 <= p < r: swaps the values.
  Packed left_swap(const Packed& u, int p) const {
    Packed out = u;
    for (int k = 0; k < r_; ++k) {
      int v = u.w[static_cast<std::size_t>(k)];
      int q = ((v - 1) % r_ + r_) % r_ + 1;
      if (q == p) out.w[static_cast<std::size_t>(k)] = v + 1;
      else if (q == p + 1) out.w[static_cast<std::size_t>(k)] = v - 1;
    }
    return out;
  }

  // Right multiplication by (p p+1): swaps window positions.
  Packed right_swap(const Packed& u, int p) const {
    Packed out = u;
    std::swap(out.w[static_cast<std::size_t>(p - 1)], out.w[static_cast<std::size_t>(p)]);
    return out;
  }

  std::vector<Packed> closure(const Packed& d, const std::vector<int>& left, const std::vector<int>& right) const {
    PackedSet seen{d};
    std::vector<Packed> order{d};
    for (std::size_t head = 0; head < order.size(); ++head) {
      Packed w = order[head];
      for (int p : left) {
        Packed x = left_swap(w, p);
        if (seen.insert(x).second) order.push_back(x);
      }
      for (int p : right) {
        Packed x = right_swap(w, p);
        if (seen.insert(x).second) order.push_back(x);
      }
    }
    return order;
  }

 private:
  int r_;
};

std::vector<int> block_swaps(const Weight& lambda) {
  std::vector<int> out;
  long start = 1;
  for (long part : lambda.coords()) {
    for (long p = start; p + 1 < start + part; ++p) out.push_back(static_cast<int>(p));
    start += part;
  }
  return out;
}

}  // namespace

SchurElement oracle_mul(const PeriodicMatrix& b, const PeriodicMatrix& a) {
  if (a.n() != b.n()) throw DomainError("matrix size mismatch");
  if (!in_theta(a) || !in_theta(b)) throw DomainError("oracle inputs must have nonnegative entries");
  const long r = sigma(a);
  if (sigma(b) != r) throw DomainError("oracle inputs have different sigma");
  if (r < 1 || r > kOracleMaxR) throw DomainError("oracle supports 1 <= r <= 6");
  SchurElement out(a.n(), r);
  if (co(b) != ro(a)) return out;

  const CosetTriple t1 = kappa_inverse(b);
  const CosetTriple t2 = kappa_inverse(a);
  const Group g(static_cast<int>(r));
  const auto gen_lambda = block_swaps(t1.lambda);
  const auto gen_mu = block_swaps(t1.mu);
  const auto gen_nu = block_swaps(t2.mu);

  const auto d1 = g.closure(g.pack(t1.d), gen_lambda, gen_mu);
  const auto d2 = g.closure(g.pack(t2.d), gen_mu, gen_nu);

  // Right cosets S_mu c inside d2, represented by their least window.
  std::vector<Packed> reps;
  {
    PackedSet assigned;
    for (const auto& x : d2) {
      if (assigned.count(x)) continue;
      auto orbit = g.closure(x, gen_mu, {});
      reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
      for (const auto& y : orbit) assigned.insert(y);
    }
  }

  std::unordered_map<Packed, long, PackedHash> counts;
  counts.reserve(d1.size() * reps.size());
  for (const auto& u : d1)
    for (const auto& c : reps) ++counts[g.mul(u, c)];

  std::vector<Packed> keys;
  keys.reserve(counts.size());
  for (const auto& kv : counts) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end());

  PackedSet assigned;
  for (const auto& w : keys) {
    if (assigned.count(w)) continue;
    const long m = counts.at(w);
    for (const auto& x : g.closure(w, gen_lambda, gen_nu)) {
      auto it = counts.find(x);
      if (it == counts.end() || it->second != m)
        throw OracleInconsistency("multiplicity is not constant on a double coset");
      assigned.insert(x);
    }
    out.add(kappa(t1.lambda, g.unpack(w), t2.mu), Integer(m));
  }
  return out;
}

}  // namespace affschur
