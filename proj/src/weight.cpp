#include "affschur/weight.hpp"

#include <algorithm>
#include <functional>

#include "affschur/errors.hpp"

namespace affschur {

namespace {
long reduce(long i, int n) { return ((i - 1) % n + n) % n + 1; }
}  // namespace

Weight Weight::unit(int n, long i) {
  Weight w = zero(n);
  w.c_[static_cast<std::size_t>(reduce(i, n) - 1)] = 1;
  return w;
}

long Weight::at(long i) const { return c_[static_cast<std::size_t>(reduce(i, n()) - 1)]; }

Weight& Weight::operator+=(const Weight& o) {
  if (o.n() != n()) throw DomainError("weight size mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.n() != n()) throw DomainError("weight size mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Weight operator*(long s, Weight a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long x) { return x == 0; });
}

bool Weight::is_natural() const {
  return std::all_of(c_.begin(), c_.end(), [](long x) { return x >= 0; });
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c_[k]);
  }
  return s + ")";
}

long sigma(const Weight& w) {
  long s = 0;
  for (long x : w.coords()) s += x;
  return s;
}

bool leq(const Weight& a, const Weight& b) {
  if (a.n() != b.n()) throw DomainError("weight size mismatch");
  for (int k = 0; k < a.n(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool less(const Weight& a, const Weight& b) { return leq(a, b) && a != b; }

std::vector<Weight> compositions(int n, long r) {
  std::vector<Weight> out;
  if (n <= 0 || r < 0) return out;
  std::vector<long> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, long)> rec = [&](int k, long left) {
    if (k == n - 1) {
      cur[static_cast<std::size_t>(k)] = left;
      out.emplace_back(cur);
      return;
    }
    for (long v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(k)] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weights_below(const Weight& lambda) {
  if (!lambda.is_natural()) throw DomainError("weights_below needs a natural weight");
  std::vector<Weight> out;
  std::vector<long> cur(static_cast<std::size_t>(lambda.n()), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == lambda.n()) {
      out.emplace_back(cur);
      return;
    }
    for (long v = 0; v <= lambda[static_cast<std::size_t>(k)]; ++v) {
      cur[static_cast<std::size_t>(k)] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace affschur
