#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace affschur {

// An element of Z^n, read as a Z^n-periodic function on Z.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<long> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<long> coords) : c_(coords) {}

  static Weight zero(int n) { return Weight(std::vector<long>(static_cast<std::size_t>(n), 0)); }
  // i is reduced modulo n into 1..n.
  static Weight unit(int n, long i);

  int n() const { return static_cast<int>(c_.size()); }
  const std::vector<long>& coords() const { return c_; }

  // 0-based storage access.
  long operator[](std::size_t k) const { return c_[k]; }
  long& operator[](std::size_t k) { return c_[k]; }
  // 1-based periodic access.
  long at(long i) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long s, Weight a);

  bool is_zero() const;
  bool is_natural() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const;

 private:
  std::vector<long> c_;
};

long sigma(const Weight& w);
// Coordinatewise order.
bool leq(const Weight& a, const Weight& b);
bool less(const Weight& a, const Weight& b);

// Lambda(n, r): all mu in N^n with sigma(mu) = r.
std::vector<Weight> compositions(int n, long r);
// All mu in N^n with mu <= lambda; lambda must be natural.
std::vector<Weight> weights_below(const Weight& lambda);

}  // namespace affschur
