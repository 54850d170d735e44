#pragma once

#include <compare>
#include <string>
#include <vector>

#include "affschur/periodic_matrix.hpp"
#include "affschur/weight.hpp"

namespace affschur {

// A bijection w of Z with w(i + r) = w(i) + r, stored as its window
// (w(1), ..., w(r)).
class AffinePermutation {
 public:
  AffinePermutation() = default;
  explicit AffinePermutation(std::vector<long> window);

  static AffinePermutation identity(int r);
  // s_i for 0 <= i < r, swapping i and i+1 (s_0 swaps 0 and 1).
  static AffinePermutation simple_reflection(int r, long i);
  // i -> i + 1.
  static AffinePermutation rho(int r);

  int r() const { return static_cast<int>(w_.size()); }
  const std::vector<long>& window() const { return w_; }

  long operator()(long i) const;
  // (u * v)(i) = u(v(i))
  friend AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v);
  AffinePermutation inverse() const;
  // Membership in the Coxeter subgroup: sum of the window equals r(r+1)/2.
  bool in_coxeter_group() const;

  auto operator<=>(const AffinePermutation&) const = default;
  bool operator==(const AffinePermutation&) const = default;

  std::string str() const;

 private:
  std::vector<long> w_;
};

// Block containing position p in 1..r for the composition lambda (1-based).
int block_of(const Weight& lambda, long p);

// d(lambda_{0,i-1}+1) < ... < d(lambda_{0,i}) for every block i, which
// characterizes d^{-1} as a minimal length coset representative.
bool is_min_rep(const AffinePermutation& d, const Weight& lambda);

// The parabolic subgroup S_lambda of permutations of 1..r preserving the blocks.
std::vector<AffinePermutation> young_subgroup(const Weight& lambda);
// S_lambda d S_mu, sorted.
std::vector<AffinePermutation> double_coset(const Weight& lambda, const AffinePermutation& d,
                                            const Weight& mu);

struct CosetTriple {
  Weight lambda;
  AffinePermutation d;
  Weight mu;
};

// a_{k,l} = |R^lambda_k intersect d R^mu_l|.
PeriodicMatrix kappa(const Weight& lambda, const AffinePermutation& d, const Weight& mu);
// The triple with kappa(triple) = A and d of minimal length in its double coset.
CosetTriple kappa_inverse(const PeriodicMatrix& a);

}  // namespace affschur
