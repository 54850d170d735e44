#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "affschur/weight.hpp"

namespace affschur {

struct MatrixEntry {
  long row;  // 1..n
  long col;  // any integer
  long value;
  auto operator<=>(const MatrixEntry&) const = default;
  bool operator==(const MatrixEntry&) const = default;
};

// A Z x Z matrix with a_{i+n,j+n} = a_{i,j} and finitely many nonzero
// entries per row band. Stored as the nonzero entries with row in 1..n,
// sorted by (row, col).
class PeriodicMatrix {
 public:
  PeriodicMatrix() = default;
  explicit PeriodicMatrix(int n);
  // Any row index is accepted; entries are folded into rows 1..n and summed.
  PeriodicMatrix(int n, const std::vector<std::tuple<long, long, long>>& entries);

  static PeriodicMatrix diag(const Weight& lambda);
  // E^{triangle}_{i,j} with arbitrary integer i, j.
  static PeriodicMatrix unit(int n, long i, long j);

  int n() const { return n_; }
  const std::vector<MatrixEntry>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }

  long at(long i, long j) const;
  // a_{i,j} += delta, periodically.
  void add(long i, long j, long delta);

  PeriodicMatrix& operator+=(const PeriodicMatrix& o);
  PeriodicMatrix& operator-=(const PeriodicMatrix& o);
  friend PeriodicMatrix operator+(PeriodicMatrix a, const PeriodicMatrix& b) { return a += b; }
  friend PeriodicMatrix operator-(PeriodicMatrix a, const PeriodicMatrix& b) { return a -= b; }

  auto operator<=>(const PeriodicMatrix&) const = default;
  bool operator==(const PeriodicMatrix&) const = default;

  std::string str() const;

 private:
  int n_ = 0;
  std::vector<MatrixEntry> e_;
};

Weight ro(const PeriodicMatrix& a);
Weight co(const PeriodicMatrix& a);
long sigma(const PeriodicMatrix& a);
// sigma_i(A) = a_ii + sum_{j<i} (a_ij + a_ji).
Weight sigma_vec(const PeriodicMatrix& a);
// Diagonal part (a_11, ..., a_nn).
Weight lambda_of(const PeriodicMatrix& a);

// sigma_{i,j}(A) for i != j.
long corner_sum(const PeriodicMatrix& a, long i, long j);
// Largest |j - i| over the nonzero off-diagonal entries.
long band_width(const PeriodicMatrix& a);
// The Bruhat-type partial order; both matrices must have nonnegative
// off-diagonal entries.
bool preceq(const PeriodicMatrix& a, const PeriodicMatrix& b);
bool prec(const PeriodicMatrix& a, const PeriodicMatrix& b);

long norm(const PeriodicMatrix& a);
// T~ with t~_{i,j} = t_{i-1,j}.
PeriodicMatrix tilde_shift(const PeriodicMatrix& t);
// A + aI.
PeriodicMatrix shift_a(const PeriodicMatrix& a, long shift);
PeriodicMatrix transpose(const PeriodicMatrix& a);

struct MatrixParts {
  PeriodicMatrix upper;
  PeriodicMatrix diagonal;
  PeriodicMatrix lower;
};
MatrixParts split(const PeriodicMatrix& a);
PeriodicMatrix off_diagonal(const PeriodicMatrix& a);

// Theta: all entries >= 0.
bool in_theta(const PeriodicMatrix& a);
// Theta~: off-diagonal entries >= 0.
bool in_theta_tilde(const PeriodicMatrix& a);
// Theta^{+-}: zero diagonal, off-diagonal entries >= 0.
bool in_theta_pm(const PeriodicMatrix& a);
bool is_diagonal(const PeriodicMatrix& a);
// Off-diagonal support on the superdiagonal (resp. subdiagonal), entries >= 0.
bool is_ss_upper(const PeriodicMatrix& a);
bool is_ss_lower(const PeriodicMatrix& a);
bool is_strictly_upper(const PeriodicMatrix& a);
bool is_strictly_lower(const PeriodicMatrix& a);

// Theta(n, r) restricted to band width <= band.
std::vector<PeriodicMatrix> enumerate_theta(int n, long r, long band);
// Theta^{+-}(n) with sigma(A) <= max_sigma and band width <= band.
std::vector<PeriodicMatrix> enumerate_theta_pm(int n, long max_sigma, long band);

}  // namespace affschur
