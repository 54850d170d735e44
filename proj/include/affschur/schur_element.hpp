#pragma once

#include <string>

#include "affschur/combination.hpp"
#include "affschur/periodic_matrix.hpp"

namespace affschur {

// An element of the affine Schur algebra S(n, r) over Z, in the basis [A]
// indexed by A in Theta(n, r).
class SchurElement : public Combination<PeriodicMatrix, Integer> {
 public:
  SchurElement() = default;
  SchurElement(int n, long r) : n_(n), r_(r) {}

  int n() const { return n_; }
  long r() const { return r_; }

  // Rejects keys with negative entries or the wrong size or sigma.
  void add_checked(const PeriodicMatrix& a, const Integer& c);

  SchurElement& operator+=(const SchurElement& o);
  SchurElement& operator-=(const SchurElement& o);
  bool operator==(const SchurElement& o) const;

  std::string str() const;

 private:
  int n_ = 0;
  long r_ = 0;
};

// [A]; a matrix with a negative diagonal entry gives zero.
SchurElement std_basis(const PeriodicMatrix& a, long r);
SchurElement std_basis(const PeriodicMatrix& a);

}  // namespace affschur
