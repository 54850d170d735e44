#pragma once

#include <map>
#include <vector>

#include "affschur/report.hpp"
#include "affschur/schur_element.hpp"
#include "affschur/vz.hpp"

namespace affschur {

struct LoopRelationReport {
  CheckReport r1, r2, r3;
  bool ok() const { return r1.ok() && r2.ok() && r3.ok(); }
};

// Checks inside V, with i in 1..n, k in [1 - bound, n + bound],
// 0 < |i - j| <= bound and 0 < |k - l| <= bound:
//   0<e_i> 0<e_k> = 0<e_k> 0<e_i>,
//   [0<e_i>, E_kl<0>] = (d(i,k) - d(i,l)) E_kl<0>,
//   [E_ij<0>, E_kl<0>] = d(j,k) E_{i,l+j-k}<0> - d(l,i) E_{k,j+l-i}<0>,
// where d compares residues mod n and E_ii<0> means 0<e_i>.
LoopRelationReport verify_loop_relations(int n, long bound);

// The V element A+<0> 0<lambda> A-<0>, with A = C off the diagonal and
// lambda = diag(C) + sigma(A), and its image [C] + lower terms under zeta_r.
struct TriangularImage {
  VKey label;  // (A, lambda)
  VElement element;
  SchurElement image;
};

struct Certificate {
  PeriodicMatrix target;
  // [target] = sum coeff * zeta_r(A+<0> 0<lambda> A-<0>), keyed by the
  // target matrix of each triangular element.
  std::map<PeriodicMatrix, Integer> coefficients;
  bool verified = false;
};

struct SurjectivityReport {
  int n = 0;
  long r = 0;
  long band = 0;
  std::vector<Certificate> certificates;
  long non_integer_steps = 0;
  CheckReport checks;
  bool ok() const { return checks.ok() && non_integer_steps == 0; }
};

SurjectivityReport surjectivity_certificate(int n, long r, long band);

}  // namespace affschur
