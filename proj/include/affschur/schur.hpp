#pragma once

#include <map>
#include <utility>
#include <vector>

#include "affschur/periodic_matrix.hpp"
#include "affschur/schur_element.hpp"
#include "affschur/weight.hpp"

namespace affschur {

// Sum_k alpha_k E_{k,k+1} and its transpose.
PeriodicMatrix upper_chunk(const Weight& alpha);
PeriodicMatrix lower_chunk(const Weight& beta);

// Layers alpha^(0), ..., alpha^(l-1) of the radical filtration of the module
// of a strictly upper matrix.
std::vector<Weight> radical_word(const PeriodicMatrix& aplus);

// Semisimple factors whose product is [B] + lower terms. A factor with a
// negative diagonal entry stands for zero.
std::vector<PeriodicMatrix> chunk_decomposition(const PeriodicMatrix& b);

// [B] X for B = sum alpha_i E_{i,i+1} + diag(beta) (resp. the lower analogue).
SchurElement mul_ss_upper(const PeriodicMatrix& b, const SchurElement& x);
SchurElement mul_ss_lower(const PeriodicMatrix& b, const SchurElement& x);

// Multiplication in S(n, r) with memoized chunk products and basis products.
class SchurMultiplier {
 public:
  SchurMultiplier(int n, long r) : n_(n), r_(r) {}

  int n() const { return n_; }
  long r() const { return r_; }

  SchurElement mul(const SchurElement& x, const SchurElement& y);
  SchurElement mul_basis(const PeriodicMatrix& b, const PeriodicMatrix& a);
  // The product of the chunks of B, checked to be [B] + strictly lower terms.
  const SchurElement& chunk_product(const PeriodicMatrix& b);

  void clear_products() { products_.clear(); }

 private:
  SchurElement apply_chunks(const std::vector<PeriodicMatrix>& chunks, SchurElement x) const;

  int n_;
  long r_;
  std::map<PeriodicMatrix, std::pair<std::vector<PeriodicMatrix>, SchurElement>> chunk_products_;
  std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, SchurElement> products_;
};

SchurElement mul(const SchurElement& x, const SchurElement& y);

// The anti-involution [A] -> [tA].
SchurElement tau(const SchurElement& x);

// A(lambda, r) = sum_mu binom(mu, lambda) [A + diag(mu)] over mu in Lambda(n, r - sigma(A)).
SchurElement brace_r(const PeriodicMatrix& a, const Weight& lambda, long r);
// A[j, r] = sum_mu mu^j [A + diag(mu)].
SchurElement bracket_r(const PeriodicMatrix& a, const Weight& j, long r);

// A+(0,r) [diag(lambda)] A-(0,r), checked to be
// [A + diag(lambda - sigma(A))] + strictly lower terms.
SchurElement triangular_basis(const PeriodicMatrix& a, const Weight& lambda, long r);
SchurElement triangular_basis(SchurMultiplier& m, const PeriodicMatrix& a, const Weight& lambda);

// Checks that x equals [lead] plus terms strictly below lead with the same
// ro and co; throws TriangularityViolation otherwise.
void check_unitriangular(const SchurElement& x, const PeriodicMatrix& lead, const char* what);

}  // namespace affschur
