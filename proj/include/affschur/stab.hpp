#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affschur/combination.hpp"
#include "affschur/int_valued_poly.hpp"
#include "affschur/periodic_matrix.hpp"
#include "affschur/schur_element.hpp"

namespace affschur {

// A finite combination of [A], A with nonnegative off-diagonal entries,
// with integer-valued polynomial coefficients.
class KElement : public Combination<PeriodicMatrix, IntValuedPoly> {
 public:
  KElement() = default;
  explicit KElement(int n) : n_(n) {}
  int n() const { return n_; }
  void add_checked(const PeriodicMatrix& a, const IntValuedPoly& c);
  bool operator==(const KElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  int n_ = 0;
};

// The image under x -> 0.
class KZeroElement : public Combination<PeriodicMatrix, Integer> {
 public:
  KZeroElement() = default;
  explicit KZeroElement(int n) : n_(n) {}
  int n() const { return n_; }
  bool operator==(const KZeroElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

 private:
  int n_ = 0;
};

KElement k_basis(const PeriodicMatrix& a);

KElement kmul_ss_upper(const PeriodicMatrix& b, const KElement& x);
KElement kmul_ss_lower(const PeriodicMatrix& b, const KElement& x);

class KMultiplier {
 public:
  explicit KMultiplier(int n) : n_(n) {}
  int n() const { return n_; }

  KElement mul(const KElement& x, const KElement& y);
  KElement mul_basis(const PeriodicMatrix& b, const PeriodicMatrix& a);
  const KElement& chunk_product(const PeriodicMatrix& b);

 private:
  KElement apply_chunks(const std::vector<PeriodicMatrix>& chunks, KElement x) const;

  int n_;
  std::map<PeriodicMatrix, std::pair<std::vector<PeriodicMatrix>, KElement>> chunk_products_;
  std::map<std::pair<PeriodicMatrix, PeriodicMatrix>, KElement> products_;
};

KElement kmul(const KElement& x, const KElement& y);

// The chunks of B + bI shifted back by -bI, with b = max(0, -min_i b_ii).
std::vector<PeriodicMatrix> k_chunk_decomposition(const PeriodicMatrix& b);

KZeroElement specialize_x0(const KElement& x);
// Keeps the terms indexed by Theta(n, r).
SchurElement delta_r(const KZeroElement& x, long r);
SchurElement delta_r(const KElement& x, long r);

struct StabilizationTerm {
  PeriodicMatrix matrix;
  std::vector<Integer> values;            // coefficient of [X + aI] for each a
  std::optional<IntValuedPoly> fitted;    // absent when the fit is not determined
  IntValuedPoly symbolic;                 // coefficient in kmul([B],[A])
  bool match = false;
};

struct StabilizationReport {
  PeriodicMatrix b, a;
  long a_min = 0, a_max = 0;
  std::vector<StabilizationTerm> terms;
  long fit_failures = 0;
  bool all_match = false;
};

// Smallest a >= 1 with B + aI, A + aI and every X + aI (X a key of
// kmul([B],[A])) inside Theta.
long default_a_min(const PeriodicMatrix& b, const PeriodicMatrix& a);

StabilizationReport verify_stabilization(const PeriodicMatrix& b, const PeriodicMatrix& a, long a_min,
                                         long a_max);

}  // namespace affschur
