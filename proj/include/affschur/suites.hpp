#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affschur/report.hpp"

namespace affschur {

// A verification run: named check families plus integer statistics.
struct SuiteResult {
  std::string name;
  std::vector<CheckReport> parts;
  std::vector<std::pair<std::string, long>> stats;

  long checked() const;
  long passed() const;
  bool ok() const;
};

// mul against oracle_mul for every pair of basis matrices of S(n, r) with
// band width <= band and co(B) = ro(A). Also counts basis matrices whose chunk
// decomposition contains a chunk with a negative diagonal entry.
SuiteResult suite_oracle(int n, long r, long band, int workers = 1);

// verify_stabilization on seeded pairs in Theta~(n) over a window of
// `width` consecutive shifts starting at default_a_min, plus the E12 E21 example.
SuiteResult suite_stabilization(int n, long samples, long band, long bound, long width, std::uint64_t seed);

// (R1)-(R3) on the window of verify_loop_relations plus [E12<0>, E21<0>].
SuiteResult suite_relations(int n, long bound);

// triangular_basis for every A in Theta^pm with band <= band and every
// lambda >= sigma(A) with sigma(lambda) = r, compared with the same product
// computed by oracle_mul.
SuiteResult suite_triangular(int n, long r, long band);

SuiteResult suite_surjectivity(int n, long r, long band);

// Seeded property checks: associativity of mul, kmul and vmul; tau; delta_r
// and zeta_r homomorphisms; bracket conversions; 0[j'] 0[j] = 0[j + j'];
// vmul coefficients against those recovered from Schur products; coproduct
// laws on small generators.
SuiteResult suite_properties(long samples, std::uint64_t seed);

// Coassociativity, counit laws and cocommutativity on generators.
SuiteResult suite_coproduct(int n, long max_t, long max_alpha);

}  // namespace affschur
