#pragma once

#include <vector>

#include "affschur/integer.hpp"
#include "affschur/weight.hpp"

namespace affschur {

// m(m-1)...(m-t+1)/t!, defined for every integer m; t must be >= 0.
Integer binom(const Integer& m, long t);
Integer binom(long m, long t);

// prod_i binom(alpha_i, lambda_i).
Integer weight_binom(const Weight& alpha, const Weight& lambda);

// binom(m, k1) binom(m-k1, k2) ... ; for m >= 0 the parts must sum to m.
Integer multinom(const Integer& m, const std::vector<long>& parts);
// Coordinatewise product of multinomials.
Integer weight_multinom(const Weight& total, const std::vector<Weight>& parts);

Integer factorial(long k);
// prod_i lambda_i!
Integer weight_factorial(const Weight& lambda);

}  // namespace affschur
