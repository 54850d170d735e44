#pragma once

#include "affschur/periodic_matrix.hpp"
#include "affschur/schur_element.hpp"

namespace affschur {

inline constexpr long kOracleMaxR = 6;

// [B][A] computed from the permutation-module definition of the basis at
// v = 1, by counting products over double cosets.
SchurElement oracle_mul(const PeriodicMatrix& b, const PeriodicMatrix& a);

}  // namespace affschur
