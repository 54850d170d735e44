#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "affschur/periodic_matrix.hpp"
#include "affschur/weight.hpp"

namespace affschur::detail {

// A column available to a row of T, with an upper bound (kUnbounded for none).
struct Slot {
  long col;
  long cap;
};
inline constexpr long kUnbounded = -1;

// Nonzero entries (col, t) of each row 1..n of T.
using TransferRows = std::vector<std::vector<std::pair<long, long>>>;

// Calls fn for every T in Theta(n) with row i summing to row_sums_i and
// supported on slots[i-1].
void for_each_transfer(const Weight& row_sums, const std::vector<std::vector<Slot>>& slots,
                       const std::function<void(const TransferRows&)>& fn);

// t_{i,j} for any integer i.
long transfer_at(const TransferRows& t, long i, long j);

// Slots for the upper formulas: row i of T draws on the columns of row i+1 of A,
// capped by a_{i+1,j}; with diag_free, column i+1 is uncapped.
std::vector<std::vector<Slot>> upper_slots(const PeriodicMatrix& a, bool diag_free);
// Slots for the lower formulas: row i of T is capped by row i of A; with
// diag_free, column i is uncapped.
std::vector<std::vector<Slot>> lower_slots(const PeriodicMatrix& a, bool diag_free);

}  // namespace affschur::detail
