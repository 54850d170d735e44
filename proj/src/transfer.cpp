#include "transfer.hpp"

#include <algorithm>

namespace affschur::detail {

namespace {

void row_options(long total, const std::vector<Slot>& slots, std::vector<std::vector<std::pair<long, long>>>& out) {
  std::vector<std::pair<long, long>> cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (k == slots.size()) return;
    long hi = slots[k].cap == kUnbounded ? left : std::min(left, slots[k].cap);
    for (long v = hi; v >= 0; --v) {
      if (v > 0) cur.emplace_back(slots[k].col, v);
      rec(k + 1, left - v);
      if (v > 0) cur.pop_back();
    }
  };
  rec(0, total);
}

}  // namespace

void for_each_transfer(const Weight& row_sums, const std::vector<std::vector<Slot>>& slots,
                       const std::function<void(const TransferRows&)>& fn) {
  const int n = row_sums.n();
  std::vector<std::vector<std::vector<std::pair<long, long>>>> options(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Slots are listed by increasing column; keep each row sorted by column.
    row_options(row_sums[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(i)], options[static_cast<std::size_t>(i)]);
    if (options[static_cast<std::size_t>(i)].empty()) return;
  }
  TransferRows t(static_cast<std::size_t>(n));
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(t);
      return;
    }
    for (const auto& opt : options[static_cast<std::size_t>(i)]) {
      t[static_cast<std::size_t>(i)] = opt;
      rec(i + 1);
    }
  };
  rec(0);
}

long transfer_at(const TransferRows& t, long i, long j) {
  const long n = static_cast<long>(t.size());
  long i0 = ((i - 1) % n + n) % n + 1;
  long j0 = j - (i - i0);
  for (const auto& [c, v] : t[static_cast<std::size_t>(i0 - 1)])
    if (c == j0) return v;
  return 0;
}

std::vector<std::vector<Slot>> upper_slots(const PeriodicMatrix& a, bool diag_free) {
  const int n = a.n();
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(n));
  for (const auto& e : a.entries()) {
    // entry of row e.row seen as row i+1 for i = e.row - 1, or i = n when e.row = 1
    long i = e.row == 1 ? n : e.row - 1;
    long col = e.row == 1 ? e.col + n : e.col;
    if (diag_free && col == i + 1) continue;
    if (e.value > 0) slots[static_cast<std::size_t>(i - 1)].push_back(Slot{col, e.value});
  }
  if (diag_free)
    for (long i = 1; i <= n; ++i) slots[static_cast<std::size_t>(i - 1)].push_back(Slot{i + 1, kUnbounded});
  for (auto& row : slots)
    std::sort(row.begin(), row.end(), [](const Slot& x, const Slot& y) { return x.col < y.col; });
  return slots;
}

std::vector<std::vector<Slot>> lower_slots(const PeriodicMatrix& a, bool diag_free) {
  const int n = a.n();
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(n));
  for (const auto& e : a.entries()) {
    if (diag_free && e.col == e.row) continue;
    if (e.value > 0) slots[static_cast<std::size_t>(e.row - 1)].push_back(Slot{e.col, e.value});
  }
  if (diag_free)
    for (long i = 1; i <= n; ++i) slots[static_cast<std::size_t>(i - 1)].push_back(Slot{i, kUnbounded});
  for (auto& row : slots)
    std::sort(row.begin(), row.end(), [](const Slot& x, const Slot& y) { return x.col < y.col; });
  return slots;
}

}  // namespace affschur::detail
