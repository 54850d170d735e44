#include "affschur/periodic_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "affschur/errors.hpp"

namespace affschur {

namespace {

long mod1(long i, int n) { return ((i - 1) % n + n) % n + 1; }

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

PeriodicMatrix::PeriodicMatrix(int n) : n_(n) {
  if (n < 1) throw DomainError("matrix size must be positive");
}

PeriodicMatrix::PeriodicMatrix(int n, const std::vector<std::tuple<long, long, long>>& entries)
    : PeriodicMatrix(n) {
  for (const auto& [i, j, v] : entries) add(i, j, v);
}

PeriodicMatrix PeriodicMatrix::diag(const Weight& lambda) {
  PeriodicMatrix m(lambda.n());
  for (int i = 1; i <= lambda.n(); ++i) m.add(i, i, lambda.at(i));
  return m;
}

PeriodicMatrix PeriodicMatrix::unit(int n, long i, long j) {
  PeriodicMatrix m(n);
  m.add(i, j, 1);
  return m;
}

long PeriodicMatrix::at(long i, long j) const {
  long i0 = mod1(i, n_);
  long j0 = j - (i - i0);
  auto it = std::lower_bound(e_.begin(), e_.end(), MatrixEntry{i0, j0, 0},
                             [](const MatrixEntry& x, const MatrixEntry& y) {
                               return std::tie(x.row, x.col) < std::tie(y.row, y.col);
                             });
  if (it != e_.end() && it->row == i0 && it->col == j0) return it->value;
  return 0;
}

void PeriodicMatrix::add(long i, long j, long delta) {
  if (delta == 0) return;
  long i0 = mod1(i, n_);
  long j0 = j - (i - i0);
  auto it = std::lower_bound(e_.begin(), e_.end(), MatrixEntry{i0, j0, 0},
                             [](const MatrixEntry& x, const MatrixEntry& y) {
                               return std::tie(x.row, x.col) < std::tie(y.row, y.col);
                             });
  if (it != e_.end() && it->row == i0 && it->col == j0) {
    it->value += delta;
    if (it->value == 0) e_.erase(it);
  } else {
    e_.insert(it, MatrixEntry{i0, j0, delta});
  }
}

PeriodicMatrix& PeriodicMatrix::operator+=(const PeriodicMatrix& o) {
  if (o.n_ != n_) throw DomainError("matrix size mismatch");
  for (const auto& e : o.e_) add(e.row, e.col, e.value);
  return *this;
}

PeriodicMatrix& PeriodicMatrix::operator-=(const PeriodicMatrix& o) {
  if (o.n_ != n_) throw DomainError("matrix size mismatch");
  for (const auto& e : o.e_) add(e.row, e.col, -e.value);
  return *this;
}

std::string PeriodicMatrix::str() const {
  if (e_.empty()) return "0";
  std::string s;
  for (const auto& e : e_) {
    if (!s.empty()) s += " + ";
    if (e.value != 1) s += std::to_string(e.value) + "*";
    s += "E(" + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
  }
  return s;
}

Weight ro(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (const auto& e : a.entries()) w[static_cast<std::size_t>(e.row - 1)] += e.value;
  return w;
}

Weight co(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (const auto& e : a.entries()) w[static_cast<std::size_t>(mod1(e.col, a.n()) - 1)] += e.value;
  return w;
}

long sigma(const PeriodicMatrix& a) {
  long s = 0;
  for (const auto& e : a.entries()) s += e.value;
  return s;
}

Weight sigma_vec(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (const auto& e : a.entries()) {
    if (e.col <= e.row)
      w[static_cast<std::size_t>(e.row - 1)] += e.value;
    else
      w[static_cast<std::size_t>(mod1(e.col, a.n()) - 1)] += e.value;
  }
  return w;
}

Weight lambda_of(const PeriodicMatrix& a) {
  Weight w = Weight::zero(a.n());
  for (const auto& e : a.entries())
    if (e.row == e.col) w[static_cast<std::size_t>(e.row - 1)] = e.value;
  return w;
}

long corner_sum(const PeriodicMatrix& a, long i, long j) {
  if (i == j) throw DomainError("corner_sum needs i != j");
  const long n = a.n();
  long total = 0;
  for (const auto& e : a.entries()) {
    long lo, hi;
    if (i < j) {
      // s0 + mn <= i and t0 + mn >= j
      lo = ceil_div(j - e.col, n);
      hi = floor_div(i - e.row, n);
    } else {
      lo = ceil_div(i - e.row, n);
      hi = floor_div(j - e.col, n);
    }
    if (hi >= lo) total += (hi - lo + 1) * e.value;
  }
  return total;
}

long band_width(const PeriodicMatrix& a) {
  long w = 0;
  for (const auto& e : a.entries())
    if (e.row != e.col) w = std::max(w, std::labs(e.col - e.row));
  return w;
}

bool preceq(const PeriodicMatrix& a, const PeriodicMatrix& b) {
  if (a.n() != b.n()) throw DomainError("matrix size mismatch");
  if (!in_theta_tilde(a) || !in_theta_tilde(b))
    throw DomainError("order is defined on matrices with nonnegative off-diagonal entries");
  const long w = std::max(band_width(a), band_width(b)) + 1;
  for (long i = 1; i <= a.n(); ++i)
    for (long j = i - w; j <= i + w; ++j) {
      if (j == i) continue;
      if (corner_sum(a, i, j) > corner_sum(b, i, j)) return false;
    }
  return true;
}

bool prec(const PeriodicMatrix& a, const PeriodicMatrix& b) { return a != b && preceq(a, b); }

long norm(const PeriodicMatrix& a) {
  long s = 0;
  for (const auto& e : a.entries()) {
    long d = std::labs(e.col - e.row);
    s += d * (d + 1) / 2 * e.value;
  }
  return s;
}

PeriodicMatrix tilde_shift(const PeriodicMatrix& t) {
  PeriodicMatrix out(t.n());
  for (const auto& e : t.entries()) out.add(e.row + 1, e.col, e.value);
  return out;
}

PeriodicMatrix shift_a(const PeriodicMatrix& a, long shift) {
  PeriodicMatrix out = a;
  for (long i = 1; i <= a.n(); ++i) out.add(i, i, shift);
  return out;
}

PeriodicMatrix transpose(const PeriodicMatrix& a) {
  PeriodicMatrix out(a.n());
  for (const auto& e : a.entries()) out.add(e.col, e.row, e.value);
  return out;
}

MatrixParts split(const PeriodicMatrix& a) {
  MatrixParts p{PeriodicMatrix(a.n()), PeriodicMatrix(a.n()), PeriodicMatrix(a.n())};
  for (const auto& e : a.entries()) {
    if (e.col > e.row)
      p.upper.add(e.row, e.col, e.value);
    else if (e.col < e.row)
      p.lower.add(e.row, e.col, e.value);
    else
      p.diagonal.add(e.row, e.col, e.value);
  }
  return p;
}

PeriodicMatrix off_diagonal(const PeriodicMatrix& a) {
  PeriodicMatrix out(a.n());
  for (const auto& e : a.entries())
    if (e.row != e.col) out.add(e.row, e.col, e.value);
  return out;
}

bool in_theta(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const MatrixEntry& e) { return e.value >= 0; });
}

bool in_theta_tilde(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const MatrixEntry& e) { return e.row == e.col || e.value >= 0; });
}

bool in_theta_pm(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const MatrixEntry& e) { return e.row != e.col && e.value >= 0; });
}

bool is_diagonal(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const MatrixEntry& e) { return e.row == e.col; });
}

bool is_ss_upper(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(), [](const MatrixEntry& e) {
    return e.row == e.col || (e.col == e.row + 1 && e.value >= 0);
  });
}

bool is_ss_lower(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(), [](const MatrixEntry& e) {
    return e.row == e.col || (e.col == e.row - 1 && e.value >= 0);
  });
}

bool is_strictly_upper(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const MatrixEntry& e) { return e.col > e.row && e.value >= 0; });
}

bool is_strictly_lower(const PeriodicMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const MatrixEntry& e) { return e.col < e.row && e.value >= 0; });
}

namespace {

void distribute(int n, long total, long band, bool diagonal_allowed,
                std::vector<PeriodicMatrix>& out, bool exact) {
  std::vector<std::pair<long, long>> slots;
  for (long i = 1; i <= n; ++i)
    for (long j = i - band; j <= i + band; ++j)
      if (j != i || diagonal_allowed) slots.emplace_back(i, j);
  PeriodicMatrix cur(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
    if (k == slots.size()) {
      if (!exact || left == 0) out.push_back(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur.add(slots[k].first, slots[k].second, v);
      rec(k + 1, left - v);
      cur.add(slots[k].first, slots[k].second, -v);
    }
  };
  rec(0, total);
}

}  // namespace

std::vector<PeriodicMatrix> enumerate_theta(int n, long r, long band) {
  std::vector<PeriodicMatrix> out;
  distribute(n, r, band, true, out, true);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PeriodicMatrix> enumerate_theta_pm(int n, long max_sigma, long band) {
  std::vector<PeriodicMatrix> out;
  distribute(n, max_sigma, band, false, out, false);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace affschur
