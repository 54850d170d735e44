#include "affschur/stab.hpp"

#include <algorithm>
#include <set>

#include "affschur/binomial.hpp"
#include "affschur/errors.hpp"
#include "affschur/schur.hpp"
#include "transfer.hpp"

namespace affschur {

using detail::for_each_transfer;
using detail::transfer_at;
using detail::TransferRows;

void KElement::add_checked(const PeriodicMatrix& a, const IntValuedPoly& c) {
  if (a.n() != n_) throw DomainError("matrix size does not match");
  if (!in_theta_tilde(a)) throw DomainError("negative off-diagonal entry");
  add(a, c);
}

std::string KElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")[" + a.str() + "]";
  }
  return s;
}

KElement k_basis(const PeriodicMatrix& a) {
  KElement out(a.n());
  out.add_checked(a, IntValuedPoly(1));
  return out;
}

KElement kmul_ss_upper(const PeriodicMatrix& b, const KElement& x) {
  if (!is_ss_upper(b)) throw DomainError("kmul_ss_upper needs an upper semisimple matrix");
  if (b.n() != x.n()) throw DomainError("matrix size mismatch");
  const int n = b.n();
  KElement out(n);
  Weight alpha = Weight::zero(n);
  for (long i = 1; i <= n; ++i) alpha[static_cast<std::size_t>(i - 1)] = b.at(i, i + 1);
  const Weight cb = co(b);
  for (const auto& [a, c] : x.terms()) {
    if (ro(a) != cb) continue;
    for_each_transfer(alpha, detail::upper_slots(a, true), [&](const TransferRows& t) {
      Integer k = 1;
      IntValuedPoly p = c;
      PeriodicMatrix res = a;
      for (long i = 1; i <= n; ++i)
        for (const auto& [j, v] : t[static_cast<std::size_t>(i - 1)]) {
          long base = a.at(i, j) - transfer_at(t, i - 1, j) + v;
          if (j == i)
            p = p * IntValuedPoly::binom_shift(Integer(base), v);
          else
            k *= binom(base, v);
          res.add(i, j, v);
          res.add(i + 1, j, -v);
        }
      out.add(res, p * k);
    });
  }
  return out;
}

KElement kmul_ss_lower(const PeriodicMatrix& b, const KElement& x) {
  if (!is_ss_lower(b)) throw DomainError("kmul_ss_lower needs a lower semisimple matrix");
  if (b.n() != x.n()) throw DomainError("matrix size mismatch");
  const int n = b.n();
  KElement out(n);
  Weight gamma = Weight::zero(n);
  for (long i = 1; i <= n; ++i) gamma[static_cast<std::size_t>(i - 1)] = b.at(i + 1, i);
  const Weight cb = co(b);
  for (const auto& [a, c] : x.terms()) {
    if (ro(a) != cb) continue;
    for_each_transfer(gamma, detail::lower_slots(a, true), [&](const TransferRows& t) {
      Integer k = 1;
      IntValuedPoly p = c;
      PeriodicMatrix res = a;
      for (long i = 1; i <= n; ++i)
        for (const auto& [j, v] : t[static_cast<std::size_t>(i - 1)]) {
          long base = a.at(i + 1, j) + v - transfer_at(t, i + 1, j);
          if (j == i + 1)
            p = p * IntValuedPoly::binom_shift(Integer(base), v);
          else
            k *= binom(base, v);
          res.add(i, j, -v);
          res.add(i + 1, j, v);
        }
      out.add(res, p * k);
    });
  }
  return out;
}

std::vector<PeriodicMatrix> k_chunk_decomposition(const PeriodicMatrix& b) {
  if (!in_theta_tilde(b)) throw DomainError("negative off-diagonal entry");
  long shift = 0;
  for (long i = 1; i <= b.n(); ++i) shift = std::max(shift, -b.at(i, i));
  auto chunks = chunk_decomposition(shift_a(b, shift));
  for (auto& c : chunks) c = shift_a(c, -shift);
  return chunks;
}

KElement KMultiplier::apply_chunks(const std::vector<PeriodicMatrix>& chunks, KElement x) const {
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    if (is_diagonal(*it)) {
      KElement y(n_);
      for (const auto& [a, c] : x.terms())
        if (ro(a) == co(*it)) y.add(a, c);
      x = std::move(y);
    } else if (is_ss_upper(*it)) {
      x = kmul_ss_upper(*it, x);
    } else {
      x = kmul_ss_lower(*it, x);
    }
  }
  return x;
}

const KElement& KMultiplier::chunk_product(const PeriodicMatrix& b) {
  auto it = chunk_products_.find(b);
  if (it != chunk_products_.end()) return it->second.second;
  auto chunks = k_chunk_decomposition(b);
  KElement p = apply_chunks(chunks, k_basis(PeriodicMatrix::diag(co(b))));
  if (!(p.coeff(b) == IntValuedPoly(1)))
    throw TriangularityViolation("symbolic chunk product: leading coefficient of " + b.str() + " is " +
                                 p.coeff(b).str());
  for (const auto& [z, c] : p.terms()) {
    if (z == b) continue;
    if (ro(z) != ro(b) || co(z) != co(b) || !prec(z, b))
      throw TriangularityViolation("symbolic chunk product: term " + z.str() + " is not below " + b.str());
  }
  return chunk_products_.emplace(b, std::make_pair(std::move(chunks), std::move(p))).first->second.second;
}

KElement KMultiplier::mul_basis(const PeriodicMatrix& b, const PeriodicMatrix& a) {
  if (b.n() != n_ || a.n() != n_) throw DomainError("matrix size mismatch");
  if (!in_theta_tilde(a) || !in_theta_tilde(b)) throw DomainError("negative off-diagonal entry");
  KElement out(n_);
  if (co(b) != ro(a)) return out;
  if (is_diagonal(b)) return k_basis(a);
  if (is_ss_upper(b)) return kmul_ss_upper(b, k_basis(a));
  if (is_ss_lower(b)) return kmul_ss_lower(b, k_basis(a));
  auto key = std::make_pair(b, a);
  if (auto it = products_.find(key); it != products_.end()) return it->second;

  const KElement& lead = chunk_product(b);
  const auto& chunks = chunk_products_.at(b).first;
  out = apply_chunks(chunks, k_basis(a));
  const long nb = norm(b);
  for (const auto& [z, c] : lead.terms()) {
    if (z == b) continue;
    if (norm(z) >= nb) throw TriangularityViolation("lower term without smaller norm");
    const KElement sub = mul_basis(z, a);
    for (const auto& [y, d] : sub.terms()) out.add(y, -(c * d));
  }
  if (products_.size() > 200000) products_.clear();
  products_.emplace(std::move(key), out);
  return out;
}

KElement KMultiplier::mul(const KElement& x, const KElement& y) {
  if (x.n() != n_ || y.n() != n_) throw DomainError("matrix size mismatch");
  KElement out(n_);
  for (const auto& [b, cb] : x.terms())
    for (const auto& [a, ca] : y.terms()) {
      if (co(b) != ro(a)) continue;
      const IntValuedPoly s = cb * ca;
      const KElement p = mul_basis(b, a);
      for (const auto& [z, c] : p.terms()) out.add(z, c * s);
    }
  return out;
}

KElement kmul(const KElement& x, const KElement& y) {
  if (x.n() != y.n()) throw DomainError("matrix size mismatch");
  KMultiplier m(x.n());
  return m.mul(x, y);
}

KZeroElement specialize_x0(const KElement& x) {
  KZeroElement out(x.n());
  for (const auto& [a, c] : x.terms()) out.add(a, c.at_zero());
  return out;
}

SchurElement delta_r(const KZeroElement& x, long r) {
  SchurElement out(x.n(), r);
  for (const auto& [a, c] : x.terms())
    if (in_theta(a) && sigma(a) == r) out.add(a, c);
  return out;
}

SchurElement delta_r(const KElement& x, long r) { return delta_r(specialize_x0(x), r); }

namespace {

long min_diagonal(const PeriodicMatrix& m) {
  long lo = 0;
  for (long i = 1; i <= m.n(); ++i) lo = std::min(lo, m.at(i, i));
  return lo;
}

}  // namespace

long default_a_min(const PeriodicMatrix& b, const PeriodicMatrix& a) {
  long need = std::max(-min_diagonal(b), -min_diagonal(a));
  KMultiplier m(b.n());
  const KElement product = m.mul_basis(b, a);
  for (const auto& [x, c] : product.terms()) need = std::max(need, -min_diagonal(x));
  return std::max(need, 1L);
}

StabilizationReport verify_stabilization(const PeriodicMatrix& b, const PeriodicMatrix& a, long a_min,
                                         long a_max) {
  if (b.n() != a.n()) throw DomainError("matrix size mismatch");
  if (co(b) != ro(a)) throw DomainError("verify_stabilization needs co(B) = ro(A)");
  if (a_max < a_min) throw DomainError("empty window");
  const int n = b.n();
  if (!in_theta(shift_a(b, a_min)) || !in_theta(shift_a(a, a_min)))
    throw DomainError("a_min too small: shifted matrices leave Theta");

  StabilizationReport rep{b, a, a_min, a_max, {}, 0, true};
  KMultiplier km(n);
  const KElement symbolic = km.mul_basis(b, a);

  const long points = a_max - a_min + 1;
  std::map<PeriodicMatrix, std::vector<Integer>> values;
  for (const auto& [x, c] : symbolic.terms()) values[x].assign(static_cast<std::size_t>(points), 0);
  for (long k = 0; k < points; ++k) {
    const long shift = a_min + k;
    const long r = sigma(a) + shift * n;
    SchurMultiplier sm(n, r);
    const SchurElement prod = sm.mul_basis(shift_a(b, shift), shift_a(a, shift));
    for (const auto& [z, c] : prod.terms()) {
      auto& v = values[shift_a(z, -shift)];
      if (v.empty()) v.assign(static_cast<std::size_t>(points), 0);
      v[static_cast<std::size_t>(k)] = c;
    }
  }

  for (auto& [x, v] : values) {
    StabilizationTerm term{x, v, std::nullopt, symbolic.coeff(x), true};
    // Newton forward differences in y = a - a_min, then x = y + a_min.
    std::vector<Integer> diff = v;
    IntValuedPoly fit;
    for (long k = 0; k < points; ++k) {
      fit += IntValuedPoly::binom_shift(Integer(-a_min), k) * diff[0];
      for (std::size_t s = 0; s + 1 < diff.size(); ++s) diff[s] = diff[s + 1] - diff[s];
      diff.pop_back();
    }
    bool determined = term.symbolic.degree() < points;
    for (long k = 0; k < points; ++k)
      if (term.symbolic.eval(Integer(a_min + k)) != v[static_cast<std::size_t>(k)]) term.match = false;
    if (determined) {
      term.fitted = fit;
      if (!(fit == term.symbolic)) term.match = false;
    } else {
      ++rep.fit_failures;
    }
    if (!term.match) rep.all_match = false;
    rep.terms.push_back(std::move(term));
  }
  if (rep.fit_failures > 0) rep.all_match = false;
  return rep;
}

}  // namespace affschur
