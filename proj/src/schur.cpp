#include "affschur/schur.hpp"

#include <algorithm>

#include "affschur/binomial.hpp"
#include "affschur/errors.hpp"
#include "transfer.hpp"

namespace affschur {

using detail::for_each_transfer;
using detail::transfer_at;
using detail::TransferRows;

PeriodicMatrix upper_chunk(const Weight& alpha) {
  PeriodicMatrix m(alpha.n());
  for (long k = 1; k <= alpha.n(); ++k) m.add(k, k + 1, alpha.at(k));
  return m;
}

PeriodicMatrix lower_chunk(const Weight& beta) {
  PeriodicMatrix m(beta.n());
  for (long k = 1; k <= beta.n(); ++k) m.add(k + 1, k, beta.at(k));
  return m;
}

std::vector<Weight> radical_word(const PeriodicMatrix& aplus) {
  if (!is_strictly_upper(aplus)) throw DomainError("radical_word needs a strictly upper matrix with entries >= 0");
  const long len = band_width(aplus);
  std::vector<Weight> word;
  for (long k = 0; k < len; ++k) {
    Weight layer = Weight::zero(aplus.n());
    for (const auto& e : aplus.entries())
      if (e.col - e.row > k) layer[static_cast<std::size_t>((e.row + k - 1) % aplus.n())] += e.value;
    word.push_back(std::move(layer));
  }
  return word;
}

std::vector<PeriodicMatrix> chunk_decomposition(const PeriodicMatrix& b) {
  if (!in_theta(b)) throw DomainError("chunk_decomposition needs a matrix with entries >= 0");
  if (is_diagonal(b)) return {b};
  const auto parts = split(b);
  const Weight lambda = sigma_vec(b);

  std::vector<PeriodicMatrix> ups, downs;
  for (const auto& a : radical_word(parts.upper)) ups.push_back(upper_chunk(a));
  auto low_word = radical_word(transpose(parts.lower));
  std::reverse(low_word.begin(), low_word.end());
  for (const auto& a : low_word) downs.push_back(lower_chunk(a));

  std::vector<PeriodicMatrix> out;
  const std::size_t s = ups.size();
  for (std::size_t i = 0; i < s; ++i) {
    Weight d = lambda - co(ups[i]);
    for (std::size_t k = i + 1; k < s; ++k) d += ro(ups[k]) - co(ups[k]);
    out.push_back(ups[i] + PeriodicMatrix::diag(d));
  }
  for (std::size_t j = 0; j < downs.size(); ++j) {
    Weight d = lambda - ro(downs[j]);
    for (std::size_t k = 0; k < j; ++k) d += co(downs[k]) - ro(downs[k]);
    out.push_back(downs[j] + PeriodicMatrix::diag(d));
  }
  return out;
}

SchurElement mul_ss_upper(const PeriodicMatrix& b, const SchurElement& x) {
  if (!is_ss_upper(b)) throw DomainError("mul_ss_upper needs an upper semisimple matrix");
  if (b.n() != x.n() || sigma(b) != x.r()) throw DomainError("matrix does not belong to the Schur algebra");
  SchurElement out(x.n(), x.r());
  if (!in_theta(b)) return out;
  Weight alpha = Weight::zero(b.n());
  for (long i = 1; i <= b.n(); ++i) alpha[static_cast<std::size_t>(i - 1)] = b.at(i, i + 1);
  const Weight cb = co(b);
  for (const auto& [a, c] : x.terms()) {
    if (ro(a) != cb) continue;
    for_each_transfer(alpha, detail::upper_slots(a, false), [&](const TransferRows& t) {
      Integer coeff = c;
      PeriodicMatrix res = a;
      for (long i = 1; i <= b.n(); ++i)
        for (const auto& [j, v] : t[static_cast<std::size_t>(i - 1)]) {
          coeff *= binom(a.at(i, j) - transfer_at(t, i - 1, j) + v, v);
          res.add(i, j, v);
          res.add(i + 1, j, -v);
        }
      out.add(res, coeff);
    });
  }
  return out;
}

SchurElement mul_ss_lower(const PeriodicMatrix& b, const SchurElement& x) {
  if (!is_ss_lower(b)) throw DomainError("mul_ss_lower needs a lower semisimple matrix");
  if (b.n() != x.n() || sigma(b) != x.r()) throw DomainError("matrix does not belong to the Schur algebra");
  SchurElement out(x.n(), x.r());
  if (!in_theta(b)) return out;
  Weight gamma = Weight::zero(b.n());
  for (long i = 1; i <= b.n(); ++i) gamma[static_cast<std::size_t>(i - 1)] = b.at(i + 1, i);
  const Weight cb = co(b);
  for (const auto& [a, c] : x.terms()) {
    if (ro(a) != cb) continue;
    for_each_transfer(gamma, detail::lower_slots(a, false), [&](const TransferRows& t) {
      Integer coeff = c;
      PeriodicMatrix res = a;
      for (long i = 1; i <= b.n(); ++i)
        for (const auto& [j, v] : t[static_cast<std::size_t>(i - 1)]) {
          // factor at position (i+1, j), where t_{(i+1)-1, j} = v
          coeff *= binom(a.at(i + 1, j) + v - transfer_at(t, i + 1, j), v);
          res.add(i, j, -v);
          res.add(i + 1, j, v);
        }
      out.add(res, coeff);
    });
  }
  return out;
}

void check_unitriangular(const SchurElement& x, const PeriodicMatrix& lead, const char* what) {
  if (x.coeff(lead) != 1)
    throw TriangularityViolation(std::string(what) + ": leading coefficient of " + lead.str() + " is " +
                                 x.coeff(lead).get_str());
  const Weight rl = ro(lead), cl = co(lead);
  for (const auto& [z, c] : x.terms()) {
    if (z == lead) continue;
    if (ro(z) != rl || co(z) != cl || !prec(z, lead))
      throw TriangularityViolation(std::string(what) + ": term " + z.str() + " is not below " + lead.str());
  }
}

SchurElement SchurMultiplier::apply_chunks(const std::vector<PeriodicMatrix>& chunks, SchurElement x) const {
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) {
    if (is_diagonal(*it)) {
      SchurElement y(n_, r_);
      for (const auto& [a, c] : x.terms())
        if (ro(a) == co(*it)) y.add(a, c);
      x = std::move(y);
    } else if (is_ss_upper(*it)) {
      x = mul_ss_upper(*it, x);
    } else {
      x = mul_ss_lower(*it, x);
    }
  }
  return x;
}

const SchurElement& SchurMultiplier::chunk_product(const PeriodicMatrix& b) {
  auto it = chunk_products_.find(b);
  if (it != chunk_products_.end()) return it->second.second;
  auto chunks = chunk_decomposition(b);
  SchurElement p = apply_chunks(chunks, std_basis(PeriodicMatrix::diag(co(b)), r_));
  check_unitriangular(p, b, "chunk product");
  return chunk_products_.emplace(b, std::make_pair(std::move(chunks), std::move(p))).first->second.second;
}

SchurElement SchurMultiplier::mul_basis(const PeriodicMatrix& b, const PeriodicMatrix& a) {
  if (b.n() != n_ || a.n() != n_ || sigma(a) != r_ || sigma(b) != r_)
    throw DomainError("matrix does not belong to the Schur algebra");
  SchurElement out(n_, r_);
  if (!in_theta(a) || !in_theta(b) || co(b) != ro(a)) return out;
  if (is_diagonal(b)) return std_basis(a, r_);
  if (is_ss_upper(b)) return mul_ss_upper(b, std_basis(a, r_));
  if (is_ss_lower(b)) return mul_ss_lower(b, std_basis(a, r_));
  auto key = std::make_pair(b, a);
  if (auto it = products_.find(key); it != products_.end()) return it->second;

  const SchurElement& lead = chunk_product(b);
  const auto& chunks = chunk_products_.at(b).first;
  out = apply_chunks(chunks, std_basis(a, r_));
  const long nb = norm(b);
  for (const auto& [z, c] : lead.terms()) {
    if (z == b) continue;
    if (norm(z) >= nb) throw TriangularityViolation("lower term without smaller norm");
    out.add_scaled(mul_basis(z, a), -c);
  }
  if (products_.size() > 500000) products_.clear();
  products_.emplace(std::move(key), out);
  return out;
}

SchurElement SchurMultiplier::mul(const SchurElement& x, const SchurElement& y) {
  if (x.n() != n_ || y.n() != n_ || x.r() != r_ || y.r() != r_)
    throw DomainError("Schur elements from different algebras");
  SchurElement out(n_, r_);
  for (const auto& [b, cb] : x.terms())
    for (const auto& [a, ca] : y.terms()) {
      if (co(b) != ro(a)) continue;
      out.add_scaled(mul_basis(b, a), cb * ca);
    }
  return out;
}

SchurElement mul(const SchurElement& x, const SchurElement& y) {
  if (x.n() != y.n() || x.r() != y.r()) throw DomainError("Schur elements from different algebras");
  SchurMultiplier m(x.n(), x.r());
  return m.mul(x, y);
}

SchurElement tau(const SchurElement& x) {
  SchurElement out(x.n(), x.r());
  for (const auto& [a, c] : x.terms()) out.add(transpose(a), c);
  return out;
}

namespace {

void check_pm_input(const PeriodicMatrix& a, const Weight& w) {
  if (a.n() != w.n()) throw DomainError("weight size does not match the matrix");
  if (!lambda_of(a).is_zero()) throw DomainError("expected a matrix with zero diagonal");
  if (!w.is_natural()) throw DomainError("expected a natural weight");
}

}  // namespace

SchurElement brace_r(const PeriodicMatrix& a, const Weight& lambda, long r) {
  check_pm_input(a, lambda);
  SchurElement out(a.n(), r);
  if (!in_theta(a) || sigma(a) > r) return out;
  for (const auto& mu : compositions(a.n(), r - sigma(a)))
    out.add(a + PeriodicMatrix::diag(mu), weight_binom(mu, lambda));
  return out;
}

SchurElement bracket_r(const PeriodicMatrix& a, const Weight& j, long r) {
  check_pm_input(a, j);
  SchurElement out(a.n(), r);
  if (!in_theta(a) || sigma(a) > r) return out;
  for (const auto& mu : compositions(a.n(), r - sigma(a))) {
    Integer c = 1;
    for (int k = 0; k < a.n(); ++k) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(mu[static_cast<std::size_t>(k)]),
                    static_cast<unsigned long>(j[static_cast<std::size_t>(k)]));
      c *= p;
    }
    out.add(a + PeriodicMatrix::diag(mu), c);
  }
  return out;
}

SchurElement triangular_basis(SchurMultiplier& m, const PeriodicMatrix& a, const Weight& lambda) {
  if (!in_theta_pm(a)) throw DomainError("triangular_basis needs A with zero diagonal and entries >= 0");
  if (!lambda.is_natural() || sigma(lambda) != m.r()) throw DomainError("lambda must lie in Lambda(n, r)");
  const Weight gap = lambda - sigma_vec(a);
  if (!gap.is_natural()) throw DomainError("lambda must dominate sigma(A)");
  const auto parts = split(a);
  const long r = m.r();
  SchurElement x = brace_r(parts.upper, Weight::zero(a.n()), r);
  x = m.mul(x, std_basis(PeriodicMatrix::diag(lambda), r));
  x = m.mul(x, brace_r(parts.lower, Weight::zero(a.n()), r));
  check_unitriangular(x, a + PeriodicMatrix::diag(gap), "triangular basis");
  return x;
}

SchurElement triangular_basis(const PeriodicMatrix& a, const Weight& lambda, long r) {
  SchurMultiplier m(a.n(), r);
  return triangular_basis(m, a, lambda);
}

}  // namespace affschur
