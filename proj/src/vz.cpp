#include "affschur/vz.hpp"

#include <algorithm>

#include "affschur/binomial.hpp"
#include "affschur/errors.hpp"
#include "affschur/schur.hpp"
#include "transfer.hpp"

namespace affschur {

using detail::TransferRows;
using detail::for_each_transfer;
using detail::transfer_at;

namespace {

void check_key(const VKey& k, int n) {
  if (k.matrix.n() != n || k.lambda.n() != n) throw DomainError("V basis symbol of the wrong size");
  if (!in_theta_pm(k.matrix)) throw DomainError("V basis matrices have zero diagonal and entries >= 0");
  if (!k.lambda.is_natural()) throw DomainError("V basis weights are in N^n");
}

void check_weight(const Weight& w, int n) {
  if (w.n() != n) throw DomainError("weight of the wrong size");
  if (!w.is_natural()) throw DomainError("generator weights are in N^n");
}

Weight wmin(const Weight& a, const Weight& b) {
  Weight m = a;
  for (std::size_t k = 0; k < m.coords().size(); ++k) m[k] = std::min(a[k], b[k]);
  return m;
}

// sum over beta <= lambda - delta, beta <= low of
// binom(high - low, lambda - beta - delta) binom(low + delta; beta, delta, low - beta).
Integer ab_coeff(const Weight& low, const Weight& high, const Weight& lambda, const Weight& delta) {
  Integer s = 0;
  const Weight gap = high - low;
  const Weight top = low + delta;
  for (const auto& beta : weights_below(wmin(low, lambda - delta)))
    s += weight_binom(gap, lambda - beta - delta) * weight_multinom(top, {beta, delta, low - beta});
  return s;
}

Integer weight_power(const Weight& base, const Weight& e) {
  Integer p = 1;
  for (std::size_t k = 0; k < base.coords().size(); ++k) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(base[k]), static_cast<unsigned long>(e[k]));
    p *= q;
  }
  return p;
}

}  // namespace

std::string VKey::str() const { return matrix.str() + "<" + lambda.str() + ">"; }

void VElement::add_checked(const VKey& k, const Integer& c) {
  check_key(k, n_);
  add(k, c);
}

VElement& VElement::operator+=(const VElement& o) {
  if (o.n_ != n_) throw DomainError("V elements of different sizes");
  Combination::operator+=(o);
  return *this;
}

VElement& VElement::operator-=(const VElement& o) {
  if (o.n_ != n_) throw DomainError("V elements of different sizes");
  Combination::operator-=(o);
  return *this;
}

bool VElement::operator==(const VElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

std::string VElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + k.str();
  }
  return s;
}

VElement v_basis(const PeriodicMatrix& a, const Weight& lambda) {
  VElement x(a.n());
  x.add_checked({a, lambda}, Integer(1));
  return x;
}

VElement v_unit(int n) { return v_basis(PeriodicMatrix(n), Weight::zero(n)); }

bool QVElement::operator==(const QVElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

std::string QVElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + k.str();
  }
  return s;
}

QVElement to_rational(const VElement& x) {
  QVElement q(x.n());
  for (const auto& [k, c] : x.terms()) q.add(k, Rational(c));
  return q;
}

VElement to_integral(const QVElement& x) {
  VElement v(x.n());
  for (const auto& [k, c] : x.terms()) {
    if (c.get_den() != 1) throw DomainError("non-integral coefficient " + c.get_str() + " on " + k.str());
    v.add(k, c.get_num());
  }
  return v;
}

VElement vmul_zero(const Weight& mu, const VElement& x) {
  check_weight(mu, x.n());
  VElement out(x.n());
  const auto deltas = weights_below(mu);
  for (const auto& [k, c] : x.terms()) {
    const Weight r = ro(k.matrix);
    for (const auto& delta : deltas) {
      Integer s = 0;
      const Weight top = k.lambda + delta;
      for (const auto& beta : weights_below(wmin(mu - delta, k.lambda)))
        s += weight_binom(r, mu - beta - delta) * weight_multinom(top, {beta, delta, k.lambda - beta});
      out.add({k.matrix, top}, c * s);
    }
  }
  return out;
}

VElement vmul_E(const Weight& alpha, const VElement& x) {
  const int n = x.n();
  check_weight(alpha, n);
  VElement out(n);
  for (const auto& [k, c] : x.terms()) {
    const PeriodicMatrix& a = k.matrix;
    for_each_transfer(alpha, detail::upper_slots(a, true), [&](const TransferRows& t) {
      Integer f = c;
      PeriodicMatrix res = a;
      Weight lt = Weight::zero(n), ltt = Weight::zero(n);
      for (long i = 1; i <= n; ++i)
        for (const auto& [j, v] : t[static_cast<std::size_t>(i - 1)]) {
          if (j == i) {
            lt[static_cast<std::size_t>(i - 1)] += v;
          } else {
            f *= binom(a.at(i, j) - transfer_at(t, i - 1, j) + v, v);
            res.add(i, j, v);
          }
          if (j == i + 1)
            ltt[static_cast<std::size_t>(i % n)] += v;
          else
            res.add(i + 1, j, -v);
        }
      if (f == 0 || !in_theta_pm(res)) return;
      for (const auto& delta : weights_below(k.lambda))
        out.add({res, lt + delta}, f * ab_coeff(lt, ltt, k.lambda, delta));
    });
  }
  return out;
}

VElement vmul_F(const Weight& alpha, const VElement& x) {
  const int n = x.n();
  check_weight(alpha, n);
  VElement out(n);
  for (const auto& [k, c] : x.terms()) {
    const PeriodicMatrix& a = k.matrix;
    for_each_transfer(alpha, detail::lower_slots(a, true), [&](const TransferRows& t) {
      Integer f = c;
      PeriodicMatrix res = a;
      Weight lt = Weight::zero(n), ltt = Weight::zero(n);
      for (long i = 1; i <= n; ++i)
        for (const auto& [j, v] : t[static_cast<std::size_t>(i - 1)]) {
          if (j == i)
            lt[static_cast<std::size_t>(i - 1)] += v;
          else
            res.add(i, j, -v);
          if (j == i + 1) {
            ltt[static_cast<std::size_t>(i % n)] += v;
          } else {
            f *= binom(a.at(i + 1, j) + v - transfer_at(t, i + 1, j), v);
            res.add(i + 1, j, v);
          }
        }
      if (f == 0 || !in_theta_pm(res)) return;
      for (const auto& delta : weights_below(k.lambda))
        out.add({res, ltt + delta}, f * ab_coeff(ltt, lt, k.lambda, delta));
    });
  }
  return out;
}

std::string Generator::str() const {
  switch (kind) {
    case Kind::E:
      return "E" + weight.str();
    case Kind::F:
      return "F" + weight.str();
    default:
      return "Z" + weight.str();
  }
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += " ";
    s += g.str();
  }
  return s;
}

VElement apply_generator(const Generator& g, const VElement& x) {
  switch (g.kind) {
    case Generator::Kind::E:
      return vmul_E(g.weight, x);
    case Generator::Kind::F:
      return vmul_F(g.weight, x);
    default:
      return vmul_zero(g.weight, x);
  }
}

VElement apply_word(const Word& w, VElement x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = apply_generator(*it, x);
  return x;
}

VElement evaluate(const Word& w, int n) { return apply_word(w, v_unit(n)); }

Word leading_word(const PeriodicMatrix& a, const Weight& lambda) {
  check_key({a, lambda}, a.n());
  const auto parts = split(a);
  Word w;
  for (const auto& alpha : radical_word(parts.upper)) w.push_back(Generator::e(alpha));
  for (int i = 1; i <= a.n(); ++i) {
    const long l = lambda.at(i);
    if (l > 0) w.push_back(Generator::zero(l * Weight::unit(a.n(), i)));
  }
  auto low = radical_word(transpose(parts.lower));
  std::reverse(low.begin(), low.end());
  for (const auto& beta : low) w.push_back(Generator::f(beta));
  return w;
}

const VElement& VAlgebra::leading_product(const VKey& k) {
  if (auto it = leads_.find(k); it != leads_.end()) return it->second;
  check_key(k, n_);
  VElement p = evaluate(leading_word(k.matrix, k.lambda), n_);
  if (p.coeff(k) != 1)
    throw TriangularityViolation("generator word for " + k.str() + " has leading coefficient " + p.coeff(k).get_str());
  const Weight sg = sigma_vec(k.matrix);
  for (const auto& [z, c] : p.terms()) {
    if (z == k) continue;
    if (z.matrix == k.matrix) {
      if (!less(z.lambda, k.lambda) || c != weight_binom(sg, k.lambda - z.lambda))
        throw TriangularityViolation("generator word for " + k.str() + " has unexpected term " + c.get_str() + "*" +
                                     z.str());
    } else if (!prec(z.matrix, k.matrix)) {
      throw TriangularityViolation("generator word for " + k.str() + ": " + z.matrix.str() + " is not below");
    }
  }
  return leads_.emplace(k, std::move(p)).first->second;
}

const std::map<Word, Integer>& VAlgebra::rewrite(const VKey& k) {
  if (auto it = rewrites_.find(k); it != rewrites_.end()) return it->second;
  const VElement& lead = leading_product(k);
  std::map<Word, Integer> words;
  words[leading_word(k.matrix, k.lambda)] = 1;
  for (const auto& [z, c] : lead.terms()) {
    if (z == k) continue;
    const auto& sub = rewrite(z);
    for (const auto& [w, d] : sub) {
      Integer& slot = words[w];
      slot -= c * d;
      if (slot == 0) words.erase(w);
    }
  }
  return rewrites_.emplace(k, std::move(words)).first->second;
}

VElement VAlgebra::mul_basis(const VKey& b, const VKey& a) {
  check_key(b, n_);
  check_key(a, n_);
  if (b.matrix.is_zero() && b.lambda.is_zero()) return v_basis(a.matrix, a.lambda);
  auto key = std::make_pair(b, a);
  if (auto it = products_.find(key); it != products_.end()) return it->second;
  const VElement& lead = leading_product(b);
  VElement out = apply_word(leading_word(b.matrix, b.lambda), v_basis(a.matrix, a.lambda));
  for (const auto& [z, c] : lead.terms()) {
    if (z == b) continue;
    const VElement sub = mul_basis(z, a);
    for (const auto& [y, d] : sub.terms()) out.add(y, -(c * d));
  }
  if (products_.size() > 200000) products_.clear();
  products_.emplace(std::move(key), out);
  return out;
}

VElement VAlgebra::mul(const VElement& x, const VElement& y) {
  if (x.n() != n_ || y.n() != n_) throw DomainError("V elements of different sizes");
  VElement out(n_);
  for (const auto& [b, cb] : x.terms())
    for (const auto& [a, ca] : y.terms()) {
      const Integer s = cb * ca;
      const VElement p = mul_basis(b, a);
      for (const auto& [z, c] : p.terms()) out.add(z, s * c);
    }
  return out;
}

VElement vmul(const VElement& x, const VElement& y) {
  VAlgebra alg(x.n());
  return alg.mul(x, y);
}

namespace {

using BracketMemo = std::map<Weight, VElement>;

const VElement& bracket_rec(const PeriodicMatrix& a, const Weight& j, BracketMemo& memo) {
  if (auto it = memo.find(j); it != memo.end()) return it->second;
  const int n = a.n();
  VElement x = v_basis(a, Weight::zero(n));
  for (int i = 1; i <= n; ++i)
    for (long t = 0; t < j.at(i); ++t) x = vmul_zero(Weight::unit(n, i), x);
  const Weight r = ro(a);
  for (const auto& alpha : weights_below(j)) {
    if (alpha == j) continue;
    const Integer c = weight_binom(j, alpha) * weight_power(r, j - alpha);
    const VElement& sub = bracket_rec(a, alpha, memo);
    for (const auto& [k, d] : sub.terms()) x.add(k, -(c * d));
  }
  return memo.emplace(j, std::move(x)).first->second;
}

using BraceMemo = std::map<Weight, QVElement>;

const QVElement& brace_rec(const PeriodicMatrix& a, const Weight& lambda, BracketMemo& bm, BraceMemo& memo) {
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  const VElement& br = bracket_rec(a, lambda, bm);
  const Integer lead = br.coeff({a, lambda});
  if (lead != weight_factorial(lambda))
    throw OracleInconsistency("A[j] has leading coefficient " + lead.get_str() + " on " + VKey{a, lambda}.str());
  QVElement x(a.n());
  x.add({a, lambda}, Rational(1));
  for (const auto& [k, c] : br.terms()) {
    if (k.lambda == lambda) continue;
    if (k.matrix != a || !less(k.lambda, lambda))
      throw OracleInconsistency("A[j] has a term outside the expected range: " + k.str());
    const QVElement& sub = brace_rec(a, k.lambda, bm, memo);
    for (const auto& [z, d] : sub.terms()) x.add(z, -Rational(c) * d);
  }
  QVElement scaled(a.n());
  const Rational inv(Integer(1), lead);
  for (const auto& [z, d] : x.terms()) scaled.add(z, d * inv);
  return memo.emplace(lambda, std::move(scaled)).first->second;
}

}  // namespace

VElement bracket_in_brace(const PeriodicMatrix& a, const Weight& j) {
  check_key({a, j}, a.n());
  BracketMemo memo;
  return bracket_rec(a, j, memo);
}

QVElement brace_in_bracket(const PeriodicMatrix& a, const Weight& lambda) {
  check_key({a, lambda}, a.n());
  BracketMemo bm;
  BraceMemo memo;
  return brace_rec(a, lambda, bm, memo);
}

QVElement brace_to_bracket(const VElement& x) {
  QVElement out(x.n());
  std::map<PeriodicMatrix, std::pair<BracketMemo, BraceMemo>> memos;
  for (const auto& [k, c] : x.terms()) {
    auto& [bm, memo] = memos[k.matrix];
    const QVElement& sub = brace_rec(k.matrix, k.lambda, bm, memo);
    for (const auto& [z, d] : sub.terms()) out.add(z, Rational(c) * d);
  }
  return out;
}

QVElement bracket_to_brace(const QVElement& y) {
  QVElement out(y.n());
  std::map<PeriodicMatrix, BracketMemo> memos;
  for (const auto& [k, c] : y.terms()) {
    check_key(k, y.n());
    const VElement& sub = bracket_rec(k.matrix, k.lambda, memos[k.matrix]);
    for (const auto& [z, d] : sub.terms()) out.add(z, c * Rational(d));
  }
  return out;
}

SchurElement zeta_r(const VElement& x, long r) {
  SchurElement out(x.n(), r);
  for (const auto& [k, c] : x.terms()) {
    const SchurElement s = brace_r(k.matrix, k.lambda, r);
    for (const auto& [a, d] : s.terms()) out.add(a, c * d);
  }
  return out;
}

void PBWMonomial::validate() const {
  if (n < 1 || diag.n() != n) throw DomainError("PBW monomial of the wrong size");
  if (!diag.is_natural()) throw DomainError("PBW diagonal part must be in N^n");
  for (const auto& [ij, e] : upper)
    if (ij.first < 1 || ij.first > n || ij.second <= ij.first || e < 1)
      throw DomainError("bad upper PBW factor");
  for (const auto& [ij, e] : lower)
    if (ij.first < 1 || ij.first > n || ij.second >= ij.first || e < 1)
      throw DomainError("bad lower PBW factor");
}

std::string PBWMonomial::str() const {
  std::string s;
  auto factors = [&](const std::map<std::pair<long, long>, long>& m) {
    for (const auto& [ij, e] : m) {
      if (!s.empty()) s += " ";
      s += "E(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")^" + std::to_string(e);
    }
  };
  factors(upper);
  if (!diag.is_zero()) s += (s.empty() ? "" : " ") + std::string("0<") + diag.str() + ">";
  factors(lower);
  return s.empty() ? "1" : s;
}

VElement loop_generator(int n, long i, long j) {
  if (i == j) return v_basis(PeriodicMatrix(n), Weight::unit(n, i));
  return v_basis(PeriodicMatrix::unit(n, i, j), Weight::zero(n));
}

VElement xi_pbw(VAlgebra& alg, const PBWMonomial& m) {
  m.validate();
  if (alg.n() != m.n) throw DomainError("PBW monomial of the wrong size");
  std::vector<VElement> factors;
  for (const auto& [ij, e] : m.upper)
    for (long t = 0; t < e; ++t) factors.push_back(loop_generator(m.n, ij.first, ij.second));
  if (!m.diag.is_zero()) factors.push_back(v_basis(PeriodicMatrix(m.n), m.diag));
  for (const auto& [ij, e] : m.lower)
    for (long t = 0; t < e; ++t) factors.push_back(loop_generator(m.n, ij.first, ij.second));
  VElement y = v_unit(m.n);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) y = alg.mul(*it, y);
  return y;
}

VElement xi_pbw(const PBWMonomial& m) {
  VAlgebra alg(m.n);
  return xi_pbw(alg, m);
}

}  // namespace affschur
