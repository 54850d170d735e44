#include "affschur/schur_element.hpp"

#include "affschur/errors.hpp"

namespace affschur {

void SchurElement::add_checked(const PeriodicMatrix& a, const Integer& c) {
  if (a.n() != n_) throw DomainError("matrix size does not match the Schur algebra");
  if (!in_theta(a)) throw DomainError("Schur basis matrices have nonnegative entries");
  if (sigma(a) != r_) throw DomainError("sigma(A) does not match r");
  add(a, c);
}

SchurElement& SchurElement::operator+=(const SchurElement& o) {
  if (o.n_ != n_ || o.r_ != r_) throw DomainError("Schur elements from different algebras");
  Combination::operator+=(o);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& o) {
  if (o.n_ != n_ || o.r_ != r_) throw DomainError("Schur elements from different algebras");
  Combination::operator-=(o);
  return *this;
}

bool SchurElement::operator==(const SchurElement& o) const {
  return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
}

std::string SchurElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "[" + a.str() + "]";
  }
  return s;
}

SchurElement std_basis(const PeriodicMatrix& a, long r) {
  if (!in_theta_tilde(a)) throw DomainError("negative off-diagonal entry");
  if (sigma(a) != r) throw DomainError("sigma(A) does not match r");
  SchurElement out(a.n(), r);
  if (in_theta(a)) out.add(a, Integer(1));
  return out;
}

SchurElement std_basis(const PeriodicMatrix& a) { return std_basis(a, sigma(a)); }

}  // namespace affschur
