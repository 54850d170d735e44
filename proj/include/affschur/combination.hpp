#pragma once

#include <map>
#include <utility>

#include "affschur/int_valued_poly.hpp"
#include "affschur/integer.hpp"

namespace affschur {

inline bool coeff_is_zero(const Integer& c) { return c == 0; }
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const IntValuedPoly& c) { return c.is_zero(); }

// Finite linear combination with zero coefficients never stored.
template <class Key, class Coeff>
class Combination {
 public:
  using Map = std::map<Key, Coeff>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Key& k, const Coeff& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const Combination& o, const Coeff& s) {
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  Combination& operator+=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }

  Combination& operator-=(const Combination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }

  bool operator==(const Combination& o) const { return terms_ == o.terms_; }

 protected:
  Map terms_;
};

}  // namespace affschur
