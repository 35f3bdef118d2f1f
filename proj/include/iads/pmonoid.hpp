#pragma once

#include "iads/numeric.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace iads {

using GenId = unsigned;

/// Element of the countably generated free abelian monoid P, stored as a
/// finitely supported exponent vector over generator ids. Exponents are
/// arbitrary-precision naturals and zero exponents are never stored.
class PElement {
 public:
  PElement() = default;

  static PElement one() { return {}; }

  static PElement generator(GenId id, Int exp = 1) {
    PElement p;
    if (exp < 0) throw std::domain_error("PElement: negative exponent");
    if (exp > 0) p.exp_[id] = std::move(exp);
    return p;
  }

  [[nodiscard]] bool is_one() const { return exp_.empty(); }

  [[nodiscard]] Int exponent(GenId id) const {
    auto it = exp_.find(id);
    return it == exp_.end() ? Int(0) : it->second;
  }

  [[nodiscard]] const std::map<GenId, Int>& exponents() const { return exp_; }

  [[nodiscard]] Int total_degree() const {
    Int d = 0;
    for (const auto& [id, e] : exp_) d += e;
    return d;
  }

  friend bool operator==(const PElement& a, const PElement& b) { return a.exp_ == b.exp_; }
  friend bool operator!=(const PElement& a, const PElement& b) { return !(a == b); }
  friend bool operator<(const PElement& a, const PElement& b) { return a.exp_ < b.exp_; }

  [[nodiscard]] std::string str(const std::vector<std::string>* names = nullptr) const;

 private:
  std::map<GenId, Int> exp_;

  friend PElement p_mul(const PElement&, const PElement&);
  friend PElement p_lcm(const PElement&, const PElement&);
  friend PElement p_gcd(const PElement&, const PElement&);
  friend bool p_divides(const PElement&, const PElement&);
  friend PElement p_quotient(const PElement&, const PElement&);
  friend PElement p_pow(const PElement&, const Int&);
};

PElement p_mul(const PElement& a, const PElement& b);
PElement p_pow(const PElement& a, const Int& n);

/// Componentwise max / min of exponents.
PElement p_lcm(const PElement& a, const PElement& b);
PElement p_gcd(const PElement& a, const PElement& b);

/// a | b, i.e. b in aP.
bool p_divides(const PElement& a, const PElement& b);

/// b with a's exponents removed; requires p_divides(a, b).
PElement p_quotient(const PElement& a, const PElement& b);

inline bool p_coprime(const PElement& a, const PElement& b) { return p_gcd(a, b).is_one(); }

}  // namespace iads
