#include "iads/pmonoid.hpp"

namespace iads {

PElement p_mul(const PElement& a, const PElement& b) {
  PElement r = a;
  for (const auto& [id, e] : b.exp_) {
    Int& v = r.exp_[id];
    v += e;
    if (v == 0) r.exp_.erase(id);
  }
  return r;
}

PElement p_pow(const PElement& a, const Int& n) {
  if (n < 0) throw std::domain_error("p_pow: negative power");
  PElement r;
  for (const auto& [id, e] : a.exp_)
    if (n > 0) r.exp_[id] = e * n;
  return r;
}

PElement p_lcm(const PElement& a, const PElement& b) {
  PElement r = a;
  for (const auto& [id, e] : b.exp_) {
    Int& v = r.exp_[id];
    if (e > v) v = e;
  }
  return r;
}

PElement p_gcd(const PElement& a, const PElement& b) {
  PElement r;
  for (const auto& [id, e] : a.exp_) {
    auto it = b.exp_.find(id);
    if (it == b.exp_.end()) continue;
    Int m = e < it->second ? e : it->second;
    if (m > 0) r.exp_[id] = m;
  }
  return r;
}

bool p_divides(const PElement& a, const PElement& b) {
  for (const auto& [id, e] : a.exp_)
    if (b.exponent(id) < e) return false;
  return true;
}

PElement p_quotient(const PElement& a, const PElement& b) {
  if (!p_divides(a, b)) throw std::domain_error("p_quotient: divisor does not divide");
  PElement r = b;
  for (const auto& [id, e] : a.exp_) {
    Int& v = r.exp_[id];
    v -= e;
    if (v == 0) r.exp_.erase(id);
  }
  return r;
}

std::string PElement::str(const std::vector<std::string>* names) const {
  if (exp_.empty()) return "1";
  std::string s;
  bool first = true;
  for (const auto& [id, e] : exp_) {
    if (!first) s += "*";
    first = false;
    if (names != nullptr && id < names->size())
      s += (*names)[id];
    else
      s += "g" + std::to_string(id);
    if (e != 1) s += "^" + e.str();
  }
  return s;
}

}  // namespace iads
