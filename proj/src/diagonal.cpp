#include "iads/diagonal.hpp"

#include <algorithm>
#include <cmath>

namespace iads {

DiagonalElement DiagonalElement::projection(const DynamicalSystem& sys, const GroupElement& g,
                                            const PElement& p) {
  DiagonalElement d;
  d.add_term(make_coset(sys, g, p), GaussianRat(1));
  return d;
}

DiagonalElement DiagonalElement::unit(const DynamicalSystem& sys) {
  return projection(sys, g_id(sys.backend()), PElement::one());
}

void DiagonalElement::add_term(const Coset& c, const GaussianRat& coeff) {
  auto it = terms_.find(c);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(c, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string DiagonalElement::str(const DynamicalSystem& sys) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, coeff] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += coeff.str() + "*e" + coset_str(sys, c);
  }
  return s;
}

DiagonalElement diag_add(const DiagonalElement& a, const DiagonalElement& b) {
  DiagonalElement r = a;
  for (const auto& [c, coeff] : b.terms()) r.add_term(c, coeff);
  return r;
}

DiagonalElement diag_scale(const GaussianRat& c, const DiagonalElement& a) {
  DiagonalElement r;
  if (c.is_zero()) return r;
  for (const auto& [key, coeff] : a.terms()) r.add_term(key, c * coeff);
  return r;
}

DiagonalElement diag_mul(const DynamicalSystem& sys, const DiagonalElement& a,
                         const DiagonalElement& b) {
  DiagonalElement r;
  for (const auto& [ca, va] : a.terms())
    for (const auto& [cb, vb] : b.terms()) {
      auto inter = coset_intersect(sys, ca, cb);
      if (inter) r.add_term(*inter, va * vb);
    }
  return r;
}

DiagonalElement cnp3_expand(const DynamicalSystem& sys, const PElement& p) {
  DiagonalElement r;
  for (const auto& t : sys.transversal_at(p)) r.add_term(Coset{t, p}, GaussianRat(1));
  return r;
}

DiagonalElement tau_act(const DynamicalSystem& sys, const GroupElement& g,
                        const DiagonalElement& a) {
  DiagonalElement r;
  for (const auto& [c, coeff] : a.terms())
    r.add_term(make_coset(sys, g_op(sys.backend(), g, c.g), c.p), coeff);
  return r;
}

DiagNorm diag_norm(const DynamicalSystem& sys, const DiagonalElement& a) {
  DiagNorm out;
  out.value = Rat(0);
  if (a.is_zero()) return out;
  std::vector<Coset> keys;
  std::vector<GaussianRat> coeffs;
  keys.reserve(a.size());
  for (const auto& [c, v] : a.terms()) {
    keys.push_back(c);
    coeffs.push_back(v);
  }
  size_t n = keys.size();
  if (n > 16) throw std::domain_error("diag_norm: more than 16 projection terms");

  bool have = false;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    // intersect the A-side
    std::optional<Coset> cell = Coset{g_id(sys.backend()), PElement::one()};
    GaussianRat sum;
    for (size_t i = 0; i < n && cell; ++i)
      if (mask & (1UL << i)) {
        cell = coset_intersect(sys, *cell, keys[i]);
        sum += coeffs[i];
      }
    if (!cell) continue;
    std::vector<Coset> blockers;
    for (size_t i = 0; i < n; ++i)
      if (!(mask & (1UL << i))) blockers.push_back(keys[i]);
    auto wit = constellation_nonempty(sys, *cell, blockers);
    if (!wit) continue;  // Q_{F,A} = 0

    Rat m = sum.norm_sq();
    if (!have || m > out.value_sq) {
      have = true;
      out.value_sq = m;
      out.achieving_sum = sum;
      out.subset.clear();
      for (size_t i = 0; i < n; ++i)
        if (mask & (1UL << i)) out.subset.push_back(keys[i]);
      out.witness = *wit;
    }
  }
  if (out.achieving_sum.is_real()) {
    out.value = boost::multiprecision::abs(out.achieving_sum.re);
  } else {
    out.value.reset();
  }
  return out;
}

double DiagNorm::approx() const {
  return std::sqrt(value_sq.convert_to<double>());
}

std::optional<Coset> norming_projection(const DynamicalSystem& sys, const DiagonalElement& a) {
  if (a.is_zero()) return std::nullopt;
  return diag_norm(sys, a).witness;
}

SpectrumLevel spectrum_level(const DynamicalSystem& sys, const PElement& p) {
  return SpectrumLevel{p, sys.transversal_at(p)};
}

GroupElement iota_level(const DynamicalSystem& sys, const GroupElement& g, const PElement& p) {
  return sys.rep(p, g);
}

std::vector<size_t> level_map(const DynamicalSystem& sys, const SpectrumLevel& fine,
                              const PElement& coarse_p) {
  if (!p_divides(coarse_p, fine.p))
    throw std::domain_error("level_map: coarse level does not divide the fine level");
  std::map<GroupElement, size_t> where;
  const auto& coarse = sys.transversal_at(coarse_p);
  for (size_t i = 0; i < coarse.size(); ++i) where.emplace(coarse[i], i);
  std::vector<size_t> table;
  table.reserve(fine.points.size());
  for (const auto& x : fine.points) {
    auto it = where.find(sys.rep(coarse_p, x));
    if (it == where.end()) throw std::logic_error("level_map: representative missing");
    table.push_back(it->second);
  }
  return table;
}

std::vector<ChainLevel> cofinal_chain(const DynamicalSystem& sys, int length) {
  std::vector<ChainLevel> chain;
  PElement c = sys.full_product();
  for (int n = 1; n <= length; ++n) {
    ChainLevel lvl;
    lvl.p = p_pow(c, n);
    lvl.index = sys.index(lvl.p);
    if (lvl.index) lvl.invariant_factors = quotient_structure(sys.backend(), sys.theta(lvl.p));
    chain.push_back(std::move(lvl));
  }
  return chain;
}

}  // namespace iads
