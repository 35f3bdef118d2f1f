#include "iads/monoalg.hpp"

#include "iads/sampling.hpp"

#include <algorithm>

namespace iads {

Monomial mono_canonicalize(const DynamicalSystem& sys, const GroupElement& g, const PElement& p,
                           const PElement& q, const GroupElement& h) {
  const GroupBackend& b = sys.backend();
  GroupElement h0 = sys.rep(q, h);
  auto k = sys.preimage(q, g_sub(b, h, h0));
  if (!k) throw std::logic_error("mono_canonicalize: representative defect");
  GroupElement g2 = g_sub(b, g, sys.apply(p, *k));
  return Monomial{std::move(g2), p, q, std::move(h0)};
}

Monomial mono_unit(const DynamicalSystem& sys) {
  GroupElement e = g_id(sys.backend());
  return Monomial{e, PElement::one(), PElement::one(), e};
}

Monomial mono_u(const DynamicalSystem& sys, const GroupElement& g) {
  return Monomial{g, PElement::one(), PElement::one(), g_id(sys.backend())};
}

Monomial mono_s(const DynamicalSystem& sys, const PElement& p) {
  return Monomial{g_id(sys.backend()), p, PElement::one(), g_id(sys.backend())};
}

Monomial mono_proj(const DynamicalSystem& sys, const GroupElement& g, const PElement& p) {
  return mono_canonicalize(sys, g, p, p, g);
}

Monomial mono_star(const DynamicalSystem& sys, const Monomial& m) {
  return mono_canonicalize(sys, m.h, m.q, m.p, m.g);
}

std::optional<Monomial> mono_mul(const DynamicalSystem& sys, const Monomial& m1,
                                 const Monomial& m2) {
  const GroupBackend& b = sys.backend();
  GroupElement w = g_sub(b, m2.g, m1.h);
  auto split = sys.factorize(m1.q, m2.p, w);
  if (!split) return std::nullopt;
  const auto& [a, c] = *split;
  PElement d = p_gcd(m1.q, m2.p);
  PElement r1 = p_quotient(d, m1.q);  // (p ∧ q)^{-1} q1
  PElement r2 = p_quotient(d, m2.p);  // (p ∧ q)^{-1} p2
  GroupElement g2 = g_op(b, m1.g, sys.apply(m1.p, a));
  GroupElement h2 = g_sub(b, m2.h, sys.apply(m2.q, c));
  return mono_canonicalize(sys, g2, p_mul(m1.p, r2), p_mul(m2.q, r1), h2);
}

std::string mono_str(const DynamicalSystem& sys, const Monomial& m) {
  std::string s;
  if (!g_is_id(m.g)) s += "u(" + sys.g_text(m.g) + ")";
  if (!m.p.is_one()) s += "s(" + sys.p_str(m.p) + ")";
  if (!m.q.is_one()) s += "s(" + sys.p_str(m.q) + ")*";
  if (!g_is_id(m.h)) s += "u(" + sys.g_text(m.h) + ")*";
  if (s.empty()) s = "1";
  return s;
}

std::map<GenId, Int> gauge_degree(const Monomial& m) {
  std::map<GenId, Int> d;
  for (const auto& [id, e] : m.p.exponents()) d[id] += e;
  for (const auto& [id, e] : m.q.exponents()) {
    auto it = d.emplace(id, 0).first;
    it->second -= e;
  }
  for (auto it = d.begin(); it != d.end();)
    it = (it->second == 0) ? d.erase(it) : std::next(it);
  return d;
}

AlgebraElement AlgebraElement::monomial(const Monomial& m, const GaussianRat& c) {
  AlgebraElement a;
  a.add_term(m, c);
  return a;
}

void AlgebraElement::add_term(const Monomial& m, const GaussianRat& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string AlgebraElement::str(const DynamicalSystem& sys) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.str() + "*" + mono_str(sys, m);
  }
  return s;
}

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

AlgebraElement alg_scale(const GaussianRat& c, const AlgebraElement& a) {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : a.terms()) r.add_term(m, c * v);
  return r;
}

AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b) {
  return alg_add(a, alg_scale(GaussianRat(-1), b));
}

AlgebraElement alg_mul(const DynamicalSystem& sys, const AlgebraElement& a,
                       const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [ma, va] : a.terms())
    for (const auto& [mb, vb] : b.terms()) {
      auto prod = mono_mul(sys, ma, mb);
      if (prod) r.add_term(*prod, va * vb);
    }
  return r;
}

AlgebraElement alg_star(const DynamicalSystem& sys, const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [m, c] : a.terms()) r.add_term(mono_star(sys, m), c.conj());
  return r;
}

namespace {

// Exponent vector of p restricted to the generators of infinite index; two
// terms of equal gauge degree are related by finite partitions of unity
// exactly when these restrictions agree.
PElement infinite_part(const DynamicalSystem& sys, const PElement& p) {
  return sys.fin_inf_split(p).second;
}

}  // namespace

AlgebraElement alg_refine(const DynamicalSystem& sys, const AlgebraElement& a) {
  // component key: (gauge degree, infinite part of p)
  using Key = std::pair<std::map<GenId, Int>, PElement>;
  std::map<Key, std::vector<std::pair<Monomial, GaussianRat>>> classes;
  for (const auto& [m, c] : a.terms())
    classes[{gauge_degree(m), infinite_part(sys, m.p)}].emplace_back(m, c);

  const GroupBackend& b = sys.backend();
  AlgebraElement out;
  for (auto& [key, terms] : classes) {
    PElement target;
    for (const auto& [m, c] : terms) target = p_lcm(target, m.p);
    for (const auto& [m, c] : terms) {
      PElement r = p_quotient(m.p, target);
      if (r.is_one()) {
        out.add_term(m, c);
        continue;
      }
      for (const auto& t : sys.transversal_at(r)) {
        Monomial fine = mono_canonicalize(sys, g_op(b, m.g, sys.apply(m.p, t)),
                                          p_mul(m.p, r), p_mul(m.q, r),
                                          g_op(b, m.h, sys.apply(m.q, t)));
        out.add_term(fine, c);
      }
    }
  }
  return out;
}

bool alg_equiv(const DynamicalSystem& sys, const AlgebraElement& a, const AlgebraElement& b) {
  return alg_refine(sys, alg_sub(a, b)).is_zero();
}

AlgebraElement expectation_E1(const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [m, c] : a.terms())
    if (m.p == m.q) r.add_term(m, c);
  return r;
}

DiagonalElement expectation_E2(const DynamicalSystem& sys, const AlgebraElement& a) {
  DiagonalElement r;
  for (const auto& [m, c] : a.terms()) {
    if (m.p != m.q)
      throw std::domain_error("expectation_E2: element has a term of nonzero gauge degree");
    if (m.g == m.h) r.add_term(make_coset(sys, m.g, m.p), c);
  }
  return r;
}

DiagonalElement expectation_E(const DynamicalSystem& sys, const AlgebraElement& a) {
  return expectation_E2(sys, expectation_E1(a));
}

AlgebraElement alg_from_diagonal(const DynamicalSystem& sys, const DiagonalElement& d) {
  AlgebraElement r;
  for (const auto& [c, v] : d.terms()) r.add_term(mono_proj(sys, c.g, c.p), v);
  return r;
}

std::vector<CovarianceCheck> covariance_check(const DynamicalSystem& sys, size_t samples,
                                              uint64_t seed) {
  Sampler rng(seed);
  const GroupBackend& bk = sys.backend();
  CovarianceCheck conj{"conjugation moves projections along the action", samples, 0, ""};
  CovarianceCheck semi{"isometries compose by the semidirect product rule", samples, 0, ""};
  CovarianceCheck inter{"s_p u_g = u_{theta_p(g)} s_p and its corner form", samples, 0, ""};

  for (size_t i = 0; i < samples; ++i) {
    GroupElement g = rng.sample_g(sys, 3), h = rng.sample_g(sys, 3);
    PElement p = rng.sample_p(sys, 2), q = rng.sample_p(sys, 2);

    // (i) u_g s_p e_{h,q} (u_g s_p)^* = e_{g + theta_p(h), pq}
    {
      Monomial v = mono_canonicalize(sys, g, p, PElement::one(), g_id(bk));
      auto lhs1 = mono_mul(sys, v, mono_proj(sys, h, q));
      auto lhs = lhs1 ? mono_mul(sys, *lhs1, mono_star(sys, v)) : std::nullopt;
      Monomial rhs = mono_proj(sys, g_op(bk, g, sys.apply(p, h)), p_mul(p, q));
      if (!lhs || !(*lhs == rhs)) {
        ++conj.failures;
        if (conj.first_failure.empty())
          conj.first_failure = "g=" + sys.g_text(g) + " p=" + sys.p_str(p) +
                               " h=" + sys.g_text(h) + " q=" + sys.p_str(q);
      }
    }

    // (ii) v_{(g,p)} v_{(h,q)} = v_{(g + theta_p(h), pq)}
    {
      Monomial v1 = mono_canonicalize(sys, g, p, PElement::one(), g_id(bk));
      Monomial v2 = mono_canonicalize(sys, h, q, PElement::one(), g_id(bk));
      auto lhs = mono_mul(sys, v1, v2);
      Monomial rhs = mono_canonicalize(sys, g_op(bk, g, sys.apply(p, h)), p_mul(p, q),
                                       PElement::one(), g_id(bk));
      if (!lhs || !(*lhs == rhs)) {
        ++semi.failures;
        if (semi.first_failure.empty())
          semi.first_failure = "g=" + sys.g_text(g) + " p=" + sys.p_str(p) +
                               " h=" + sys.g_text(h) + " q=" + sys.p_str(q);
      }
    }

    // (iii) the intertwining relation and its compression to a corner
    {
      auto lhs = mono_mul(sys, mono_s(sys, p), mono_u(sys, g));
      auto rhs = mono_mul(sys, mono_u(sys, sys.apply(p, g)), mono_s(sys, p));
      bool ok = lhs && rhs && *lhs == *rhs;
      if (ok) {
        // s_p (e_{h,q} u_g) s_p^* = e_{theta_p(h), pq} u_{theta_p(g)}
        auto x = mono_mul(sys, mono_proj(sys, h, q), mono_u(sys, g));
        auto mid = x ? mono_mul(sys, mono_s(sys, p), *x) : std::nullopt;
        auto lhs2 = mid ? mono_mul(sys, *mid, mono_star(sys, mono_s(sys, p))) : std::nullopt;
        auto y = mono_mul(sys, mono_proj(sys, sys.apply(p, h), p_mul(p, q)),
                          mono_u(sys, sys.apply(p, g)));
        ok = lhs2 && y && *lhs2 == *y;
      }
      if (!ok) {
        ++inter.failures;
        if (inter.first_failure.empty())
          inter.first_failure = "g=" + sys.g_text(g) + " p=" + sys.p_str(p) +
                               " h=" + sys.g_text(h) + " q=" + sys.p_str(q);
      }
    }
  }
  return {conj, semi, inter};
}

}  // namespace iads
