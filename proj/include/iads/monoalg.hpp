#pragma once

#include "iads/diagonal.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace iads {

/// Canonical spanning monomial u_g s_p s_q^* u_h^*. The gauge redundancy
/// (g,p,q,h) ~ (g + theta_p(k), p, q, h + theta_q(k)) is resolved by
/// reducing h to the canonical transversal of G/theta_q(G) and absorbing
/// the shift into g.
struct Monomial {
  GroupElement g;
  PElement p, q;
  GroupElement h;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.p == b.p && a.q == b.q && a.g == b.g && a.h == b.h;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    if (a.g != b.g) return a.g < b.g;
    return a.h < b.h;
  }
};

Monomial mono_canonicalize(const DynamicalSystem& sys, const GroupElement& g, const PElement& p,
                           const PElement& q, const GroupElement& h);

Monomial mono_unit(const DynamicalSystem& sys);
Monomial mono_u(const DynamicalSystem& sys, const GroupElement& g);
Monomial mono_s(const DynamicalSystem& sys, const PElement& p);
Monomial mono_proj(const DynamicalSystem& sys, const GroupElement& g, const PElement& p);

Monomial mono_star(const DynamicalSystem& sys, const Monomial& m);

/// Product of canonical monomials; absent encodes the zero product (the
/// middle factorization of relation two fails).
std::optional<Monomial> mono_mul(const DynamicalSystem& sys, const Monomial& m1,
                                 const Monomial& m2);

std::string mono_str(const DynamicalSystem& sys, const Monomial& m);

/// Signed gauge degree: exponents of p minus exponents of q.
std::map<GenId, Int> gauge_degree(const Monomial& m);

/// Finite formal sum of canonical monomials with Gaussian-rational
/// coefficients.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, GaussianRat>;

  AlgebraElement() = default;
  static AlgebraElement monomial(const Monomial& m, const GaussianRat& c = GaussianRat(1));

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] size_t size() const { return terms_.size(); }
  void add_term(const Monomial& m, const GaussianRat& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  [[nodiscard]] std::string str(const DynamicalSystem& sys) const;

 private:
  Terms terms_;
};

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_scale(const GaussianRat& c, const AlgebraElement& a);
AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_mul(const DynamicalSystem& sys, const AlgebraElement& a,
                       const AlgebraElement& b);
AlgebraElement alg_star(const DynamicalSystem& sys, const AlgebraElement& a);

/// Rewrites every term to the finest common level reachable through
/// finite-index partitions of unity, one gauge-degree class at a time. Two
/// elements represent the same algebra element iff their refinements agree.
AlgebraElement alg_refine(const DynamicalSystem& sys, const AlgebraElement& a);

bool alg_equiv(const DynamicalSystem& sys, const AlgebraElement& a, const AlgebraElement& b);

/// Gauge-invariant part: drops every term of nonzero gauge degree.
AlgebraElement expectation_E1(const AlgebraElement& a);

/// Core-to-diagonal expectation; rejects terms of nonzero gauge degree.
DiagonalElement expectation_E2(const DynamicalSystem& sys, const AlgebraElement& a);

/// E = E2 ∘ E1: keeps the terms with p = q and g = h as diagonal
/// projections.
DiagonalElement expectation_E(const DynamicalSystem& sys, const AlgebraElement& a);

/// Lifts a diagonal element into the algebra.
AlgebraElement alg_from_diagonal(const DynamicalSystem& sys, const DiagonalElement& d);

struct CovarianceCheck {
  std::string name;
  size_t samples = 0;
  size_t failures = 0;
  std::string first_failure;
  [[nodiscard]] bool pass() const { return failures == 0; }
};

/// Executable covariance identities: (i) conjugation by u_g s_p maps
/// e_{h,q} to e_{g+theta_p(h), pq}; (ii) the isometries u_g s_p compose by
/// the semidirect product rule; (iii) s_p u_g = u_{theta_p(g)} s_p together
/// with the corner identity s_p (e_{h,q} u_g) s_p^* = e_{theta_p(h),pq}
/// u_{theta_p(g)}.
std::vector<CovarianceCheck> covariance_check(const DynamicalSystem& sys, size_t samples,
                                              uint64_t seed);

}  // namespace iads
