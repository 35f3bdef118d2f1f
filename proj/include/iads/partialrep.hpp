#pragma once

#include "iads/monoalg.hpp"

#include <optional>
#include <vector>

namespace iads {

/// A monomial acting on the basis of ℓ²(G): the partial injection
/// x ↦ g + theta_p(theta_q^{-1}(x - h)) with domain h + theta_q(G). Kept in
/// closed form; on a valid system the canonical quadruple determines the
/// map uniquely, so equality of semantics is equality of quadruples.
struct PartialInjection {
  bool empty = true;
  Monomial m;

  friend bool operator==(const PartialInjection& a, const PartialInjection& b) {
    if (a.empty || b.empty) return a.empty == b.empty;
    return a.m == b.m;
  }
  friend bool operator!=(const PartialInjection& a, const PartialInjection& b) {
    return !(a == b);
  }
};

PartialInjection monomial_semantics(const DynamicalSystem& sys, const Monomial& m);
PartialInjection pinj_empty();
PartialInjection pinj_identity(const DynamicalSystem& sys);

Coset pinj_domain(const DynamicalSystem& sys, const PartialInjection& f);  // throws on empty
Coset pinj_range(const DynamicalSystem& sys, const PartialInjection& f);

std::optional<GroupElement> pinj_apply(const DynamicalSystem& sys, const PartialInjection& f,
                                       const GroupElement& x);

/// f ∘ s with domain pullback, computed from the set picture (range/domain
/// coset intersection) rather than from the product relations; the oracle
/// for mono_mul.
PartialInjection pinj_compose(const DynamicalSystem& sys, const PartialInjection& f,
                              const PartialInjection& s);

PartialInjection pinj_invert(const DynamicalSystem& sys, const PartialInjection& f);

std::string pinj_str(const DynamicalSystem& sys, const PartialInjection& f);

/// 0/1 matrix of a partial injection compressed to a finite window of basis
/// vectors; at most one entry per column.
struct TruncatedOperator {
  std::vector<GroupElement> window;
  std::vector<std::pair<size_t, size_t>> entries;  // (row, col): window[col] ↦ window[row]
};

TruncatedOperator truncate(const DynamicalSystem& sys, const PartialInjection& f,
                           const std::vector<GroupElement>& window);

bool truncated_equal(const TruncatedOperator& a, const TruncatedOperator& b);

/// Fraction of window basis vectors missed by Σ_{[g] ∈ F} e_{g,p}, where F
/// is the first class_count window-visible classes of G/theta_p(G) in
/// canonical order. Reaches exactly 0 at the full transversal in finite
/// type; stays positive for every finite F when the index is infinite.
Rat cnp3_defect(const DynamicalSystem& sys, const PElement& p,
                const std::vector<GroupElement>& window, size_t class_count);

/// Number of distinct classes of G/theta_p(G) visible in the window.
size_t visible_classes(const DynamicalSystem& sys, const PElement& p,
                       const std::vector<GroupElement>& window);

}  // namespace iads
