#pragma once

#include "iads/dynsys.hpp"

#include <optional>
#include <vector>

namespace iads {

/// The coset g + theta_p(G), stored with the canonical representative of g
/// so that structural equality coincides with equality of cosets.
struct Coset {
  GroupElement g;
  PElement p;

  friend bool operator==(const Coset& a, const Coset& b) { return a.p == b.p && a.g == b.g; }
  friend bool operator!=(const Coset& a, const Coset& b) { return !(a == b); }
  friend bool operator<(const Coset& a, const Coset& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.g < b.g;
  }
};

Coset make_coset(const DynamicalSystem& sys, const GroupElement& g, const PElement& p);

std::string coset_str(const DynamicalSystem& sys, const Coset& c);

bool coset_contains(const DynamicalSystem& sys, const Coset& c, const GroupElement& x);

/// The intersection formula: (g + theta_p(G)) ∩ (h + theta_q(G)) is either
/// empty or a single coset at level p ∨ q, located through a factorization
/// h - g = theta_p(a) + theta_q(b). The result does not depend on the
/// factorization witness.
std::optional<Coset> coset_intersect(const DynamicalSystem& sys, const Coset& c1,
                                     const Coset& c2);

/// The sub-cosets of c at the refined level L (p | L), enumerated in the
/// deterministic transversal order. Requires theta at level L/p to have
/// finite index.
std::vector<Coset> coset_subdivide(const DynamicalSystem& sys, const Coset& c, const PElement& L);

/// Decides whether base is covered by the blockers. If not, returns a
/// witness sub-coset of base disjoint from every blocker: the finite-type
/// route enumerates one refinement level, the infinite-index route expands
/// finite parts and then picks fresh representatives level by level.
std::optional<Coset> constellation_nonempty(const DynamicalSystem& sys, const Coset& base,
                                            const std::vector<Coset>& blockers);

/// Finds a coset inside start, at a level divisible by start.p, that is
/// disjoint from every tail set g_i + ∩_m theta_{p_i^m}(G). Requires every
/// p_i != 1; processes the constraints in order, strictly growing the level
/// whenever a constraint actually interferes.
Coset avoid_orbit_tails(const DynamicalSystem& sys, const Coset& start,
                        const std::vector<std::pair<GroupElement, PElement>>& constraints);

}  // namespace iads
