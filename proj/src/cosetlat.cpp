#include "iads/cosetlat.hpp"

#include <algorithm>

namespace iads {

Coset make_coset(const DynamicalSystem& sys, const GroupElement& g, const PElement& p) {
  return Coset{sys.rep(p, g), p};
}

std::string coset_str(const DynamicalSystem& sys, const Coset& c) {
  return "(" + sys.g_text(c.g) + ", " + sys.p_str(c.p) + ")";
}

bool coset_contains(const DynamicalSystem& sys, const Coset& c, const GroupElement& x) {
  return sys.preimage(c.p, g_sub(sys.backend(), x, c.g)).has_value();
}

std::optional<Coset> coset_intersect(const DynamicalSystem& sys, const Coset& c1,
                                     const Coset& c2) {
  const GroupBackend& b = sys.backend();
  GroupElement w = g_sub(b, c2.g, c1.g);
  auto split = sys.factorize(c1.p, c2.p, w);
  if (!split) return std::nullopt;
  GroupElement point = g_op(b, c1.g, sys.apply(c1.p, split->first));
  return make_coset(sys, point, p_lcm(c1.p, c2.p));
}

std::vector<Coset> coset_subdivide(const DynamicalSystem& sys, const Coset& c,
                                   const PElement& L) {
  if (!p_divides(c.p, L)) throw std::domain_error("coset_subdivide: level does not refine");
  PElement r = p_quotient(c.p, L);
  const GroupBackend& b = sys.backend();
  std::vector<Coset> out;
  for (const auto& t : sys.transversal_at(r))
    out.push_back(make_coset(sys, g_op(b, c.g, sys.apply(c.p, t)), L));
  return out;
}

namespace {

// One round of the infinite-index construction: all blockers are purely of
// infinite type, intersect the base properly, and none contains it. Picks
// the minimal join level, dodges the finitely many excluded sub-cosets by
// a fresh representative, and recurses on the survivors.
std::optional<Coset> fresh_witness(const DynamicalSystem& sys, const Coset& base,
                                   std::vector<Coset> blockers);

std::optional<Coset> constellation_impl(const DynamicalSystem& sys, const Coset& base,
                                        const std::vector<Coset>& blockers) {
  std::vector<Coset> active;
  for (const auto& blk : blockers) {
    auto inter = coset_intersect(sys, base, blk);
    if (!inter) continue;
    if (*inter == base) return std::nullopt;  // base lies inside this blocker
    active.push_back(blk);
  }
  if (active.empty()) return base;

  PElement L = base.p;
  for (const auto& blk : active) L = p_lcm(L, blk.p);
  if (sys.finite_type_at(p_quotient(base.p, L))) {
    for (const auto& cand : coset_subdivide(sys, base, L)) {
      bool clear = true;
      for (const auto& blk : active)
        if (coset_intersect(sys, cand, blk)) {
          clear = false;
          break;
        }
      if (clear) return cand;
    }
    return std::nullopt;  // the blockers tile the base at level L
  }

  // expand one blocker with a nontrivial finite part over its finite-level
  // partition; inside its finite cell only the infinite part survives
  for (size_t i = 0; i < active.size(); ++i) {
    auto [fin, inf] = sys.fin_inf_split(active[i].p);
    if (fin.is_one()) continue;
    Coset fin_blk = make_coset(sys, active[i].g, fin);
    std::vector<Coset> rest = active;
    rest.erase(rest.begin() + long(i));
    for (const auto& cell : coset_subdivide(sys, base, p_lcm(base.p, fin))) {
      std::vector<Coset> next = rest;
      auto touch = coset_intersect(sys, cell, fin_blk);
      if (touch) {
        // cell lies inside the finite-level blocker cell
        next.push_back(make_coset(sys, active[i].g, inf));
      }
      if (auto res = constellation_impl(sys, cell, next)) return res;
    }
    return std::nullopt;
  }

  return fresh_witness(sys, base, std::move(active));
}

std::optional<Coset> fresh_witness(const DynamicalSystem& sys, const Coset& base,
                                   std::vector<Coset> blockers) {
  // minimal join level among the blockers
  std::vector<PElement> joins;
  for (const auto& blk : blockers) joins.push_back(p_lcm(base.p, blk.p));
  size_t pick = 0;
  for (size_t i = 1; i < joins.size(); ++i)
    if (p_divides(joins[i], joins[pick]) && joins[i] != joins[pick]) pick = i;
  // make it divisibility-minimal (a divisor chain scan suffices)
  for (bool moved = true; moved;) {
    moved = false;
    for (size_t i = 0; i < joins.size(); ++i)
      if (joins[i] != joins[pick] && p_divides(joins[i], joins[pick])) {
        pick = i;
        moved = true;
      }
  }
  const PElement p1 = joins[pick];

  std::vector<Coset> group_cells, survivors;
  for (size_t i = 0; i < blockers.size(); ++i) {
    if (joins[i] == p1) {
      auto inter = coset_intersect(sys, base, blockers[i]);
      if (!inter) throw std::logic_error("fresh_witness: blocker lost its intersection");
      group_cells.push_back(*inter);
    } else {
      survivors.push_back(blockers[i]);
    }
  }

  PElement r = p_quotient(base.p, p1);
  const GroupBackend& b = sys.backend();
  auto reps = coset_reps_prefix(b, sys.theta(r), group_cells.size() + 1);
  for (const auto& t : reps) {
    Coset cand = make_coset(sys, g_op(b, base.g, sys.apply(base.p, t)), p1);
    bool clear = true;
    for (const auto& cell : group_cells)
      if (cand == cell) {
        clear = false;
        break;
      }
    if (!clear) continue;
    return constellation_impl(sys, cand, survivors);
  }
  throw std::logic_error("fresh_witness: ran out of representatives");
}

}  // namespace

std::optional<Coset> constellation_nonempty(const DynamicalSystem& sys, const Coset& base,
                                            const std::vector<Coset>& blockers) {
  return constellation_impl(sys, base, blockers);
}

Coset avoid_orbit_tails(const DynamicalSystem& sys, const Coset& start,
                        const std::vector<std::pair<GroupElement, PElement>>& constraints) {
  for (const auto& [gi, pi] : constraints)
    if (pi.is_one()) throw NeedsUnitP("avoid_orbit_tails: constraint level must not be 1_P");

  Coset cell = start;
  for (const auto& [gi, pi] : constraints) {
    bool tail_trivial = endo_tail_trivial(sys.backend(), sys.theta(pi));
    if (tail_trivial && !coset_contains(sys, cell, gi)) continue;

    Int m = 1;
    while (p_divides(p_pow(pi, m), cell.p)) ++m;
    Coset excluded = make_coset(sys, gi, p_pow(pi, m));
    auto next = constellation_nonempty(sys, cell, {excluded});
    if (!next)
      throw std::logic_error("avoid_orbit_tails: no sub-coset clears the excluded cell");
    cell = *next;
  }
  return cell;
}

}  // namespace iads
