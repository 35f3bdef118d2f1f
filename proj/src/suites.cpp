#include "iads/suites.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace iads {

namespace {

std::string fail_at(const DynamicalSystem& sys, const char* what, const Coset& a,
                    const Coset& b) {
  return std::string(what) + " at " + coset_str(sys, a) + ", " + coset_str(sys, b);
}

// keeps only the first failure message per check
struct Tally {
  size_t runs = 0;
  size_t failures = 0;
  std::string first;
  void hit(bool ok, const std::string& msg) {
    ++runs;
    if (!ok) {
      ++failures;
      if (first.empty()) first = msg;
    }
  }
  void flush(SuiteReport& rep, const std::string& name) const {
    std::ostringstream os;
    os << failures << "/" << runs << " failures";
    if (!first.empty()) os << "; first: " << first;
    rep.add(name, failures == 0, failures == 0 ? std::to_string(runs) + " samples" : os.str());
  }
};

PElement sample_finite_p(Sampler& rng, const DynamicalSystem& sys, long max_exp) {
  for (int tries = 0; tries < 64; ++tries) {
    PElement p = rng.sample_p(sys, max_exp);
    if (sys.finite_type_at(p)) return p;
  }
  return PElement::one();
}

}  // namespace

std::vector<GroupElement> oracle_coset_points(const DynamicalSystem& sys, const Coset& c,
                                              const PElement& L) {
  std::vector<GroupElement> out;
  for (const auto& t : sys.transversal_at(L))
    if (coset_contains(sys, c, t)) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

Rat oracle_diag_norm_sq(const DynamicalSystem& sys, const DiagonalElement& a) {
  if (a.is_zero()) return Rat(0);
  PElement L;
  for (const auto& [c, v] : a.terms()) L = p_lcm(L, c.p);
  Rat best(0);
  for (const auto& t : sys.transversal_at(L)) {
    GaussianRat val;
    for (const auto& [c, v] : a.terms())
      if (coset_contains(sys, c, t)) val += v;
    Rat m = val.norm_sq();
    if (m > best) best = m;
  }
  return best;
}

Monomial sample_monomial(Sampler& rng, const DynamicalSystem& sys, long radius, long max_exp) {
  return mono_canonicalize(sys, rng.sample_g(sys, radius), rng.sample_p(sys, max_exp),
                           rng.sample_p(sys, max_exp), rng.sample_g(sys, radius));
}

DiagonalElement sample_diagonal(Sampler& rng, const DynamicalSystem& sys, size_t terms,
                                long radius, long max_exp, bool real_only) {
  DiagonalElement d;
  for (size_t i = 0; i < terms; ++i) {
    PElement p = sample_finite_p(rng, sys, max_exp);
    d.add_term(make_coset(sys, rng.sample_g(sys, radius), p), rng.sample_coeff(3, real_only));
  }
  return d;
}

SuiteReport suite_pmonoid(uint64_t seed, size_t samples) {
  SuiteReport rep{"pmonoid", {}};
  Sampler rng(seed);
  auto sample = [&rng]() {
    PElement p;
    for (GenId id = 0; id < 4; ++id) {
      long e = rng.uniform(0, 3);
      if (e > 0) p = p_mul(p, PElement::generator(id, e));
    }
    return p;
  };
  Tally gcd_lcm, div_iff, coprime_iff, quotient_law;
  for (size_t i = 0; i < samples; ++i) {
    PElement a = sample(), b = sample();
    gcd_lcm.hit(p_mul(p_gcd(a, b), p_lcm(a, b)) == p_mul(a, b), a.str() + "," + b.str());
    bool div = p_divides(a, b);
    div_iff.hit(div == (p_gcd(a, b) == a) && div == (p_lcm(a, b) == b),
                a.str() + "," + b.str());
    coprime_iff.hit(p_coprime(a, b) == (p_lcm(a, b) == p_mul(a, b)), a.str() + "," + b.str());
    quotient_law.hit(p_quotient(a, p_mul(a, b)) == b, a.str() + "," + b.str());
  }
  gcd_lcm.flush(rep, "gcd * lcm = product");
  div_iff.flush(rep, "divisibility matches gcd and lcm");
  coprime_iff.flush(rep, "coprime iff lcm is the product");
  quotient_law.flush(rep, "quotient undoes multiplication");
  return rep;
}

SuiteReport suite_groups(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"groups", {}};
  Sampler rng(seed);
  const GroupBackend& b = sys.backend();

  Tally rep_in_dom, counts, recompose, left_inverse, solver_agree;
  for (size_t i = 0; i < samples; ++i) {
    PElement p = sample_finite_p(rng, sys, 2);
    GroupElement g = rng.sample_g(sys, 6);
    const Endomorphism& e = sys.theta(p);

    GroupElement r = sys.rep(p, g);
    bool in_image = image_membership(b, e, g_sub(b, g, r)).has_value();
    const auto& tv = sys.transversal_at(p);
    bool in_tv = std::find(tv.begin(), tv.end(), r) != tv.end();
    rep_in_dom.hit(in_image && in_tv, sys.g_text(g) + " at " + sys.p_str(p));

    Int prod = 1;
    for (const auto& f : quotient_structure(b, e)) prod *= f;
    counts.hit(Int(tv.size()) == *sys.index(p) && prod == *sys.index(p), sys.p_str(p));

    PElement q = sample_finite_p(rng, sys, 2);
    auto split = product_image_membership(b, sys.theta(p), sys.theta(q), g);
    if (split) {
      GroupElement back = g_op(b, endo_apply(b, sys.theta(p), split->first),
                               endo_apply(b, sys.theta(q), split->second));
      recompose.hit(back == g, sys.g_text(g));
    } else {
      recompose.hit(true, "");
    }

    auto round = image_membership(b, e, endo_apply(b, e, g));
    left_inverse.hit(round && *round == g, sys.g_text(g));

    // cached solvers against the plain routines
    bool agree = sys.preimage(p, g) == image_membership(b, e, g) &&
                 sys.rep(p, g) == canonical_rep(b, e, g);
    auto cached = sys.factorize(p, q, g);
    agree = agree && cached.has_value() == split.has_value();
    if (agree && cached) {
      GroupElement back = g_op(b, endo_apply(b, sys.theta(p), cached->first),
                               endo_apply(b, sys.theta(q), cached->second));
      agree = back == g;
    }
    solver_agree.hit(agree, sys.g_text(g));
  }
  rep_in_dom.flush(rep, "canonical representative lies in the transversal");
  counts.flush(rep, "transversal size = index = product of invariant factors");
  recompose.flush(rep, "factorization witnesses recompose");
  left_inverse.flush(rep, "preimage inverts the endomorphism");
  solver_agree.flush(rep, "cached solvers match the direct routines");
  return rep;
}

SuiteReport suite_dynsys(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"dynsys", {}};
  Sampler rng(seed);

  Tally symmetric, strong_implies, finite_equiv;
  for (size_t i = 0; i < samples; ++i) {
    PElement p = rng.sample_p(sys, 2), q = rng.sample_p(sys, 2);
    auto pq = check_independence(sys, p, q);
    auto qp = check_independence(sys, q, p);
    symmetric.hit(pq.verdict == qp.verdict, sys.p_str(p) + "," + sys.p_str(q));
    if (pq.verdict == Independence::StronglyIndependent) {
      // condition (i): every sampled element factors through the two images
      GroupElement g = rng.sample_g(sys, 4);
      strong_implies.hit(sys.factorize(p, q, g).has_value(),
                         sys.p_str(p) + "," + sys.p_str(q) + " misses " + sys.g_text(g));
    } else {
      strong_implies.hit(true, "");
    }
    if (sys.finite_type_at(p) && sys.finite_type_at(q))
      finite_equiv.hit(pq.verdict != Independence::Independent,
                       sys.p_str(p) + "," + sys.p_str(q) +
                           " plain independence at finite index should upgrade");
    else
      finite_equiv.hit(true, "");
  }
  symmetric.flush(rep, "independence is symmetric");
  strong_implies.flush(rep, "strong independence factors sampled elements");
  finite_equiv.flush(rep, "at finite index independence upgrades to strong");

  // product rule on generator triples
  Tally product_rule;
  size_t n = sys.generator_count();
  for (GenId i = 0; i < n; ++i)
    for (GenId j = 0; j < n; ++j)
      for (GenId k = j; k < n; ++k) {
        if (i == j || i == k) continue;
        PElement pi = PElement::generator(i);
        PElement pjk = p_mul(PElement::generator(j), PElement::generator(k));
        bool combined = check_independence(sys, pi, pjk).verdict !=
                        Independence::NotIndependent;
        bool both = check_independence(sys, pi, PElement::generator(j)).verdict !=
                        Independence::NotIndependent &&
                    check_independence(sys, pi, PElement::generator(k)).verdict !=
                        Independence::NotIndependent;
        product_rule.hit(combined == both, sys.p_str(pi) + " vs " + sys.p_str(pjk));
      }
  product_rule.flush(rep, "independence against products matches both factors");

  auto axioms = check_axioms(sys, 2);
  rep.add("axioms (A)-(C)", axioms.pass(),
          axioms.pass() ? "" : axioms.checks.front().detail);
  return rep;
}

SuiteReport suite_cosetlat(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"cosetlat", {}};
  Sampler rng(seed);
  const GroupBackend& bk = sys.backend();

  Tally oracle_match, level_law, contained, witness_indep, constellation_ok;
  for (size_t i = 0; i < samples; ++i) {
    PElement p = sample_finite_p(rng, sys, 2), q = sample_finite_p(rng, sys, 2);
    Coset c1 = make_coset(sys, rng.sample_g(sys, 5), p);
    Coset c2 = make_coset(sys, rng.sample_g(sys, 5), q);
    PElement L = p_lcm(p, q);
    auto inter = coset_intersect(sys, c1, c2);

    auto pts1 = oracle_coset_points(sys, c1, L);
    auto pts2 = oracle_coset_points(sys, c2, L);
    std::vector<GroupElement> meet;
    std::set_intersection(pts1.begin(), pts1.end(), pts2.begin(), pts2.end(),
                          std::back_inserter(meet));
    if (!inter) {
      oracle_match.hit(meet.empty(), fail_at(sys, "intersect empty but points exist", c1, c2));
      level_law.hit(true, "");
      contained.hit(true, "");
      witness_indep.hit(true, "");
    } else {
      oracle_match.hit(meet == oracle_coset_points(sys, *inter, L),
                       fail_at(sys, "intersect disagrees with points", c1, c2));
      level_law.hit(inter->p == L, fail_at(sys, "level is not the join", c1, c2));
      bool cont = true;
      for (const auto& t : oracle_coset_points(sys, *inter, L))
        cont = cont && coset_contains(sys, c1, t) && coset_contains(sys, c2, t);
      contained.hit(cont, fail_at(sys, "intersection not inside inputs", c1, c2));

      // recompute with a shifted factorization witness
      auto split = sys.factorize(c1.p, c2.p, g_sub(bk, c2.g, c1.g));
      PElement d = p_gcd(c1.p, c2.p);
      PElement r2 = p_quotient(d, c2.p);
      GroupElement k = rng.sample_g(sys, 2);
      GroupElement a2 = g_op(bk, split->first, sys.apply(r2, k));
      Coset alt = make_coset(sys, g_op(bk, c1.g, sys.apply(c1.p, a2)), L);
      witness_indep.hit(alt == *inter, fail_at(sys, "witness choice leaks", c1, c2));
    }

    // constellation against the covering oracle
    Coset base = make_coset(sys, rng.sample_g(sys, 4), sample_finite_p(rng, sys, 1));
    std::vector<Coset> blockers;
    long nblock = rng.uniform(0, 3);
    for (long bi = 0; bi < nblock; ++bi)
      blockers.push_back(make_coset(sys, rng.sample_g(sys, 4), sample_finite_p(rng, sys, 2)));
    PElement cover_level = base.p;
    for (const auto& blk : blockers) cover_level = p_lcm(cover_level, blk.p);
    auto wit = constellation_nonempty(sys, base, blockers);
    auto base_pts = oracle_coset_points(sys, base, cover_level);
    std::set<GroupElement> blocked;
    for (const auto& blk : blockers)
      for (const auto& t : oracle_coset_points(sys, blk, cover_level)) blocked.insert(t);
    bool covered = true;
    for (const auto& t : base_pts) covered = covered && blocked.count(t) > 0;
    if (!wit) {
      constellation_ok.hit(covered, "reported covered but a free point exists");
    } else {
      bool ok = coset_intersect(sys, base, *wit).has_value() &&
                *coset_intersect(sys, base, *wit) == *wit;  // witness inside base
      for (const auto& blk : blockers) ok = ok && !coset_intersect(sys, *wit, blk);
      constellation_ok.hit(ok && !covered, "witness invalid");
    }
  }
  oracle_match.flush(rep, "intersection formula matches the quotient oracle");
  level_law.flush(rep, "intersection level is the join");
  contained.flush(rep, "intersection contained in both inputs");
  witness_indep.flush(rep, "intersection independent of the factorization witness");
  constellation_ok.flush(rep, "constellation witness exact against covering oracle");

  // the infinite-index construction, when the system has such directions
  bool has_infinite = false;
  for (GenId id = 0; id < sys.generator_count(); ++id)
    has_infinite = has_infinite || !sys.index(PElement::generator(id)).has_value();
  if (has_infinite) {
    Tally inf_ok;
    bool pure_infinite = sys.fin_inf_split(sys.full_product()).first.is_one();
    for (size_t i = 0; i < samples; ++i) {
      Coset base = make_coset(sys, rng.sample_g(sys, 3), rng.sample_p_nonunit(sys, 1));
      std::vector<Coset> blockers;
      long nblock = rng.uniform(1, 4);
      for (long bi = 0; bi < nblock; ++bi)
        blockers.push_back(make_coset(sys, rng.sample_g(sys, 3), rng.sample_p(sys, 2)));
      auto wit = constellation_nonempty(sys, base, blockers);
      bool ok;
      if (wit) {
        ok = coset_intersect(sys, base, *wit).has_value() &&
             *coset_intersect(sys, base, *wit) == *wit;
        for (const auto& blk : blockers) ok = ok && !coset_intersect(sys, *wit, blk);
      } else if (pure_infinite) {
        // without finite partitions the base can only vanish by containment
        ok = false;
        for (const auto& blk : blockers) {
          auto inter = coset_intersect(sys, base, blk);
          ok = ok || (inter && *inter == base);
        }
      } else {
        ok = true;  // mixed systems may honestly tile through the finite parts
      }
      inf_ok.hit(ok, coset_str(sys, base));
    }
    inf_ok.flush(rep, "infinite-index constellation witnesses are exact");
  }

  // avoidance: sampled constraint families on shrinking cosets
  Tally avoid_ok;
  for (size_t i = 0; i < samples / 4 + 1; ++i) {
    Coset start = make_coset(sys, rng.sample_g(sys, 3), sample_finite_p(rng, sys, 1));
    std::vector<std::pair<GroupElement, PElement>> constraints;
    long nc = rng.uniform(1, 3);
    for (long ci = 0; ci < nc; ++ci)
      constraints.emplace_back(rng.sample_g(sys, 4), rng.sample_p_nonunit(sys, 2));
    Coset got = avoid_orbit_tails(sys, start, constraints);
    bool ok = p_divides(start.p, got.p);
    ok = ok && coset_intersect(sys, start, got).has_value() &&
         *coset_intersect(sys, start, got) == got;
    for (const auto& [gi, pi] : constraints) {
      // the tail sits inside g_i + theta_{p_i^m}(G) for every m, so either
      // the tail point escaped the result or some power separates exactly
      bool cleared = !coset_contains(sys, got, gi);
      PElement power = pi;
      for (int m = 1; m <= 16 && !cleared; ++m, power = p_mul(power, pi))
        cleared = !coset_intersect(sys, got, make_coset(sys, gi, power)).has_value();
      ok = ok && cleared;
    }
    avoid_ok.hit(ok, coset_str(sys, start));
  }
  avoid_ok.flush(rep, "avoidance result dodges every tail inside the start coset");

  bool unit_throw = false;
  try {
    avoid_orbit_tails(sys, make_coset(sys, g_id(bk), PElement::one()),
                      {{g_id(bk), PElement::one()}});
  } catch (const NeedsUnitP&) {
    unit_throw = true;
  }
  rep.add("avoidance rejects unit constraint levels", unit_throw);
  return rep;
}

SuiteReport suite_diagonal(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"diagonal", {}};
  Sampler rng(seed);

  Tally commutative, associative, norm_oracle, unit_action, tau_norm, subproj, iota_commute;
  for (size_t i = 0; i < samples; ++i) {
    DiagonalElement a = sample_diagonal(rng, sys, 2, 4, 1, false);
    DiagonalElement b = sample_diagonal(rng, sys, 2, 4, 1, false);
    DiagonalElement c = sample_diagonal(rng, sys, 1, 4, 1, false);
    commutative.hit(diag_mul(sys, a, b) == diag_mul(sys, b, a), "ab != ba");
    associative.hit(diag_mul(sys, diag_mul(sys, a, b), c) ==
                        diag_mul(sys, a, diag_mul(sys, b, c)),
                    "(ab)c != a(bc)");

    DiagonalElement d = sample_diagonal(rng, sys, 3, 4, 1, false);
    norm_oracle.hit(diag_norm(sys, d).value_sq == oracle_diag_norm_sq(sys, d),
                    d.str(sys));

    // partition of unity acts as unit at finer levels
    PElement p = sample_finite_p(rng, sys, 1);
    PElement pq = p_mul(p, sample_finite_p(rng, sys, 1));
    DiagonalElement e = DiagonalElement::projection(sys, rng.sample_g(sys, 4), pq);
    unit_action.hit(diag_mul(sys, cnp3_expand(sys, p), e) == e, sys.p_str(p));

    GroupElement t = rng.sample_g(sys, 3);
    tau_norm.hit(diag_norm(sys, tau_act(sys, t, d)).value_sq == diag_norm(sys, d).value_sq,
                 "translation changed the norm");

    // positive element: the norming projection realizes the norm exactly
    DiagonalElement pos;
    for (int k = 0; k < 3; ++k) {
      PElement lp = sample_finite_p(rng, sys, 1);
      pos = diag_add(pos, diag_scale(GaussianRat(Rat(rng.uniform(1, 5), rng.uniform(1, 2))),
                                     DiagonalElement::projection(
                                         sys, rng.sample_g(sys, 3), lp)));
    }
    auto nr = diag_norm(sys, pos);
    auto wit = norming_projection(sys, pos);
    bool ok = wit.has_value();
    if (ok) {
      DiagonalElement ew = DiagonalElement::projection(sys, wit->g, wit->p);
      ok = diag_mul(sys, pos, ew) == diag_scale(nr.achieving_sum, ew);
      ok = ok && nr.achieving_sum.is_real() && nr.achieving_sum.re >= 0;
    }
    subproj.hit(ok, pos.str(sys));

    // level maps commute with iota
    PElement fine = p_mul(p, sample_finite_p(rng, sys, 1));
    auto lf = spectrum_level(sys, fine);
    auto table = level_map(sys, lf, p);
    GroupElement x = rng.sample_g(sys, 6);
    GroupElement via_fine = iota_level(sys, x, fine);
    size_t fid = size_t(std::find(lf.points.begin(), lf.points.end(), via_fine) -
                        lf.points.begin());
    bool comm = fid < lf.points.size() &&
                sys.transversal_at(p)[table[fid]] == iota_level(sys, x, p);
    iota_commute.hit(comm, sys.g_text(x));
  }
  commutative.flush(rep, "projection products commute");
  associative.flush(rep, "projection products associate");
  norm_oracle.flush(rep, "norm formula matches pointwise evaluation");
  unit_action.flush(rep, "partition of unity acts as the unit on finer levels");
  tau_norm.flush(rep, "translation preserves the norm");
  subproj.flush(rep, "norming projection is exact on positive elements");
  iota_commute.flush(rep, "level maps commute with the completion map");

  // chain structure
  auto chain = cofinal_chain(sys, 3);
  bool nested = true, multiplicative = true;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    nested = nested && p_divides(chain[i].p, chain[i + 1].p);
    if (chain[i].index && chain[i + 1].index && chain[0].index)
      multiplicative =
          multiplicative && *chain[i + 1].index == *chain[i].index * *chain[0].index;
  }
  rep.add("cofinal chain is nested", nested);
  rep.add("chain indices are multiplicative", multiplicative);
  return rep;
}

SuiteReport suite_monoalg(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"monoalg", {}};
  Sampler rng(seed);
  const GroupBackend& bk = sys.backend();

  Tally oracle, assoc, invol, star_invol, witness, e1_idem, positivity;
  for (size_t i = 0; i < samples; ++i) {
    Monomial m1 = sample_monomial(rng, sys, 3, 2);
    Monomial m2 = sample_monomial(rng, sys, 3, 2);
    Monomial m3 = sample_monomial(rng, sys, 3, 1);

    auto prod = mono_mul(sys, m1, m2);
    auto composed = pinj_compose(sys, monomial_semantics(sys, m1), monomial_semantics(sys, m2));
    bool ok = prod.has_value() != composed.empty;
    if (ok && prod) ok = monomial_semantics(sys, *prod) == composed;
    oracle.hit(ok, mono_str(sys, m1) + " * " + mono_str(sys, m2));

    auto left = prod ? mono_mul(sys, *prod, m3) : std::nullopt;
    auto right23 = mono_mul(sys, m2, m3);
    auto right = right23 ? mono_mul(sys, m1, *right23) : std::nullopt;
    assoc.hit(left == right, mono_str(sys, m1) + "," + mono_str(sys, m2) + "," +
                                 mono_str(sys, m3));

    auto star_prod = prod ? std::optional<Monomial>(mono_star(sys, *prod)) : std::nullopt;
    auto prod_stars = mono_mul(sys, mono_star(sys, m2), mono_star(sys, m1));
    invol.hit(star_prod == prod_stars, mono_str(sys, m1) + "," + mono_str(sys, m2));

    star_invol.hit(mono_star(sys, mono_star(sys, m1)) == m1, mono_str(sys, m1));

    // recompute the product with a shifted relation witness
    if (prod) {
      GroupElement w = g_sub(bk, m2.g, m1.h);
      auto split = sys.factorize(m1.q, m2.p, w);
      PElement d = p_gcd(m1.q, m2.p);
      PElement r1 = p_quotient(d, m1.q), r2 = p_quotient(d, m2.p);
      GroupElement k = rng.sample_g(sys, 2);
      GroupElement a2 = g_sub(bk, split->first, sys.apply(r2, k));
      GroupElement b2 = g_op(bk, split->second, sys.apply(r1, k));
      Monomial alt = mono_canonicalize(
          sys, g_op(bk, m1.g, sys.apply(m1.p, a2)), p_mul(m1.p, r2), p_mul(m2.q, r1),
          g_sub(bk, m2.h, sys.apply(m2.q, b2)));
      witness.hit(alt == *prod, mono_str(sys, m1) + "," + mono_str(sys, m2));
    } else {
      witness.hit(true, "");
    }

    AlgebraElement a = alg_add(AlgebraElement::monomial(m1, rng.sample_coeff(2, false)),
                               AlgebraElement::monomial(m3, rng.sample_coeff(2, false)));
    e1_idem.hit(expectation_E1(expectation_E1(a)) == expectation_E1(a), "E1 not idempotent");

    if (sys.finite_type_at(m1.p) && sys.finite_type_at(m1.q) && sys.finite_type_at(m3.p) &&
        sys.finite_type_at(m3.q)) {
      DiagonalElement dd = expectation_E(sys, alg_mul(sys, alg_star(sys, a), a));
      bool pos = true;
      if (!dd.is_zero()) {
        PElement L;
        for (const auto& [cs, v] : dd.terms()) L = p_lcm(L, cs.p);
        for (const auto& t : sys.transversal_at(L)) {
          GaussianRat val;
          for (const auto& [cs, v] : dd.terms())
            if (coset_contains(sys, cs, t)) val += v;
          pos = pos && val.is_real() && val.re >= 0;
        }
      }
      positivity.hit(pos, "E(a*a) takes a negative value");
    } else {
      positivity.hit(true, "");
    }
  }
  oracle.flush(rep, "products agree with partial-injection composition");
  assoc.flush(rep, "monomial products associate");
  invol.flush(rep, "star reverses products");
  star_invol.flush(rep, "star is an involution");
  witness.flush(rep, "products independent of the relation witness");
  e1_idem.flush(rep, "gauge expectation is idempotent");
  positivity.flush(rep, "E(a*a) evaluates nonnegatively");

  // distinct canonical monomials act differently on a window
  Tally distinct;
  auto window = window_elements(sys.backend(), 4);
  for (size_t i = 0; i < samples / 4 + 1; ++i) {
    Monomial m1 = sample_monomial(rng, sys, 2, 1);
    Monomial m2 = sample_monomial(rng, sys, 2, 1);
    if (m1 == m2) continue;
    auto t1 = truncate(sys, monomial_semantics(sys, m1), window);
    auto t2 = truncate(sys, monomial_semantics(sys, m2), window);
    distinct.hit(!truncated_equal(t1, t2) || t1.entries.empty(),
                 mono_str(sys, m1) + " vs " + mono_str(sys, m2));
  }
  distinct.flush(rep, "distinct monomials differ on the window");

  for (const auto& c : covariance_check(sys, samples, seed ^ 0x5eedULL))
    rep.add("covariance: " + c.name, c.pass(),
            c.pass() ? std::to_string(c.samples) + " samples" : c.first_failure);
  return rep;
}

SuiteReport suite_prodsys(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"prodsys", {}};
  Sampler rng(seed);

  PElement p = sample_finite_p(rng, sys, 1);
  if (p.is_one()) p = sys.full_product();
  if (sys.finite_type_at(p)) {
    auto onb = onb_check(sys, p, samples / 4 + 1, seed);
    rep.add(onb.name, onb.pass(), onb.pass() ? "" : onb.first_failure);

    // matrix units: Θ_{ξi,ξj} Θ_{ξk,ξl} = δ_{jk} Θ_{ξi,ξl}, checked as
    // operators on the whole basis
    auto basis = fibre_onb(sys, p);
    size_t cap = std::min<size_t>(basis.size(), 4);
    bool units_ok = true;
    for (size_t i = 0; i < cap && units_ok; ++i)
      for (size_t j = 0; j < cap && units_ok; ++j)
        for (size_t k = 0; k < cap && units_ok; ++k)
          for (size_t l = 0; l < cap && units_ok; ++l) {
            RankOneOperator a{basis[i], basis[j]}, b{basis[k], basis[l]};
            RankOneOperator ab = rank_one_compose(sys, a, b);
            for (const auto& probe : basis) {
              FibreElement lhs = rank_one_apply(sys, ab, probe);
              FibreElement rhs = j == k ? rank_one_apply(sys, RankOneOperator{basis[i], basis[l]}, probe)
                                        : fibre_zero(p);
              FibreElement chained = rank_one_apply(sys, a, rank_one_apply(sys, b, probe));
              units_ok = units_ok && lhs == rhs && chained == rhs;
            }
          }
    rep.add("rank-one operators form matrix units on the basis", units_ok);

    bool identity_ok = true;
    for (size_t i = 0; i < samples / 8 + 1; ++i) {
      FibreElement eta = fibre_zero(p);
      for (int t = 0; t < 3; ++t)
        eta = fibre_add(eta, fibre_scale(rng.sample_coeff(3, false),
                                         fibre_basis(sys, p, rng.sample_g(sys, 4))));
      FibreElement acc = fibre_zero(p);
      for (const auto& xi : basis)
        acc = fibre_add(acc, rank_one_apply(sys, RankOneOperator{xi, xi}, eta));
      identity_ok = identity_ok && acc == eta;
    }
    rep.add("transversal projections sum to the identity", identity_ok);

    // left action acts diagonally on generators
    bool diag_ok = true;
    for (size_t i = 0; i < samples / 8 + 1; ++i) {
      GroupAlgebra a{{rng.sample_g(sys, 4), GaussianRat(1)}};
      FibreElement xi = fibre_basis(sys, p, rng.sample_g(sys, 4));
      diag_ok = diag_ok && fibre_left_act(sys, a, xi).coeffs.size() == 1;
    }
    rep.add("left action sends generators to single terms", diag_ok);
  }

  for (const auto& c : cnp_representation_check(sys, samples, seed ^ 0xABCDULL))
    rep.add(c.name, c.pass(), c.pass() ? std::to_string(c.samples) + " samples" : c.first_failure);
  return rep;
}

SuiteReport suite_partialrep(const DynamicalSystem& sys, uint64_t seed, size_t samples) {
  SuiteReport rep{"partialrep", {}};
  Sampler rng(seed);
  auto window = window_elements(sys.backend(), 4);

  Tally adjoint, isometry, apply_agree, pointwise;
  for (size_t i = 0; i < samples; ++i) {
    Monomial m = sample_monomial(rng, sys, 3, 2);
    PartialInjection f = monomial_semantics(sys, m);
    PartialInjection finv = pinj_invert(sys, f);
    bool ok = finv == monomial_semantics(sys, mono_star(sys, m));
    // inverse undoes the map on window points
    for (const auto& x : window) {
      auto y = pinj_apply(sys, f, x);
      if (!y) continue;
      auto back = pinj_apply(sys, finv, *y);
      ok = ok && back && *back == x;
    }
    adjoint.hit(ok, mono_str(sys, m));

    // symbolic composition against literal pointwise chaining
    {
      Monomial m2 = sample_monomial(rng, sys, 3, 2);
      PartialInjection s = monomial_semantics(sys, m2);
      PartialInjection fs = pinj_compose(sys, f, s);
      bool agree = true;
      for (const auto& x : window) {
        auto mid = pinj_apply(sys, s, x);
        std::optional<GroupElement> chained;
        if (mid) chained = pinj_apply(sys, f, *mid);
        agree = agree && chained == pinj_apply(sys, fs, x);
      }
      pointwise.hit(agree, mono_str(sys, m) + " after " + mono_str(sys, m2));
    }

    PElement p = rng.sample_p_nonunit(sys, 2);
    auto t = truncate(sys, monomial_semantics(sys, mono_s(sys, p)), window);
    std::set<size_t> rows, cols;
    bool inj = true;
    for (const auto& [r, c] : t.entries) {
      inj = inj && rows.insert(r).second;  // no two columns share a row
      inj = inj && cols.insert(c).second;  // at most one entry per column
    }
    isometry.hit(inj, sys.p_str(p));

    // closed-form application against the literal formula
    GroupElement x = rng.sample_g(sys, 4);
    auto via = pinj_apply(sys, f, x);
    auto pre = sys.preimage(m.q, g_sub(sys.backend(), x, m.h));
    bool agree = via.has_value() == pre.has_value();
    if (agree && via)
      agree = *via == g_op(sys.backend(), m.g, sys.apply(m.p, *pre));
    apply_agree.hit(agree, sys.g_text(x));
  }
  adjoint.flush(rep, "star acts as the inverse partial injection");
  isometry.flush(rep, "truncated isometries have orthonormal columns");
  apply_agree.flush(rep, "application matches the defining formula");
  pointwise.flush(rep, "composition agrees with pointwise chaining on the window");

  // defect behaviour
  PElement p = sys.full_product();
  if (sys.finite_type_at(p)) {
    size_t classes = visible_classes(sys, p, window);
    Rat final = cnp3_defect(sys, p, window, classes);
    rep.add("defect reaches zero at the full transversal", final == 0);
  } else {
    size_t classes = visible_classes(sys, p, window);
    bool monotone = true, positive = true;
    Rat prev(2);
    for (size_t k = 1; k + 1 < classes && k <= 6; ++k) {
      Rat d = cnp3_defect(sys, p, window, k);
      monotone = monotone && d < prev;
      positive = positive && d > 0;
      prev = d;
    }
    rep.add("defect decreases but stays positive at infinite index", monotone && positive);
  }
  return rep;
}

std::vector<SuiteReport> run_all_suites(const DynamicalSystem& sys, uint64_t seed,
                                        size_t samples) {
  std::vector<SuiteReport> out;
  out.push_back(suite_pmonoid(seed, samples));
  out.push_back(suite_groups(sys, seed, samples));
  out.push_back(suite_dynsys(sys, seed, samples));
  out.push_back(suite_cosetlat(sys, seed, samples));
  out.push_back(suite_diagonal(sys, seed, samples));
  out.push_back(suite_monoalg(sys, seed, samples));
  out.push_back(suite_prodsys(sys, seed, samples));
  out.push_back(suite_partialrep(sys, seed, samples));
  return out;
}

}  // namespace iads
