#include "helpers.hpp"
#include "iads/monoalg.hpp"

#include <doctest.h>

using namespace iads;
using namespace iads::testing;

TEST_CASE("coset membership") {
  auto sys = z_2_3();
  Coset c = make_coset(sys, zint(sys, 1), gp(0));
  CHECK(coset_contains(sys, c, zint(sys, 7)));
  CHECK(!coset_contains(sys, c, zint(sys, 4)));

  auto l2 = lattice2();
  Coset c2 = make_coset(sys, zvec(0, 0), gp(0));
  CHECK(coset_contains(l2, c2, zvec(3, 3)));
}

TEST_CASE("coset equality is equality modulo the image") {
  auto sys = z_2_3();
  CHECK(make_coset(sys, zint(sys, 7), gp(0)) == make_coset(sys, zint(sys, 1), gp(0)));
  CHECK(make_coset(sys, zint(sys, 0), gp(0)) != make_coset(sys, zint(sys, 1), gp(0)));
  CHECK(make_coset(sys, zint(sys, 0), gp(0)) != make_coset(sys, zint(sys, 0), gp(0, 2)));
}

TEST_CASE("intersection formula on Z") {
  auto sys = z_2_3();
  auto both = coset_intersect(sys, make_coset(sys, zint(sys, 0), gp(0)),
                              make_coset(sys, zint(sys, 0), gp(1)));
  REQUIRE(both.has_value());
  CHECK(*both == make_coset(sys, zint(sys, 0), p_mul(gp(0), gp(1))));

  // 1 mod 2 meets 2 mod 3 at 5 mod 6
  auto crt = coset_intersect(sys, make_coset(sys, zint(sys, 1), gp(0)),
                             make_coset(sys, zint(sys, 2), gp(1)));
  REQUIRE(crt.has_value());
  CHECK(*crt == make_coset(sys, zint(sys, 5), p_mul(gp(0), gp(1))));

  CHECK(!coset_intersect(sys, make_coset(sys, zint(sys, 0), gp(0)),
                         make_coset(sys, zint(sys, 1), gp(0)))
             .has_value());
}

TEST_CASE("intersection of nested levels") {
  auto sys = z_2_3();
  // 2Z ∩ 4Z = 4Z
  auto nested = coset_intersect(sys, make_coset(sys, zint(sys, 0), gp(0)),
                                make_coset(sys, zint(sys, 0), gp(0, 2)));
  REQUIRE(nested.has_value());
  CHECK(*nested == make_coset(sys, zint(sys, 0), gp(0, 2)));
}

TEST_CASE("subdivision tiles a coset") {
  auto sys = z_2_3();
  Coset base = make_coset(sys, zint(sys, 0), gp(0));
  PElement L = p_mul(gp(0), gp(1));
  auto cells = coset_subdivide(sys, base, L);
  REQUIRE(cells.size() == 3);  // index of 6Z in 2Z
  for (const auto& cell : cells) {
    CHECK(cell.p == L);
    auto back = coset_intersect(sys, base, cell);
    REQUIRE(back.has_value());
    CHECK(*back == cell);
  }
  CHECK(cells[0] == make_coset(sys, zint(sys, 0), L));
  CHECK(cells[1] == make_coset(sys, zint(sys, 2), L));
  CHECK(cells[2] == make_coset(sys, zint(sys, 4), L));
}

TEST_CASE("constellation: finite type witnesses") {
  auto sys = z_2_3();
  Coset base = make_coset(sys, zint(sys, 0), gp(0));

  auto w1 = constellation_nonempty(sys, base, {make_coset(sys, zint(sys, 0), gp(0, 2))});
  REQUIRE(w1.has_value());
  CHECK(*w1 == make_coset(sys, zint(sys, 2), gp(0, 2)));

  CHECK(!constellation_nonempty(sys, base, {base}).has_value());

  // three level-6 cells tile 2Z
  PElement L = p_mul(gp(0), gp(1));
  std::vector<Coset> tiling{make_coset(sys, zint(sys, 0), L), make_coset(sys, zint(sys, 2), L),
                            make_coset(sys, zint(sys, 4), L)};
  CHECK(!constellation_nonempty(sys, base, tiling).has_value());

  // removing one tile leaves exactly that free cell
  auto w2 = constellation_nonempty(
      sys, base, {make_coset(sys, zint(sys, 0), L), make_coset(sys, zint(sys, 4), L)});
  REQUIRE(w2.has_value());
  CHECK(*w2 == make_coset(sys, zint(sys, 2), L));
}

TEST_CASE("constellation: empty blocker list returns the base") {
  auto sys = z_2_3();
  Coset base = make_coset(sys, zint(sys, 1), gp(1));
  auto w = constellation_nonempty(sys, base, {});
  REQUIRE(w.has_value());
  CHECK(*w == base);
}

TEST_CASE("constellation survives at infinite index") {
  auto sys = shift_pair();
  GroupElement zero = g_id(sys.backend());
  Coset base = make_coset(sys, zero, gp(0));
  std::vector<Coset> blockers{make_coset(sys, zero, p_mul(gp(0), gp(1))),
                              make_coset(sys, zero, p_mul(gp(0), gp(1, 2)))};
  auto w = constellation_nonempty(sys, base, blockers);
  REQUIRE(w.has_value());
  auto inside = coset_intersect(sys, base, *w);
  REQUIRE(inside.has_value());
  CHECK(*inside == *w);
  for (const auto& b : blockers) CHECK(!coset_intersect(sys, *w, b).has_value());
}

TEST_CASE("constellation with mixed finite and infinite parts") {
  auto sys = direct_sum_mixed();
  GroupElement zero = g_id(sys.backend());
  Coset base = make_coset(sys, zero, gp(0));
  std::vector<Coset> blockers{make_coset(sys, zero, gp(0, 2)),
                              make_coset(sys, zero, p_mul(gp(0), gp(1)))};
  auto w = constellation_nonempty(sys, base, blockers);
  REQUIRE(w.has_value());
  auto inside = coset_intersect(sys, base, *w);
  REQUIRE(inside.has_value());
  CHECK(*inside == *w);
  for (const auto& b : blockers) CHECK(!coset_intersect(sys, *w, b).has_value());
}

TEST_CASE("constellation expands finite parts inside an infinite-type system") {
  // one generator keeps finite index, so blocker levels split into a
  // finite and an infinite part and the expansion branch has real work
  auto sys = mixed_index();
  CHECK(*sys.index(gp(0)) == 2);
  CHECK(!sys.index(gp(1)).has_value());
  auto [fin, inf] = sys.fin_inf_split(p_mul(gp(0), gp(1, 2)));
  CHECK(fin == gp(0));
  CHECK(inf == gp(1, 2));

  GroupElement zero = g_id(sys.backend());
  Coset base = make_coset(sys, zero, gp(1));
  Coset blocker = make_coset(sys, zero, p_mul(gp(0), gp(1, 2)));
  auto w = constellation_nonempty(sys, base, {blocker});
  REQUIRE(w.has_value());
  auto inside = coset_intersect(sys, base, *w);
  REQUIRE(inside.has_value());
  CHECK(*inside == *w);
  CHECK(!coset_intersect(sys, *w, blocker).has_value());

  // the two finite-level cells of the base tile it exactly
  std::vector<Coset> cells = coset_subdivide(sys, base, p_mul(gp(0), gp(1)));
  REQUIRE(cells.size() == 2);
  CHECK(!constellation_nonempty(sys, base, cells).has_value());

  // dropping one cell frees exactly that cell
  auto free_cell = constellation_nonempty(sys, base, {cells[0]});
  REQUIRE(free_cell.has_value());
  CHECK(*free_cell == cells[1]);
}

TEST_CASE("refinement relations hold at the finite directions of a mixed system") {
  auto sys = mixed_index();
  GroupElement zero = g_id(sys.backend());
  AlgebraElement coarse = AlgebraElement::monomial(mono_proj(sys, zero, gp(1)));
  AlgebraElement fine;
  for (const auto& t : sys.transversal_at(gp(0)))
    fine.add_term(
        mono_proj(sys, g_op(sys.backend(), zero, sys.apply(gp(1), t)), p_mul(gp(0), gp(1))),
        GaussianRat(1));
  CHECK(coarse != fine);
  CHECK(alg_equiv(sys, coarse, fine));
  // but no relation crosses the infinite direction
  AlgebraElement wrong;
  wrong.add_term(mono_proj(sys, zero, p_mul(gp(0), gp(1))), GaussianRat(1));
  CHECK(!alg_equiv(sys, coarse, wrong));
}

TEST_CASE("avoidance walks off orbit tails") {
  auto sys = z_2_3();
  Coset start = make_coset(sys, zint(sys, 0), gp(0));

  // tail of (0, x3) is {0}: some refinement inside 2Z avoiding zero
  Coset a = avoid_orbit_tails(sys, start, {{zint(sys, 0), gp(1)}});
  CHECK(a == make_coset(sys, zint(sys, 2), p_mul(gp(0), gp(1))));
  CHECK(p_divides(start.p, a.p));
  CHECK(!coset_contains(sys, a, zint(sys, 0)));

  // 1 is odd: the start coset already avoids the tail {1}
  Coset b = avoid_orbit_tails(sys, start, {{zint(sys, 1), gp(1)}});
  CHECK(b == start);

  // avoid both {0} and {2}: first step refines to 2+6Z, the second to 8+18Z
  Coset c = avoid_orbit_tails(sys, start, {{zint(sys, 0), gp(1)}, {zint(sys, 2), gp(1)}});
  CHECK(c == make_coset(sys, zint(sys, 8), p_mul(gp(0), gp(1, 2))));
  CHECK(p_divides(start.p, c.p));
  CHECK(!coset_contains(sys, c, zint(sys, 0)));
  CHECK(!coset_contains(sys, c, zint(sys, 2)));
  auto inside = coset_intersect(sys, start, c);
  REQUIRE(inside.has_value());
  CHECK(*inside == c);

  CHECK_THROWS_AS(
      avoid_orbit_tails(sys, start, {{zint(sys, 0), PElement::one()}}), NeedsUnitP);
}
