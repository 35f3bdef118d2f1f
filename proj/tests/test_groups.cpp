#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace iads;
using namespace iads::testing;

TEST_CASE("lattice group arithmetic") {
  auto sys = z_2_3();
  const auto& b = sys.backend();
  CHECK(g_op(b, zint(sys, 2), zint(sys, 3)) == zint(sys, 5));
  CHECK(g_inv(b, zint(sys, 4)) == zint(sys, -4));
  CHECK(g_is_id(g_id(b)));

  GroupBackend b2(LatticeBackend{2});
  CHECK(g_inv(b2, zvec(1, -2)) == zvec(-1, 2));
}

TEST_CASE("shift group arithmetic has order-n cancellation") {
  auto sys = shift_system(2);
  const auto& b = sys.backend();
  GroupElement x(GroupElement::Shift{{PElement::one(), 1}});
  CHECK(g_is_id(g_op(b, x, x)));
  CHECK(g_op(b, x, g_id(b)) == x);
}

TEST_CASE("endomorphism application and composition") {
  auto sys = z_2_3();
  const auto& b = sys.backend();
  CHECK(endo_apply(b, sys.generator(0), zint(sys, 3)) == zint(sys, 6));
  auto comp = endo_compose(b, sys.generator(0), sys.generator(1));
  CHECK(endo_apply(b, comp, zint(sys, 1)) == zint(sys, 6));

  auto sh = shift_system(3);
  GroupElement g(GroupElement::Shift{{PElement::one(), 1}, {PElement::generator(0, 1), 2}});
  GroupElement shifted = endo_apply(sh.backend(), sh.generator(0), g);
  // (g0, g1, ...) -> (0, g0, g1, ...)
  GroupElement expect(
      GroupElement::Shift{{PElement::generator(0, 1), 1}, {PElement::generator(0, 2), 2}});
  CHECK(shifted == expect);
}

TEST_CASE("image membership") {
  auto sys = z_2_3();
  const auto& b = sys.backend();
  auto pre = image_membership(b, sys.generator(0), zint(sys, 6));
  REQUIRE(pre.has_value());
  CHECK(*pre == zint(sys, 3));
  CHECK(!image_membership(b, sys.generator(0), zint(sys, 1)).has_value());

  auto l2 = lattice2();
  auto pre2 = image_membership(l2.backend(), l2.generator(0), zvec(3, 3));
  REQUIRE(pre2.has_value());
  CHECK(*pre2 == zvec(1, 1));
}

TEST_CASE("product image membership") {
  auto sys = z_2_3();
  const auto& b = sys.backend();
  auto w = product_image_membership(b, sys.generator(0), sys.generator(1), zint(sys, 5));
  REQUIRE(w.has_value());
  CHECK(g_op(b, endo_apply(b, sys.generator(0), w->first),
             endo_apply(b, sys.generator(1), w->second)) == zint(sys, 5));
  auto w1 = product_image_membership(b, sys.generator(0), sys.generator(1), zint(sys, 1));
  REQUIRE(w1.has_value());

  // the two-generator shift misses everything with a nontrivial entry at 1_P
  auto sp = shift_pair();
  GroupElement bad(GroupElement::Shift{{PElement::one(), 1}});
  CHECK(!product_image_membership(sp.backend(), sp.generator(0), sp.generator(1), bad)
             .has_value());
}

TEST_CASE("subgroup index") {
  CHECK(*subgroup_index(lattice2().backend(), lattice2().generator(0)) == 6);
  auto sh = shift_system(2);
  CHECK(*subgroup_index(sh.backend(), sh.generator(0)) == 2);
  CHECK(*sh.index(PElement::generator(0, 3)) == 8);
  auto sp = shift_pair();
  CHECK(!subgroup_index(sp.backend(), sp.generator(0)).has_value());
  auto ds = direct_sum_mixed();
  CHECK(!ds.index(PElement::generator(0)).has_value());
}

TEST_CASE("transversal and canonical representative over Z") {
  auto sys = z_2_3();
  auto tv = sys.transversal_at(PElement::generator(0));
  REQUIRE(tv.size() == 2);
  CHECK(tv[0] == zint(sys, 0));
  CHECK(tv[1] == zint(sys, 1));
  CHECK(sys.rep(PElement::generator(0), zint(sys, 7)) == zint(sys, 1));
  CHECK(sys.rep(PElement::generator(0), zint(sys, -4)) == zint(sys, 0));
}

TEST_CASE("transversal over the 2x2 lattice system") {
  auto sys = lattice2();
  PElement p = PElement::generator(0);
  auto tv = sys.transversal_at(p);
  CHECK(tv.size() == 6);
  std::set<GroupElement> reduced;
  for (const auto& t : tv) {
    CHECK(sys.rep(p, t) == t);  // idempotent on representatives
    reduced.insert(t);
  }
  CHECK(reduced.size() == 6);
  // every window element reduces into the transversal
  for (const auto& g : window_elements(sys.backend(), 3)) {
    GroupElement r = sys.rep(p, g);
    CHECK(reduced.count(r) == 1);
    CHECK(image_membership(sys.backend(), sys.theta(p), g_sub(sys.backend(), g, r))
              .has_value());
  }
}

TEST_CASE("shift transversal") {
  auto sys = shift_system(2);
  auto tv = sys.transversal_at(PElement::generator(0));
  REQUIRE(tv.size() == 2);
  CHECK(g_is_id(tv[0]));
  CHECK(tv[1] == GroupElement(GroupElement::Shift{{PElement::one(), 1}}));
  // canonical representative zeroes the shifted positions
  GroupElement g(GroupElement::Shift{{PElement::one(), 1}, {PElement::generator(0, 2), 1}});
  CHECK(sys.rep(PElement::generator(0), g) ==
        GroupElement(GroupElement::Shift{{PElement::one(), 1}}));
}

TEST_CASE("quotient structure") {
  auto sys = lattice2();
  CHECK(quotient_structure(sys.backend(), sys.generator(0)) == std::vector<Int>{6});
  auto sc = lattice2_scalars();
  CHECK(quotient_structure(sc.backend(), sc.generator(0)) == std::vector<Int>{2, 2});
  auto z = z_2_3();
  CHECK(quotient_structure(z.backend(), z.theta(PElement::generator(0, 2))) ==
        std::vector<Int>{4});
  auto sh = shift_system(2);
  CHECK(quotient_structure(sh.backend(), sh.theta(PElement::generator(0, 2))) ==
        std::vector<Int>{2, 2});
}

TEST_CASE("fresh representatives at infinite index") {
  auto sp = shift_pair();
  auto reps = coset_reps_prefix(sp.backend(), sp.generator(0), 10);
  CHECK(reps.size() == 10);
  std::set<GroupElement> seen;
  for (const auto& r : reps) {
    CHECK(canonical_rep(sp.backend(), sp.generator(0), r) == r);
    seen.insert(r);
  }
  CHECK(seen.size() == 10);  // distinct cosets
}

TEST_CASE("tail triviality certificates") {
  auto z = z_2_3();
  CHECK(endo_tail_trivial(z.backend(), z.generator(0)));
  auto sh = shift_system(2);
  CHECK(endo_tail_trivial(sh.backend(), sh.generator(0)));
  GroupBackend b2(LatticeBackend{2});
  CHECK(!endo_tail_trivial(b2, Endomorphism(IMat::from_rows({{2, 0}, {0, 1}}))));
}

TEST_CASE("backend mismatch raises") {
  auto z = z_2_3();
  GroupBackend b2(LatticeBackend{2});
  CHECK_THROWS_AS(g_op(z.backend(), zint(z, 1), zvec(1, 2)), std::exception);
}
