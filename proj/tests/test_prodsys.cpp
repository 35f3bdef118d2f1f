#include "helpers.hpp"
#include "iads/prodsys.hpp"

#include <doctest.h>

using namespace iads;
using namespace iads::testing;

TEST_CASE("fibre inner products") {
  auto sys = z_2_3();
  auto u0 = fibre_basis(sys, gp(0), zint(sys, 0));
  auto u1 = fibre_basis(sys, gp(0), zint(sys, 1));
  auto u4 = fibre_basis(sys, gp(0), zint(sys, 4));

  GroupAlgebra i04 = fibre_inner(sys, u0, u4);
  REQUIRE(i04.size() == 1);
  CHECK(i04.begin()->first == zint(sys, 2));

  CHECK(fibre_inner(sys, u0, u1).empty());
  CHECK(fibre_inner(sys, u1, u1) == ga_unit(sys));
  CHECK_THROWS_AS(fibre_inner(sys, u0, fibre_basis(sys, gp(1), zint(sys, 0))),
                  BackendMismatch);
}

TEST_CASE("module actions") {
  auto sys = z_2_3();
  auto u1 = fibre_basis(sys, gp(0), zint(sys, 1));
  GroupAlgebra a{{zint(sys, 1), GaussianRat(1)}};

  // right action twists through the endomorphism: u_1 . u_1 = u_3
  auto r = fibre_right_act(sys, u1, a);
  REQUIRE(r.coeffs.size() == 1);
  CHECK(r.coeffs.begin()->first == zint(sys, 3));

  // left action is plain convolution: u_1 . u_1 = u_2
  auto l = fibre_left_act(sys, a, u1);
  REQUIRE(l.coeffs.size() == 1);
  CHECK(l.coeffs.begin()->first == zint(sys, 2));

  // adjoint compatibility <xi a, eta> = a* <xi, eta> on samples
  auto eta = fibre_basis(sys, gp(0), zint(sys, 5));
  CHECK(fibre_inner(sys, fibre_right_act(sys, u1, a), eta) ==
        ga_mul(sys, ga_star(sys, a), fibre_inner(sys, u1, eta)));
}

TEST_CASE("orthonormal bases reconstruct") {
  auto sys = z_2_3();
  auto onb = fibre_onb(sys, gp(0));
  REQUIRE(onb.size() == 2);
  CHECK(onb[0].coeffs.begin()->first == zint(sys, 0));
  CHECK(onb[1].coeffs.begin()->first == zint(sys, 1));

  auto u3 = fibre_basis(sys, gp(0), zint(sys, 3));
  CHECK(onb_reconstruct(sys, u3) == u3);

  FibreElement mixed = fibre_add(fibre_scale(GaussianRat(Rat(2, 3)), u3),
                                 fibre_basis(sys, gp(0), zint(sys, -4)));
  CHECK(onb_reconstruct(sys, mixed) == mixed);

  CHECK_THROWS_AS(fibre_onb(shift_pair(), gp(0)), InfiniteIndex);
}

TEST_CASE("rank-one join composition matches the projection product") {
  auto sys = z_2_3();
  Coset a = make_coset(sys, zint(sys, 0), gp(0));
  Coset b = make_coset(sys, zint(sys, 0), gp(1));
  auto join = rank_one_projection_join(sys, a, b);
  REQUIRE(join.has_value());
  CHECK(*join == make_coset(sys, zint(sys, 0), p_mul(gp(0), gp(1))));

  Coset c = make_coset(sys, zint(sys, 1), gp(0));
  CHECK(!rank_one_projection_join(sys, a, c).has_value());

  // embedding expands over the refining classes
  auto cells = rank_one_projection_embed(sys, a, p_mul(gp(0), gp(1)));
  CHECK(cells.size() == 3);

  // the projection only depends on the class representative
  CHECK(make_coset(sys, zint(sys, 6), gp(0)) == a);
}

TEST_CASE("phi sends basis vectors to isometry monomials") {
  auto sys = z_2_3();
  auto xi = fibre_basis(sys, gp(0), zint(sys, 1));
  AlgebraElement img = phi(sys, xi);
  REQUIRE(img.size() == 1);
  CHECK(img.terms().begin()->first ==
        *mono_mul(sys, mono_u(sys, zint(sys, 1)), mono_s(sys, gp(0))));
}

TEST_CASE("representation checks pass on the bundled systems") {
  for (auto make : {z_2_3, lattice2}) {
    auto sys = make();
    for (const auto& c : cnp_representation_check(sys, 40, 23)) {
      INFO(c.name, ": ", c.first_failure);
      CHECK(c.failures == 0);
    }
    auto onb = onb_check(sys, PElement::generator(0), 10, 29);
    INFO(onb.first_failure);
    CHECK(onb.failures == 0);
  }
}
