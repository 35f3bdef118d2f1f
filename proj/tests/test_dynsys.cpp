#include "helpers.hpp"

#include <doctest.h>

using namespace iads;
using namespace iads::testing;

TEST_CASE("theta composes generators with multiplicities") {
  auto sys = z_2_3();
  PElement p = p_mul(gp(0), gp(1));
  CHECK(endo_apply(sys.backend(), sys.theta(p), zint(sys, 1)) == zint(sys, 6));
  CHECK(sys.theta(PElement::one()) == endo_identity(sys.backend()));

  auto l2 = lattice2();
  CHECK(l2.theta(gp(0, 2)).matrix() == IMat::from_rows({{4, 5}, {0, 9}}));
}

TEST_CASE("independence on Z: coprime scalars") {
  auto sys = z_2_3();
  auto res = check_independence(sys, gp(0), gp(1));
  CHECK(res.verdict == Independence::StronglyIndependent);

  auto self = check_independence(sys, gp(0), gp(0));
  CHECK(self.verdict == Independence::NotIndependent);
  REQUIRE(self.witness.has_value());
  // witness lies in 2Z ∩ 2Z but not in 4Z
  CHECK(image_membership(sys.backend(), sys.generator(0), *self.witness).has_value());
  CHECK(!image_membership(sys.backend(), sys.theta(gp(0, 2)), *self.witness).has_value());
}

TEST_CASE("independence of the broken pair 2,4 fails with witness") {
  auto sys = z_2_4();
  auto res = check_independence(sys, gp(0), gp(1));
  CHECK(res.verdict == Independence::NotIndependent);
  REQUIRE(res.witness.has_value());
  CHECK(image_membership(sys.backend(), sys.theta(gp(0)), *res.witness).has_value());
  CHECK(image_membership(sys.backend(), sys.theta(gp(1)), *res.witness).has_value());
  CHECK(!image_membership(sys.backend(), sys.theta(p_mul(gp(0), gp(1))), *res.witness)
             .has_value());
}

TEST_CASE("shift pair: independent but not strongly") {
  auto sys = shift_pair();
  auto res = check_independence(sys, gp(0), gp(1));
  CHECK(res.verdict == Independence::Independent);
  auto self = check_independence(sys, gp(0), gp(0));
  CHECK(self.verdict == Independence::NotIndependent);
}

TEST_CASE("lattice2 generators are strongly independent") {
  auto sys = lattice2();
  CHECK(check_independence(sys, gp(0), gp(1)).verdict ==
        Independence::StronglyIndependent);
  CHECK(check_independence(sys, gp(0, 2), gp(1)).verdict ==
        Independence::StronglyIndependent);
  CHECK(check_independence(sys, p_mul(gp(0), gp(1)), gp(1)).verdict ==
        Independence::NotIndependent);
}

TEST_CASE("axiom (C) reports") {
  CHECK(check_axiom_C(z_2_3()).pass());
  CHECK(check_axiom_C(lattice2_scalars()).pass());
  CHECK(check_axiom_C(shift_pair()).pass());
  CHECK(check_axiom_C(direct_sum_mixed()).pass());

  auto broken = check_axiom_C(z_2_4());
  CHECK(!broken.pass());
  bool witnessed = false;
  for (const auto& c : broken.checks)
    if (!c.pass && c.detail.find("witness") != std::string::npos) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("minimality certificates") {
  auto m1 = check_minimality(z_2_3());
  CHECK(m1.status == MinimalityResult::Status::Certified);

  auto m2 = check_minimality(shift_system(2));
  CHECK(m2.status == MinimalityResult::Status::Certified);

  GroupBackend b2(LatticeBackend{2});
  DynamicalSystem fixed(b2, {Endomorphism(IMat::from_rows({{2, 0}, {0, 1}}))});
  auto m3 = check_minimality(fixed, 2);
  CHECK(m3.status == MinimalityResult::Status::NotMinimal);
  REQUIRE(m3.witness.has_value());
  CHECK(!g_is_id(*m3.witness));
  // the witness survives in every image along the cofinal chain
  for (int n = 1; n <= 4; ++n)
    CHECK(image_membership(fixed.backend(), fixed.theta(gp(0, n)), *m3.witness).has_value());
}

TEST_CASE("finite type classification and split") {
  auto sys = z_2_3();
  CHECK(is_finite_type(sys, gp(0, 3)));
  CHECK(*sys.index(gp(0, 3)) == 8);

  auto sp = shift_pair();
  CHECK(!is_finite_type(sp, gp(0)));

  auto ds = direct_sum_mixed();
  auto [fin, inf] = ds.fin_inf_split(p_mul(gp(0, 2), gp(1)));
  CHECK(fin == PElement::one());
  CHECK(inf == p_mul(gp(0, 2), gp(1)));

  auto [fin2, inf2] = z_2_3().fin_inf_split(p_mul(gp(0), gp(1)));
  CHECK(fin2 == p_mul(gp(0), gp(1)));
  CHECK(inf2 == PElement::one());
}

TEST_CASE("negative multipliers behave like their absolute value") {
  GroupBackend b(LatticeBackend{1});
  DynamicalSystem sys(b, {Endomorphism(IMat::from_rows({{-2}})),
                          Endomorphism(IMat::from_rows({{3}}))});
  CHECK(check_axiom_C(sys).pass());
  CHECK(*sys.index(gp(0)) == 2);
  CHECK(check_independence(sys, gp(0), gp(1)).verdict ==
        Independence::StronglyIndependent);
  CHECK(check_minimality(sys).status == MinimalityResult::Status::Certified);
  CHECK(sys.rep(gp(0), zint(sys, -7)) == zint(sys, 1));
  auto tv = sys.transversal_at(gp(0, 2));
  CHECK(tv.size() == 4);
}

TEST_CASE("construction rejects non-commuting generators") {
  GroupBackend b2(LatticeBackend{2});
  std::vector<Endomorphism> gens{Endomorphism(IMat::from_rows({{2, 1}, {0, 3}})),
                                 Endomorphism(IMat::from_rows({{3, 0}, {1, 2}}))};
  CHECK_THROWS_AS(DynamicalSystem(b2, gens), std::domain_error);
  DynamicalSystem lenient(b2, gens, {}, /*enforce=*/false);
  CHECK(!lenient.construction_issues().empty());
}
