#include "helpers.hpp"
#include "iads/diagonal.hpp"
#include "iads/suites.hpp"

#include <doctest.h>

using namespace iads;
using namespace iads::testing;

namespace {
DiagonalElement e(const DynamicalSystem& sys, long g, const PElement& p) {
  return DiagonalElement::projection(sys, zint(sys, g), p);
}
}  // namespace

TEST_CASE("projection products follow the intersection formula") {
  auto sys = z_2_3();
  PElement six = p_mul(gp(0), gp(1));
  CHECK(diag_mul(sys, e(sys, 0, gp(0)), e(sys, 0, gp(1))) == e(sys, 0, six));
  CHECK(diag_mul(sys, e(sys, 1, gp(0)), e(sys, 2, gp(1))) == e(sys, 5, six));
  CHECK(diag_mul(sys, e(sys, 0, gp(0)), e(sys, 1, gp(0))).is_zero());
}

TEST_CASE("partition of unity") {
  auto sys = z_2_3();
  auto part = cnp3_expand(sys, gp(0));
  CHECK(part.size() == 2);
  CHECK(part == diag_add(e(sys, 0, gp(0)), e(sys, 1, gp(0))));
  CHECK(diag_mul(sys, part, part) == part);

  auto l2 = lattice2();
  CHECK(cnp3_expand(l2, gp(0)).size() == 6);
  CHECK_THROWS_AS(cnp3_expand(shift_pair(), gp(0)), InfiniteIndex);
}

TEST_CASE("norm: the worked examples") {
  auto sys = z_2_3();
  // ‖e_{0,2} + e_{0,3}‖ = 2, attained on the class of 0 mod 6
  auto n1 = diag_norm(sys, diag_add(e(sys, 0, gp(0)), e(sys, 0, gp(1))));
  REQUIRE(n1.value.has_value());
  CHECK(*n1.value == 2);
  CHECK(n1.subset.size() == 2);

  // orthogonal classes: ‖e_{0,2} - e_{1,2}‖ = 1
  auto n2 = diag_norm(
      sys, diag_add(e(sys, 0, gp(0)), diag_scale(GaussianRat(-1), e(sys, 1, gp(0)))));
  REQUIRE(n2.value.has_value());
  CHECK(*n2.value == 1);

  // the two classes tile Z, so the sum has norm 1 (the full subset atom dies)
  auto n3 = diag_norm(sys, diag_add(e(sys, 0, gp(0)), e(sys, 1, gp(0))));
  REQUIRE(n3.value.has_value());
  CHECK(*n3.value == 1);
  CHECK(n3.subset.size() == 1);

  // formal zero: e_{0,2} + e_{1,2} - 1 vanishes
  DiagonalElement zero = diag_add(diag_add(e(sys, 0, gp(0)), e(sys, 1, gp(0))),
                                  diag_scale(GaussianRat(-1), DiagonalElement::unit(sys)));
  CHECK(diag_norm(sys, zero).value_sq == 0);

  // complex coefficients: exact squared modulus plus a decimal rendering
  DiagonalElement cx = diag_add(diag_scale(GaussianRat(Rat(1), Rat(1)), e(sys, 0, gp(0))),
                                diag_scale(GaussianRat(Rat(0), Rat(1)), e(sys, 0, gp(1))));
  auto ncx = diag_norm(sys, cx);
  CHECK(!ncx.value.has_value());
  CHECK(ncx.value_sq == Rat(5));  // |(1+i) + i|^2 = 1 + 4
  CHECK(ncx.approx() == doctest::Approx(2.2360679));
}

TEST_CASE("norm agrees with the evaluation oracle") {
  auto sys = z_2_3();
  Sampler rng(7);
  for (int i = 0; i < 40; ++i) {
    DiagonalElement d = sample_diagonal(rng, sys, 4, 5, 1, false);
    CHECK(diag_norm(sys, d).value_sq == oracle_diag_norm_sq(sys, d));
  }
  auto l2 = lattice2();
  Sampler rng2(11);
  for (int i = 0; i < 15; ++i) {
    DiagonalElement d = sample_diagonal(rng2, l2, 3, 3, 1, true);
    CHECK(diag_norm(l2, d).value_sq == oracle_diag_norm_sq(l2, d));
  }
}

TEST_CASE("norming projection on positive combinations") {
  auto sys = z_2_3();
  DiagonalElement d = diag_add(diag_scale(GaussianRat(Rat(3)), e(sys, 0, gp(0))),
                               diag_scale(GaussianRat(Rat(1, 2)), e(sys, 0, gp(1))));
  auto nr = diag_norm(sys, d);
  REQUIRE(nr.value.has_value());
  CHECK(*nr.value == Rat(7, 2));
  auto wit = norming_projection(sys, d);
  REQUIRE(wit.has_value());
  DiagonalElement ew = DiagonalElement::projection(sys, wit->g, wit->p);
  CHECK(diag_mul(sys, d, ew) == diag_scale(nr.achieving_sum, ew));
}

TEST_CASE("tau translates classes") {
  auto sys = z_2_3();
  CHECK(tau_act(sys, zint(sys, 1), e(sys, 0, gp(0))) == e(sys, 1, gp(0)));
  CHECK(tau_act(sys, zint(sys, 2), e(sys, 1, gp(0))) == e(sys, 1, gp(0)));
  DiagonalElement d = diag_add(e(sys, 0, gp(0)), e(sys, 0, gp(1)));
  auto shifted = tau_act(sys, zint(sys, 6), d);
  CHECK(shifted == d);  // translation by 6 fixes both classes
  CHECK(*diag_norm(sys, shifted).value == 2);
}

TEST_CASE("spectrum levels and the completion map") {
  auto sys = z_2_3();
  PElement six = p_mul(gp(0), gp(1));
  auto lvl = spectrum_level(sys, six);
  CHECK(lvl.points.size() == 6);
  CHECK(iota_level(sys, zint(sys, 5), six) == zint(sys, 5));

  auto table = level_map(sys, lvl, gp(0));
  // 5 mod 6 maps to 1 mod 2
  size_t five = 0;
  while (lvl.points[five] != zint(sys, 5)) ++five;
  CHECK(sys.transversal_at(gp(0))[table[five]] == zint(sys, 1));

  // distinct small integers separate at a finite level
  for (long a = -10; a <= 10; ++a)
    for (long b = a + 1; b <= 10; ++b) {
      bool separated = false;
      for (int k = 1; k <= 6 && !separated; ++k) {
        PElement p = p_pow(six, k);
        separated = iota_level(sys, zint(sys, a), p) != iota_level(sys, zint(sys, b), p);
      }
      CHECK(separated);
    }
}

TEST_CASE("cofinal chain indices and nesting") {
  auto sys = z_2_3();
  auto chain = cofinal_chain(sys, 3);
  REQUIRE(chain.size() == 3);
  CHECK(*chain[0].index == 6);
  CHECK(*chain[1].index == 36);
  CHECK(*chain[2].index == 216);
  CHECK(chain[0].invariant_factors == std::vector<Int>{6});
  CHECK(chain[2].invariant_factors == std::vector<Int>{216});
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(p_divides(chain[i].p, chain[i + 1].p));
    // nested images: a generator of the finer image lies in the coarser one
    GroupElement finer = sys.apply(chain[i + 1].p, zint(sys, 1));
    CHECK(image_membership(sys.backend(), sys.theta(chain[i].p), finer).has_value());
  }
}
