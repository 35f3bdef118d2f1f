#include "iads/pmonoid.hpp"

#include <doctest.h>

using namespace iads;

namespace {
PElement pe(std::initializer_list<std::pair<GenId, long>> parts) {
  PElement p;
  for (const auto& [id, e] : parts) p = p_mul(p, PElement::generator(id, e));
  return p;
}
}  // namespace

TEST_CASE("monoid product and unit") {
  CHECK(p_mul(pe({{0, 1}}), pe({{1, 1}})) == pe({{0, 1}, {1, 1}}));
  CHECK(p_mul(PElement::one(), pe({{0, 2}})) == pe({{0, 2}}));
  CHECK(p_mul(pe({{0, 1}}), pe({{0, 1}})) == pe({{0, 2}}));
}

TEST_CASE("lattice operations") {
  CHECK(p_lcm(pe({{0, 1}}), pe({{1, 1}})) == pe({{0, 1}, {1, 1}}));
  CHECK(p_gcd(pe({{0, 1}}), pe({{1, 1}})) == PElement::one());
  CHECK(p_lcm(pe({{0, 2}, {1, 1}}), pe({{0, 1}, {1, 3}})) == pe({{0, 2}, {1, 3}}));
  CHECK(p_quotient(pe({{0, 1}}), pe({{0, 3}})) == pe({{0, 2}}));
  CHECK_THROWS_AS(p_quotient(pe({{0, 2}}), pe({{0, 1}})), std::domain_error);
}

TEST_CASE("divisibility and coprimality") {
  PElement a = pe({{0, 1}}), b = pe({{0, 1}, {1, 2}});
  CHECK(p_divides(a, b));
  CHECK(p_gcd(a, b) == a);
  CHECK(p_lcm(a, b) == b);
  CHECK(p_coprime(pe({{0, 2}}), pe({{1, 5}})));
  CHECK(!p_coprime(b, a));
}

TEST_CASE("printing") {
  CHECK(PElement::one().str() == "1");
  CHECK(pe({{0, 2}, {1, 1}}).str() == "g0^2*g1");
}
