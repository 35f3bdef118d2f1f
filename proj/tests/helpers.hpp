#pragma once

#include "iads/dynsys.hpp"

#include <vector>

namespace iads::testing {

/// Z with multiplication by 2 and 3.
inline DynamicalSystem z_2_3() {
  GroupBackend b(LatticeBackend{1});
  return DynamicalSystem(b, {Endomorphism(IMat::from_rows({{2}})),
                             Endomorphism(IMat::from_rows({{3}}))});
}

inline DynamicalSystem z_2_3_5() {
  GroupBackend b(LatticeBackend{1});
  return DynamicalSystem(b, {Endomorphism(IMat::from_rows({{2}})),
                             Endomorphism(IMat::from_rows({{3}})),
                             Endomorphism(IMat::from_rows({{5}}))});
}

/// Deliberately broken: 2 and 4 are not independent.
inline DynamicalSystem z_2_4() {
  GroupBackend b(LatticeBackend{1});
  return DynamicalSystem(b,
                         {Endomorphism(IMat::from_rows({{2}})),
                          Endomorphism(IMat::from_rows({{4}}))},
                         {}, /*enforce=*/false);
}

/// Z^2 with the commuting pair T1 = [[2,1],[0,3]], T2 = 1 + 2*T1.
inline DynamicalSystem lattice2() {
  GroupBackend b(LatticeBackend{2});
  return DynamicalSystem(b, {Endomorphism(IMat::from_rows({{2, 1}, {0, 3}})),
                             Endomorphism(IMat::from_rows({{5, 2}, {0, 7}}))});
}

/// Z^2 with 2I and 3I.
inline DynamicalSystem lattice2_scalars() {
  GroupBackend b(LatticeBackend{2});
  return DynamicalSystem(b, {Endomorphism(IMat::from_rows({{2, 0}, {0, 2}})),
                             Endomorphism(IMat::from_rows({{3, 0}, {0, 3}}))});
}

/// One-sided shift over sum_N Z/n.
inline DynamicalSystem shift_system(long n) {
  GroupBackend b(ShiftBackend{Int(n), 1});
  return DynamicalSystem(b, {Endomorphism(PElement::generator(0, 1))});
}

/// Shift action of a two-generator monoid on sum_P Z/2: infinite type,
/// independent but not strongly independent.
inline DynamicalSystem shift_pair() {
  GroupBackend b(ShiftBackend{Int(2), 2});
  return DynamicalSystem(b, {Endomorphism(PElement::generator(0, 1)),
                             Endomorphism(PElement::generator(1, 1))});
}

/// Direct sum of (Z, x2, x3) and the two-generator shift action, the same
/// monoid acting componentwise. Infinite type with a finite-type part.
inline DynamicalSystem direct_sum_mixed() {
  DirectSumBackend db;
  db.parts.emplace_back(LatticeBackend{1});
  db.parts.emplace_back(ShiftBackend{Int(2), 2});
  GroupBackend b(std::move(db));
  std::vector<Endomorphism> g0{Endomorphism(IMat::from_rows({{2}})),
                               Endomorphism(PElement::generator(0, 1))};
  std::vector<Endomorphism> g1{Endomorphism(IMat::from_rows({{3}})),
                               Endomorphism(PElement::generator(1, 1))};
  return DynamicalSystem(b, {Endomorphism(std::move(g0)), Endomorphism(std::move(g1))});
}

/// Direct sum of (Z, x2, x3) and a two-generator shift where the first
/// generator acts trivially on the shift part: g0 keeps finite index 2
/// inside an otherwise infinite-type system, so level splitting into
/// finite and infinite parts is nontrivial.
inline DynamicalSystem mixed_index() {
  DirectSumBackend db;
  db.parts.emplace_back(LatticeBackend{1});
  db.parts.emplace_back(ShiftBackend{Int(2), 2});
  GroupBackend b(std::move(db));
  std::vector<Endomorphism> g0{Endomorphism(IMat::from_rows({{2}})),
                               Endomorphism(PElement::one())};
  std::vector<Endomorphism> g1{Endomorphism(IMat::from_rows({{3}})),
                               Endomorphism(PElement::generator(0, 1))};
  return DynamicalSystem(b, {Endomorphism(std::move(g0)), Endomorphism(std::move(g1))});
}

inline GroupElement zint(const DynamicalSystem& sys, long v) {
  (void)sys;
  return GroupElement(GroupElement::Lattice{Int(v)});
}

inline GroupElement zvec(long a, long b) {
  return GroupElement(GroupElement::Lattice{Int(a), Int(b)});
}

inline PElement gp(GenId id, long e = 1) { return PElement::generator(id, e); }

}  // namespace iads::testing
