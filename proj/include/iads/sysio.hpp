#pragma once

#include "iads/diagonal.hpp"
#include "iads/dynsys.hpp"
#include "iads/monoalg.hpp"

#include <string>
#include <vector>

namespace iads {

/// Parsed system file: backend descriptor plus named generator
/// endomorphisms.
struct SystemDescription {
  std::string name;
  std::string notes;
  GroupBackend backend;
  std::vector<Endomorphism> generators;
  std::vector<std::string> generator_names;

  [[nodiscard]] DynamicalSystem instantiate(bool enforce = true) const {
    return DynamicalSystem(backend, generators, generator_names, enforce);
  }
};

SystemDescription parse_system_text(const std::string& json_text);
SystemDescription load_system_file(const std::string& path);
std::string system_to_json(const SystemDescription& desc);

/// `g0^2*g1` over the system's generator names; `1` is the unit.
PElement parse_pelement(const DynamicalSystem& sys, const std::string& text);

/// Lattice: `5` or `(1,-2)`. Shift: `{0:1,2:1}` over natural positions or
/// `{1:1,g0:1}` over monoid positions. Direct sums: `[x; y]`.
GroupElement parse_group_element(const GroupBackend& b, const std::string& text);

/// `g=<element>,p=<monoid element>`.
Coset parse_coset(const DynamicalSystem& sys, const std::string& text);

/// Linear combinations of monomial words: factors `u(<g>)`, `s(<p>)`,
/// `e(<g>,<p>)`, each with an optional postfix `*`; juxtaposition is the
/// product, terms join with + and -, rational coefficients attach with `*`.
AlgebraElement parse_alg_expr(const DynamicalSystem& sys, const std::string& text);

/// Restriction of the grammar to diagonal combinations of e(<g>,<p>).
DiagonalElement parse_diag_expr(const DynamicalSystem& sys, const std::string& text);

}  // namespace iads
