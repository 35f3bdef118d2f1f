#pragma once

#include "iads/intmatrix.hpp"
#include "iads/numeric.hpp"
#include "iads/pmonoid.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace iads {

class GroupBackend;

/// ℤ^d with exact vector arithmetic.
struct LatticeBackend {
  int dim = 1;
};

/// ⊕_J ℤ/nℤ where the position monoid J is free abelian on index_gens
/// generators; index_gens == 1 is the classical one-sided shift over ℕ.
struct ShiftBackend {
  Int order = 2;
  unsigned index_gens = 1;
};

struct DirectSumBackend {
  std::vector<GroupBackend> parts;
};

class GroupBackend {
 public:
  GroupBackend() : v_(LatticeBackend{}) {}
  GroupBackend(LatticeBackend b);    // NOLINT(google-explicit-constructor)
  GroupBackend(ShiftBackend b);      // NOLINT(google-explicit-constructor)
  GroupBackend(DirectSumBackend b);  // NOLINT(google-explicit-constructor)

  enum class Kind { Lattice, Shift, DirectSum };
  [[nodiscard]] Kind kind() const { return Kind(v_.index()); }

  [[nodiscard]] const LatticeBackend& lattice() const { return std::get<LatticeBackend>(v_); }
  [[nodiscard]] const ShiftBackend& shift() const { return std::get<ShiftBackend>(v_); }
  [[nodiscard]] const DirectSumBackend& direct() const { return std::get<DirectSumBackend>(v_); }

  friend bool operator==(const GroupBackend& a, const GroupBackend& b);
  friend bool operator!=(const GroupBackend& a, const GroupBackend& b) { return !(a == b); }

  [[nodiscard]] std::string str() const;

 private:
  std::variant<LatticeBackend, ShiftBackend, DirectSumBackend> v_;
};

/// Value of a concrete group backend. Shift elements store no identity
/// residues; lattice entries are arbitrary-precision.
class GroupElement {
 public:
  using Lattice = std::vector<Int>;
  using Shift = std::map<PElement, Int>;  // position -> residue in [1, n-1]
  using Direct = std::vector<GroupElement>;

  GroupElement() : v_(Lattice{}) {}
  explicit GroupElement(Lattice vec) : v_(std::move(vec)) {}
  explicit GroupElement(Shift bits) : v_(std::move(bits)) {}
  explicit GroupElement(Direct parts) : v_(std::move(parts)) {}

  enum class Kind { Lattice, Shift, DirectSum };
  [[nodiscard]] Kind kind() const { return Kind(v_.index()); }

  [[nodiscard]] const Lattice& vec() const { return std::get<Lattice>(v_); }
  [[nodiscard]] const Shift& bits() const { return std::get<Shift>(v_); }
  [[nodiscard]] const Direct& parts() const { return std::get<Direct>(v_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.v_ == b.v_; }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.v_ < b.v_; }

 private:
  std::variant<Lattice, Shift, Direct> v_;
};

/// Injective endomorphism descriptor: an integer matrix with nonzero
/// determinant, a shift by a position-monoid element, or a componentwise
/// list for direct sums.
class Endomorphism {
 public:
  Endomorphism() : v_(IMat::identity(1)) {}
  explicit Endomorphism(IMat t) : v_(std::move(t)) {}
  explicit Endomorphism(PElement shift_by) : v_(std::move(shift_by)) {}
  explicit Endomorphism(std::vector<Endomorphism> parts) : v_(std::move(parts)) {}

  enum class Kind { Matrix, Shift, DirectSum };
  [[nodiscard]] Kind kind() const { return Kind(v_.index()); }

  [[nodiscard]] const IMat& matrix() const { return std::get<IMat>(v_); }
  [[nodiscard]] const PElement& shift_by() const { return std::get<PElement>(v_); }
  [[nodiscard]] const std::vector<Endomorphism>& parts() const {
    return std::get<std::vector<Endomorphism>>(v_);
  }

  friend bool operator==(const Endomorphism& a, const Endomorphism& b);
  friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

 private:
  std::variant<IMat, PElement, std::vector<Endomorphism>> v_;
};

GroupElement g_id(const GroupBackend& b);
GroupElement g_op(const GroupBackend& b, const GroupElement& x, const GroupElement& y);
GroupElement g_inv(const GroupBackend& b, const GroupElement& x);
inline GroupElement g_sub(const GroupBackend& b, const GroupElement& x, const GroupElement& y) {
  return g_op(b, x, g_inv(b, y));
}
bool g_is_id(const GroupElement& x);

/// Structural sanity of an element against a backend (dimensions, residue
/// ranges, position alphabets).
bool g_valid(const GroupBackend& b, const GroupElement& x);

Endomorphism endo_identity(const GroupBackend& b);
bool endo_valid(const GroupBackend& b, const Endomorphism& e);  // shape + injectivity
bool endo_is_injective(const GroupBackend& b, const Endomorphism& e);
bool endo_is_surjective(const GroupBackend& b, const Endomorphism& e);

GroupElement endo_apply(const GroupBackend& b, const Endomorphism& e, const GroupElement& x);

/// Composition e1 ∘ e2 (apply e2 first).
Endomorphism endo_compose(const GroupBackend& b, const Endomorphism& e1, const Endomorphism& e2);
Endomorphism endo_pow(const GroupBackend& b, const Endomorphism& e, const Int& n);

/// The unique preimage of x under e when x lies in the image, else absent.
std::optional<GroupElement> image_membership(const GroupBackend& b, const Endomorphism& e,
                                             const GroupElement& x);

/// Some (x1, x2) with e1(x1) + e2(x2) = x, if the factorization exists.
/// Callers must not depend on which witness is produced.
std::optional<std::pair<GroupElement, GroupElement>> product_image_membership(
    const GroupBackend& b, const Endomorphism& e1, const Endomorphism& e2,
    const GroupElement& x);

/// [G : e(G)]; absent means infinite.
std::optional<Int> subgroup_index(const GroupBackend& b, const Endomorphism& e);

inline bool has_finite_index(const GroupBackend& b, const Endomorphism& e) {
  return subgroup_index(b, e).has_value();
}

/// Complete set of canonical coset representatives of G/e(G), in the
/// deterministic enumeration order of the backend. Throws InfiniteIndex.
std::vector<GroupElement> transversal(const GroupBackend& b, const Endomorphism& e);

/// The distinguished representative of x modulo e(G): lattice backends
/// reduce into the Hermite fundamental domain, shift backends zero out the
/// shifted positions. Defined for every backend, finite index or not.
GroupElement canonical_rep(const GroupBackend& b, const Endomorphism& e, const GroupElement& x);

/// Invariant factors d_1 | d_2 | ... (each > 1) of G/e(G). Throws on
/// infinite index.
std::vector<Int> quotient_structure(const GroupBackend& b, const Endomorphism& e);

/// First `count` canonical representatives of distinct cosets of G/e(G),
/// in a deterministic order; for infinite index the enumeration never runs
/// dry. Used by the constellation search to pick fresh sub-cosets.
std::vector<GroupElement> coset_reps_prefix(const GroupBackend& b, const Endomorphism& e,
                                            size_t count);

/// All g with coordinates in a finite window: box [-r, r]^d for lattices,
/// support inside the first r positions for shifts, componentwise product
/// for direct sums.
std::vector<GroupElement> window_elements(const GroupBackend& b, int r);

/// First `count` positions of a shift backend's index monoid in graded
/// lexicographic order.
std::vector<PElement> shift_positions(unsigned index_gens, size_t count);

/// Backward-orbit triviality certificate: conclusive true means
/// ∩_m e^m(G) = {1_G}. Matrix backends use an exact eigenvalue-location
/// test, shifts are structural; false only means "no certificate".
bool endo_tail_trivial(const GroupBackend& b, const Endomorphism& e);

/// Precomputed preimage/representative machinery for one endomorphism:
/// matrix backends keep a Smith solver and the Hermite fundamental domain,
/// so repeated membership tests cost only back-substitution.
class EndoSolver {
 public:
  EndoSolver(const GroupBackend& b, const Endomorphism& e);

  [[nodiscard]] std::optional<GroupElement> preimage(const GroupElement& x) const;
  [[nodiscard]] GroupElement rep(const GroupElement& x) const;

 private:
  struct LatticeData {
    SnfSolver solver;
    IMat hnf;
  };
  std::variant<LatticeData, PElement, std::vector<EndoSolver>> v_;
};

/// Same idea for the two-sided factorization x = e1(a) + e2(b).
class PairSolver {
 public:
  PairSolver(const GroupBackend& b, const Endomorphism& e1, const Endomorphism& e2);

  [[nodiscard]] std::optional<std::pair<GroupElement, GroupElement>> factorize(
      const GroupElement& x) const;

 private:
  struct LatticeData {
    SnfSolver solver;
    int dim;
  };
  std::variant<LatticeData, std::pair<PElement, PElement>, std::vector<PairSolver>> v_;
};

std::string g_str(const GroupBackend& b, const GroupElement& x);
std::string endo_str(const GroupBackend& b, const Endomorphism& e);

}  // namespace iads
