#pragma once

#include "iads/monoalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace iads {

/// Finite formal combination Σ c_g u_g of group-algebra generators; the
/// coefficient object of every fibre.
using GroupAlgebra = std::map<GroupElement, GaussianRat>;

GroupAlgebra ga_unit(const DynamicalSystem& sys);
GroupAlgebra ga_add(const GroupAlgebra& a, const GroupAlgebra& b);
GroupAlgebra ga_mul(const DynamicalSystem& sys, const GroupAlgebra& a, const GroupAlgebra& b);
GroupAlgebra ga_star(const DynamicalSystem& sys, const GroupAlgebra& a);

/// Vector in the fibre X_p: the group algebra carrying the theta_p-twisted
/// right module structure.
struct FibreElement {
  PElement p;
  GroupAlgebra coeffs;

  friend bool operator==(const FibreElement& a, const FibreElement& b) {
    return a.p == b.p && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const FibreElement& a, const FibreElement& b) { return !(a == b); }
};

FibreElement fibre_basis(const DynamicalSystem& sys, const PElement& p, const GroupElement& g);
FibreElement fibre_zero(const PElement& p);
FibreElement fibre_add(const FibreElement& a, const FibreElement& b);
FibreElement fibre_scale(const GaussianRat& c, const FibreElement& a);

/// ⟨ξ,η⟩_p, conjugate-linear in ξ: on generators
/// ⟨u_g,u_h⟩ = u_{theta_p^{-1}(h-g)} when h-g lies in the image, else 0.
GroupAlgebra fibre_inner(const DynamicalSystem& sys, const FibreElement& xi,
                         const FibreElement& eta);

/// Right module action ξ·a = ξ alpha_p(a): u_g · u_h = u_{g + theta_p(h)}.
FibreElement fibre_right_act(const DynamicalSystem& sys, const FibreElement& xi,
                             const GroupAlgebra& a);

/// Left action by multiplication: u_h · u_g = u_{h+g}.
FibreElement fibre_left_act(const DynamicalSystem& sys, const GroupAlgebra& a,
                            const FibreElement& xi);

/// Product-system multiplication X_p × X_q → X_{pq}: on generators
/// u_g · u_h = u_{g + theta_p(h)}.
FibreElement fibre_mul(const DynamicalSystem& sys, const FibreElement& xi,
                       const FibreElement& eta);

/// Orthonormal basis {u_t : t in the transversal of G/theta_p(G)}.
std::vector<FibreElement> fibre_onb(const DynamicalSystem& sys, const PElement& p);

/// Σ_i ξ_i·⟨ξ_i,η⟩ over the transversal basis; equals η exactly.
FibreElement onb_reconstruct(const DynamicalSystem& sys, const FibreElement& eta);

/// Θ_{ξ,η} on one fibre.
struct RankOneOperator {
  FibreElement left, right;
};

FibreElement rank_one_apply(const DynamicalSystem& sys, const RankOneOperator& op,
                            const FibreElement& zeta);

/// Same-fibre composition Θ_{ξ1,η1}Θ_{ξ2,η2} = Θ_{ξ1·⟨η1,ξ2⟩, η2}.
RankOneOperator rank_one_compose(const DynamicalSystem& sys, const RankOneOperator& a,
                                 const RankOneOperator& b);

/// The transversal projection Θ_{u_g,u_g} on X_p depends only on the class
/// of g; composition across fibres lands at the join or vanishes.
std::optional<Coset> rank_one_projection_join(const DynamicalSystem& sys, const Coset& a,
                                              const Coset& b);

/// Embedding of the class projection at level p into level L (p | L):
/// the classes refining it.
std::vector<Coset> rank_one_projection_embed(const DynamicalSystem& sys, const Coset& a,
                                             const PElement& L);

/// φ(ξ_{p,g}) = u_g s_p, extended linearly.
AlgebraElement phi(const DynamicalSystem& sys, const FibreElement& xi);

struct ProdsysCheck {
  std::string name;
  size_t samples = 0;
  size_t failures = 0;
  std::string first_failure;
  [[nodiscard]] bool pass() const { return failures == 0; }
};

/// Executable representation identities: the Toeplitz conditions
/// φ_p(ξ)*φ_p(η) = φ(⟨ξ,η⟩) and φ_p(ξ)φ_q(η) = φ_{pq}(ξη), covariance of
/// class projections against the projection semilattice, and the
/// finite-type reconstruction identity Σ_{[h]} u_g e_{h,p} = u_g.
std::vector<ProdsysCheck> cnp_representation_check(const DynamicalSystem& sys, size_t samples,
                                                   uint64_t seed);

/// ONB axioms at one finite-index fibre plus reconstruction of sampled
/// vectors; exact.
ProdsysCheck onb_check(const DynamicalSystem& sys, const PElement& p, size_t samples,
                       uint64_t seed);

}  // namespace iads
