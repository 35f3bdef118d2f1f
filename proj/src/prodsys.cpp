#include "iads/prodsys.hpp"

#include "iads/sampling.hpp"

namespace iads {

namespace {

void ga_accumulate(GroupAlgebra& into, const GroupElement& g, const GaussianRat& c) {
  auto it = into.find(g);
  if (it == into.end()) {
    if (!c.is_zero()) into.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

}  // namespace

GroupAlgebra ga_unit(const DynamicalSystem& sys) {
  return GroupAlgebra{{g_id(sys.backend()), GaussianRat(1)}};
}

GroupAlgebra ga_add(const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra r = a;
  for (const auto& [g, c] : b) ga_accumulate(r, g, c);
  return r;
}

GroupAlgebra ga_mul(const DynamicalSystem& sys, const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra r;
  for (const auto& [g, cg] : a)
    for (const auto& [h, ch] : b) ga_accumulate(r, g_op(sys.backend(), g, h), cg * ch);
  return r;
}

GroupAlgebra ga_star(const DynamicalSystem& sys, const GroupAlgebra& a) {
  GroupAlgebra r;
  for (const auto& [g, c] : a) ga_accumulate(r, g_inv(sys.backend(), g), c.conj());
  return r;
}

FibreElement fibre_basis(const DynamicalSystem& sys, const PElement& p, const GroupElement& g) {
  (void)sys;
  FibreElement f{p, {}};
  f.coeffs.emplace(g, GaussianRat(1));
  return f;
}

FibreElement fibre_zero(const PElement& p) { return FibreElement{p, {}}; }

FibreElement fibre_add(const FibreElement& a, const FibreElement& b) {
  if (a.p != b.p) throw BackendMismatch("fibre_add: fibres differ");
  FibreElement r{a.p, a.coeffs};
  for (const auto& [g, c] : b.coeffs) ga_accumulate(r.coeffs, g, c);
  return r;
}

FibreElement fibre_scale(const GaussianRat& c, const FibreElement& a) {
  FibreElement r{a.p, {}};
  if (c.is_zero()) return r;
  for (const auto& [g, v] : a.coeffs) r.coeffs.emplace(g, c * v);
  return r;
}

GroupAlgebra fibre_inner(const DynamicalSystem& sys, const FibreElement& xi,
                         const FibreElement& eta) {
  if (xi.p != eta.p) throw BackendMismatch("fibre_inner: fibres differ");
  const GroupBackend& b = sys.backend();
  GroupAlgebra r;
  for (const auto& [g, cg] : xi.coeffs)
    for (const auto& [h, ch] : eta.coeffs) {
      auto pre = sys.preimage(xi.p, g_sub(b, h, g));
      if (pre) ga_accumulate(r, *pre, cg.conj() * ch);
    }
  return r;
}

FibreElement fibre_right_act(const DynamicalSystem& sys, const FibreElement& xi,
                             const GroupAlgebra& a) {
  const GroupBackend& b = sys.backend();
  FibreElement r{xi.p, {}};
  for (const auto& [g, cg] : xi.coeffs)
    for (const auto& [h, ch] : a)
      ga_accumulate(r.coeffs, g_op(b, g, sys.apply(xi.p, h)), cg * ch);
  return r;
}

FibreElement fibre_left_act(const DynamicalSystem& sys, const GroupAlgebra& a,
                            const FibreElement& xi) {
  const GroupBackend& b = sys.backend();
  FibreElement r{xi.p, {}};
  for (const auto& [h, ch] : a)
    for (const auto& [g, cg] : xi.coeffs) ga_accumulate(r.coeffs, g_op(b, h, g), ch * cg);
  return r;
}

FibreElement fibre_mul(const DynamicalSystem& sys, const FibreElement& xi,
                       const FibreElement& eta) {
  const GroupBackend& b = sys.backend();
  FibreElement r{p_mul(xi.p, eta.p), {}};
  for (const auto& [g, cg] : xi.coeffs)
    for (const auto& [h, ch] : eta.coeffs)
      ga_accumulate(r.coeffs, g_op(b, g, sys.apply(xi.p, h)), cg * ch);
  return r;
}

std::vector<FibreElement> fibre_onb(const DynamicalSystem& sys, const PElement& p) {
  std::vector<FibreElement> out;
  for (const auto& t : sys.transversal_at(p)) out.push_back(fibre_basis(sys, p, t));
  return out;
}

FibreElement onb_reconstruct(const DynamicalSystem& sys, const FibreElement& eta) {
  FibreElement acc = fibre_zero(eta.p);
  for (const auto& xi : fibre_onb(sys, eta.p))
    acc = fibre_add(acc, fibre_right_act(sys, xi, fibre_inner(sys, xi, eta)));
  return acc;
}

FibreElement rank_one_apply(const DynamicalSystem& sys, const RankOneOperator& op,
                            const FibreElement& zeta) {
  return fibre_right_act(sys, op.left, fibre_inner(sys, op.right, zeta));
}

RankOneOperator rank_one_compose(const DynamicalSystem& sys, const RankOneOperator& a,
                                 const RankOneOperator& b) {
  return RankOneOperator{fibre_right_act(sys, a.left, fibre_inner(sys, a.right, b.left)),
                         b.right};
}

std::optional<Coset> rank_one_projection_join(const DynamicalSystem& sys, const Coset& a,
                                              const Coset& b) {
  GroupElement w = g_sub(sys.backend(), b.g, a.g);
  auto split = sys.factorize(a.p, b.p, w);
  if (!split) return std::nullopt;
  return make_coset(sys, g_op(sys.backend(), a.g, sys.apply(a.p, split->first)),
                    p_lcm(a.p, b.p));
}

std::vector<Coset> rank_one_projection_embed(const DynamicalSystem& sys, const Coset& a,
                                             const PElement& L) {
  return coset_subdivide(sys, a, L);
}

AlgebraElement phi(const DynamicalSystem& sys, const FibreElement& xi) {
  AlgebraElement out;
  for (const auto& [g, c] : xi.coeffs)
    out.add_term(mono_canonicalize(sys, g, xi.p, PElement::one(), g_id(sys.backend())), c);
  return out;
}

namespace {

AlgebraElement phi_ga(const DynamicalSystem& sys, const GroupAlgebra& a) {
  AlgebraElement out;
  for (const auto& [g, c] : a) out.add_term(mono_u(sys, g), c);
  return out;
}

FibreElement sample_fibre(Sampler& rng, const DynamicalSystem& sys, const PElement& p,
                          long terms, long radius) {
  FibreElement f = fibre_zero(p);
  for (long i = 0; i < terms; ++i)
    f = fibre_add(f, fibre_scale(rng.sample_coeff(3, false),
                                 fibre_basis(sys, p, rng.sample_g(sys, radius))));
  return f;
}

}  // namespace

std::vector<ProdsysCheck> cnp_representation_check(const DynamicalSystem& sys, size_t samples,
                                                   uint64_t seed) {
  Sampler rng(seed);
  ProdsysCheck toeplitz3{"phi_p(xi)* phi_p(eta) = phi(<xi,eta>)", samples, 0, ""};
  ProdsysCheck toeplitz4{"phi_p(xi) phi_q(eta) = phi_pq(xi eta)", samples, 0, ""};
  ProdsysCheck nica{"class projections compose through the join", samples, 0, ""};
  ProdsysCheck cpf{"sum over classes reconstructs u_g", samples, 0, ""};

  for (size_t i = 0; i < samples; ++i) {
    PElement p = rng.sample_p(sys, 2), q = rng.sample_p(sys, 2);
    FibreElement xi = sample_fibre(rng, sys, p, 2, 3);
    FibreElement eta = sample_fibre(rng, sys, p, 2, 3);

    {
      AlgebraElement lhs = alg_mul(sys, alg_star(sys, phi(sys, xi)), phi(sys, eta));
      AlgebraElement rhs = phi_ga(sys, fibre_inner(sys, xi, eta));
      if (!alg_equiv(sys, lhs, rhs)) {
        ++toeplitz3.failures;
        if (toeplitz3.first_failure.empty()) toeplitz3.first_failure = "p=" + sys.p_str(p);
      }
    }
    {
      FibreElement etaq = sample_fibre(rng, sys, q, 2, 3);
      AlgebraElement lhs = alg_mul(sys, phi(sys, xi), phi(sys, etaq));
      AlgebraElement rhs = phi(sys, fibre_mul(sys, xi, etaq));
      if (!alg_equiv(sys, lhs, rhs)) {
        ++toeplitz4.failures;
        if (toeplitz4.first_failure.empty())
          toeplitz4.first_failure = "p=" + sys.p_str(p) + " q=" + sys.p_str(q);
      }
    }
    {
      Coset a = make_coset(sys, rng.sample_g(sys, 3), p);
      Coset b = make_coset(sys, rng.sample_g(sys, 3), q);
      auto join = rank_one_projection_join(sys, a, b);
      auto ea = mono_proj(sys, a.g, a.p);
      auto eb = mono_proj(sys, b.g, b.p);
      auto prod = mono_mul(sys, ea, eb);
      bool ok = join.has_value() == prod.has_value();
      if (ok && join) ok = (*prod == mono_proj(sys, join->g, join->p));
      if (!ok) {
        ++nica.failures;
        if (nica.first_failure.empty())
          nica.first_failure = coset_str(sys, a) + " vs " + coset_str(sys, b);
      }
    }
    {
      GroupElement g = rng.sample_g(sys, 3);
      auto idx = sys.index(p);
      if (idx && *idx <= 512) {
        AlgebraElement acc;
        for (const auto& t : sys.transversal_at(p)) {
          auto term = mono_mul(sys, mono_u(sys, g), mono_proj(sys, t, p));
          if (term) acc.add_term(*term, GaussianRat(1));
        }
        if (!alg_equiv(sys, acc, AlgebraElement::monomial(mono_u(sys, g)))) {
          ++cpf.failures;
          if (cpf.first_failure.empty())
            cpf.first_failure = "g=" + sys.g_text(g) + " p=" + sys.p_str(p);
        }
      }
    }
  }
  return {toeplitz3, toeplitz4, nica, cpf};
}

ProdsysCheck onb_check(const DynamicalSystem& sys, const PElement& p, size_t samples,
                       uint64_t seed) {
  Sampler rng(seed);
  ProdsysCheck check{"onb axioms and reconstruction at " + sys.p_str(p), 0, 0, ""};
  auto basis = fibre_onb(sys, p);
  GroupAlgebra unit = ga_unit(sys);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      ++check.samples;
      GroupAlgebra inner = fibre_inner(sys, basis[i], basis[j]);
      bool ok = (i == j) ? (inner == unit) : inner.empty();
      if (!ok) {
        ++check.failures;
        if (check.first_failure.empty())
          check.first_failure = "orthonormality fails at pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")";
      }
    }
  for (size_t i = 0; i < samples; ++i) {
    ++check.samples;
    FibreElement eta = sample_fibre(rng, sys, p, 3, 4);
    if (onb_reconstruct(sys, eta) != eta) {
      ++check.failures;
      if (check.first_failure.empty()) check.first_failure = "reconstruction fails";
    }
  }
  return check;
}

}  // namespace iads
