#pragma once

#include "iads/groups.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace iads {

/// A triple (G, P, theta): group backend, free abelian monoid generated by
/// one id per endomorphism, and the action by composition. Immutable after
/// construction; theta/transversal lookups are memoized behind a lock.
class DynamicalSystem {
 public:
  DynamicalSystem(GroupBackend backend, std::vector<Endomorphism> generators,
                  std::vector<std::string> names = {}, bool enforce = true);

  [[nodiscard]] const GroupBackend& backend() const { return backend_; }
  [[nodiscard]] size_t generator_count() const { return gens_.size(); }
  [[nodiscard]] const Endomorphism& generator(GenId id) const { return gens_.at(id); }
  [[nodiscard]] const std::vector<std::string>& generator_names() const { return names_; }
  [[nodiscard]] GenId generator_id(const std::string& name) const;

  /// Issues found at construction when enforce was off (empty otherwise).
  [[nodiscard]] const std::vector<std::string>& construction_issues() const { return issues_; }

  [[nodiscard]] const Endomorphism& theta(const PElement& p) const;
  [[nodiscard]] std::optional<Int> index(const PElement& p) const;
  [[nodiscard]] bool finite_type_at(const PElement& p) const { return index(p).has_value(); }
  [[nodiscard]] const std::vector<GroupElement>& transversal_at(const PElement& p) const;

  /// Canonical representative of g modulo theta_p(G), through a cached
  /// per-level solver.
  [[nodiscard]] GroupElement rep(const PElement& p, const GroupElement& g) const;

  /// theta_p^{-1}(x) when x lies in the image, else absent (cached solver).
  [[nodiscard]] std::optional<GroupElement> preimage(const PElement& p,
                                                     const GroupElement& x) const;

  /// Some (a, b) with theta_p(a) + theta_q(b) = x, else absent (cached).
  [[nodiscard]] std::optional<std::pair<GroupElement, GroupElement>> factorize(
      const PElement& p, const PElement& q, const GroupElement& x) const;

  [[nodiscard]] GroupElement apply(const PElement& p, const GroupElement& x) const {
    return endo_apply(backend_, theta(p), x);
  }

  /// p split as p_fin * p_inf by the finite/infinite index classification
  /// of the generators in its support.
  [[nodiscard]] std::pair<PElement, PElement> fin_inf_split(const PElement& p) const;

  /// Product of all generators (the canonical cofinal direction).
  [[nodiscard]] PElement full_product() const;

  [[nodiscard]] std::string p_str(const PElement& p) const { return p.str(&names_); }
  [[nodiscard]] std::string g_text(const GroupElement& g) const { return g_str(backend_, g); }

 private:
  [[nodiscard]] const EndoSolver& solver(const PElement& p) const;
  [[nodiscard]] const PairSolver& pair_solver(const PElement& p, const PElement& q) const;

  GroupBackend backend_;
  std::vector<Endomorphism> gens_;
  std::vector<std::string> names_;
  std::vector<std::string> issues_;
  mutable std::mutex cache_mu_;
  mutable std::map<PElement, Endomorphism> theta_cache_;
  mutable std::map<PElement, std::vector<GroupElement>> transversal_cache_;
  mutable std::map<PElement, EndoSolver> solver_cache_;
  mutable std::map<std::pair<PElement, PElement>, PairSolver> pair_cache_;
};

enum class Independence { StronglyIndependent, Independent, NotIndependent };

std::string to_string(Independence v);

struct IndependenceResult {
  Independence verdict = Independence::NotIndependent;
  /// For NotIndependent: an element of theta_p(G) ∩ theta_q(G) that is not
  /// in theta_p(theta_q(G)).
  std::optional<GroupElement> witness;
};

/// Decides theta_p(G) ∩ theta_q(G) = theta_pq(G) (independence) and
/// theta_p(G)·theta_q(G) = G (strong independence) exactly, per backend.
IndependenceResult check_independence(const DynamicalSystem& sys, const PElement& p,
                                      const PElement& q);

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  [[nodiscard]] bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Axiom (C) on generator pairs: distinct generators must be independent,
/// no generator may be surjective. Decisions are exact; sample_bound only
/// sizes the cross-validation sweep of strong independence witnesses.
AxiomReport check_axiom_C(const DynamicalSystem& sys, int sample_bound = 2);

/// Full verification sweep: injectivity, commutation, axiom (C).
AxiomReport check_axioms(const DynamicalSystem& sys, int sample_bound = 2);

struct MinimalityResult {
  enum class Status { Certified, UpTo, Unknown, NotMinimal };
  Status status = Status::Unknown;
  int radius = 0;
  std::optional<GroupElement> witness;  // lies in every theta_p(G), for NotMinimal
  std::string detail;
};

/// Graded minimality certificate: structural proof when the full-product
/// endomorphism has trivial backward orbits, otherwise a bounded separation
/// sweep over the ball of the given radius.
MinimalityResult check_minimality(const DynamicalSystem& sys, int radius = 4);

bool is_finite_type(const DynamicalSystem& sys, const PElement& p);

}  // namespace iads
