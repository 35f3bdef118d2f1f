#pragma once

#include "iads/diagonal.hpp"
#include "iads/monoalg.hpp"
#include "iads/partialrep.hpp"
#include "iads/prodsys.hpp"
#include "iads/report.hpp"
#include "iads/sampling.hpp"

#include <cstdint>

namespace iads {

/// Brute-force evaluation oracles used to cross-check the closed-form
/// machinery. They enumerate finite quotients directly and share no code
/// with the paths they validate.

/// Set of transversal points of G/theta_L(G) lying in the coset.
std::vector<GroupElement> oracle_coset_points(const DynamicalSystem& sys, const Coset& c,
                                              const PElement& L);

/// Max over G/theta_L(G) of |value| for a diagonal element supported at
/// levels dividing L, as an exact squared modulus.
Rat oracle_diag_norm_sq(const DynamicalSystem& sys, const DiagonalElement& a);

/// Deterministic property suites, one per module. All decisions are exact;
/// samples and seed fix the sweep.
SuiteReport suite_pmonoid(uint64_t seed, size_t samples);
SuiteReport suite_groups(const DynamicalSystem& sys, uint64_t seed, size_t samples);
SuiteReport suite_dynsys(const DynamicalSystem& sys, uint64_t seed, size_t samples);
SuiteReport suite_cosetlat(const DynamicalSystem& sys, uint64_t seed, size_t samples);
SuiteReport suite_diagonal(const DynamicalSystem& sys, uint64_t seed, size_t samples);
SuiteReport suite_monoalg(const DynamicalSystem& sys, uint64_t seed, size_t samples);
SuiteReport suite_prodsys(const DynamicalSystem& sys, uint64_t seed, size_t samples);
SuiteReport suite_partialrep(const DynamicalSystem& sys, uint64_t seed, size_t samples);

std::vector<SuiteReport> run_all_suites(const DynamicalSystem& sys, uint64_t seed,
                                        size_t samples);

/// Random canonical monomial with small entries.
Monomial sample_monomial(Sampler& rng, const DynamicalSystem& sys, long radius, long max_exp);

/// Random diagonal element: `terms` projections with coefficients in a
/// small rational (optionally real) range.
DiagonalElement sample_diagonal(Sampler& rng, const DynamicalSystem& sys, size_t terms,
                                long radius, long max_exp, bool real_only);

}  // namespace iads
