#pragma once

#include "iads/cosetlat.hpp"

#include <map>
#include <optional>
#include <vector>

namespace iads {

/// Finite formal combination of the commuting projections e_{g,p}, keyed by
/// their cosets. Zero coefficients are never stored.
class DiagonalElement {
 public:
  using Terms = std::map<Coset, GaussianRat>;

  DiagonalElement() = default;

  static DiagonalElement projection(const DynamicalSystem& sys, const GroupElement& g,
                                    const PElement& p);
  static DiagonalElement unit(const DynamicalSystem& sys);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] size_t size() const { return terms_.size(); }

  void add_term(const Coset& c, const GaussianRat& coeff);

  friend bool operator==(const DiagonalElement& a, const DiagonalElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiagonalElement& a, const DiagonalElement& b) {
    return !(a == b);
  }

  [[nodiscard]] std::string str(const DynamicalSystem& sys) const;

 private:
  Terms terms_;
};

DiagonalElement diag_add(const DiagonalElement& a, const DiagonalElement& b);
DiagonalElement diag_scale(const GaussianRat& c, const DiagonalElement& a);
DiagonalElement diag_mul(const DynamicalSystem& sys, const DiagonalElement& a,
                         const DiagonalElement& b);

/// The partition of unity 1 = Σ e_{g,p} over a transversal of G/theta_p(G).
DiagonalElement cnp3_expand(const DynamicalSystem& sys, const PElement& p);

/// tau_g: e_{h,p} -> e_{g+h,p}, extended linearly.
DiagonalElement tau_act(const DynamicalSystem& sys, const GroupElement& g,
                        const DiagonalElement& a);

/// Exact norm data: the max of |Σ_{i∈A} λ_i| over subsets A of the term set
/// whose Boolean atom Q_{F,A} is nonzero. `value` is the exact rational norm
/// whenever the achieving sum is real; `value_sq` is always the exact
/// squared modulus.
struct DiagNorm {
  Rat value_sq{0};
  std::optional<Rat> value;
  GaussianRat achieving_sum;
  std::vector<Coset> subset;
  std::optional<Coset> witness;  // sub-coset on which the element acts by achieving_sum

  /// Decimal rendering of the norm; display only, decisions stay exact.
  [[nodiscard]] double approx() const;
};

DiagNorm diag_norm(const DynamicalSystem& sys, const DiagonalElement& a);

/// The norming sub-projection: a coset (g, p) with
/// a · e_{g,p} = s · e_{g,p} where |s| = ‖a‖. Absent only for a = 0.
std::optional<Coset> norming_projection(const DynamicalSystem& sys, const DiagonalElement& a);

/// A finite level of the spectrum: the points of G/theta_p(G).
struct SpectrumLevel {
  PElement p;
  std::vector<GroupElement> points;
};

SpectrumLevel spectrum_level(const DynamicalSystem& sys, const PElement& p);

/// The image of g at level p (its canonical representative).
GroupElement iota_level(const DynamicalSystem& sys, const GroupElement& g, const PElement& p);

/// For coarse_p | fine.p: table sending each fine point index to the index
/// of its image in the coarse level.
std::vector<size_t> level_map(const DynamicalSystem& sys, const SpectrumLevel& fine,
                              const PElement& coarse_p);

struct ChainLevel {
  PElement p;
  std::optional<Int> index;
  std::vector<Int> invariant_factors;  // empty at infinite index
};

/// The cofinal chain p_n = (product of all generators)^n, n = 1..length,
/// with the index and quotient structure of each level.
std::vector<ChainLevel> cofinal_chain(const DynamicalSystem& sys, int length);

}  // namespace iads
