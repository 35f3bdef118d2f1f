#pragma once

#include "iads/dynsys.hpp"

#include <cstdint>
#include <vector>

namespace iads {

/// Deterministic splitmix64 stream; identical on every platform, so seeded
/// reports reproduce byte for byte.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97f4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  long uniform(long lo, long hi) {  // inclusive bounds
    return lo + long(next() % uint64_t(hi - lo + 1));
  }

  bool coin() { return (next() & 1ULL) != 0; }

  PElement sample_p(const DynamicalSystem& sys, long max_exp);
  PElement sample_p_nonunit(const DynamicalSystem& sys, long max_exp);
  GroupElement sample_g(const DynamicalSystem& sys, long radius);
  GaussianRat sample_coeff(long range, bool real_only);

 private:
  GroupElement sample_g_backend(const GroupBackend& b, long radius);
  uint64_t state_;
};

}  // namespace iads
