#include "iads/sampling.hpp"

namespace iads {

PElement Sampler::sample_p(const DynamicalSystem& sys, long max_exp) {
  PElement p;
  for (GenId id = 0; id < sys.generator_count(); ++id) {
    long e = uniform(0, max_exp);
    if (e > 0) p = p_mul(p, PElement::generator(id, e));
  }
  return p;
}

PElement Sampler::sample_p_nonunit(const DynamicalSystem& sys, long max_exp) {
  for (;;) {
    PElement p = sample_p(sys, max_exp);
    if (!p.is_one()) return p;
  }
}

GroupElement Sampler::sample_g_backend(const GroupBackend& b, long radius) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      GroupElement::Lattice v(size_t(b.lattice().dim));
      for (auto& c : v) c = uniform(-radius, radius);
      return GroupElement(std::move(v));
    }
    case GroupBackend::Kind::Shift: {
      // support within the first `radius` positions
      auto positions = shift_positions(b.shift().index_gens, size_t(std::max(radius, 1L)));
      long n = b.shift().order.convert_to<long>();
      GroupElement::Shift m;
      for (const auto& pos : positions) {
        long v = uniform(0, n - 1);
        if (v != 0) m[pos] = v;
      }
      return GroupElement(std::move(m));
    }
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct parts;
      parts.reserve(b.direct().parts.size());
      for (const auto& pb : b.direct().parts) parts.push_back(sample_g_backend(pb, radius));
      return GroupElement(std::move(parts));
    }
  }
  return {};
}

GroupElement Sampler::sample_g(const DynamicalSystem& sys, long radius) {
  return sample_g_backend(sys.backend(), radius);
}

GaussianRat Sampler::sample_coeff(long range, bool real_only) {
  Rat re(uniform(-range, range), uniform(1, 3));
  if (real_only) {
    if (re == 0) re = 1;
    return GaussianRat(re);
  }
  Rat im(uniform(-range, range), uniform(1, 3));
  if (re == 0 && im == 0) re = 1;
  return {re, im};
}

}  // namespace iads
