#include "iads/groups.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace iads {

GroupBackend::GroupBackend(LatticeBackend b) : v_(std::move(b)) {
  if (lattice().dim < 1) throw std::domain_error("lattice backend needs dim >= 1");
}
GroupBackend::GroupBackend(ShiftBackend b) : v_(std::move(b)) {
  if (shift().order < 2) throw std::domain_error("shift backend needs order >= 2");
  if (shift().index_gens < 1) throw std::domain_error("shift backend needs >= 1 index generator");
}
GroupBackend::GroupBackend(DirectSumBackend b) : v_(std::move(b)) {
  if (direct().parts.empty()) throw std::domain_error("direct sum needs at least one part");
}

bool operator==(const GroupBackend& a, const GroupBackend& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GroupBackend::Kind::Lattice:
      return a.lattice().dim == b.lattice().dim;
    case GroupBackend::Kind::Shift:
      return a.shift().order == b.shift().order && a.shift().index_gens == b.shift().index_gens;
    case GroupBackend::Kind::DirectSum:
      return a.direct().parts == b.direct().parts;
  }
  return false;
}

std::string GroupBackend::str() const {
  switch (kind()) {
    case Kind::Lattice:
      return "Z^" + std::to_string(lattice().dim);
    case Kind::Shift:
      return "sum_J Z/" + shift().order.str() + " (" + std::to_string(shift().index_gens) +
             " index gen" + (shift().index_gens == 1 ? "" : "s") + ")";
    case Kind::DirectSum: {
      std::string s = "(";
      for (size_t i = 0; i < direct().parts.size(); ++i)
        s += (i ? " (+) " : "") + direct().parts[i].str();
      return s + ")";
    }
  }
  return {};
}

bool operator==(const Endomorphism& a, const Endomorphism& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Endomorphism::Kind::Matrix:
      return a.matrix() == b.matrix();
    case Endomorphism::Kind::Shift:
      return a.shift_by() == b.shift_by();
    case Endomorphism::Kind::DirectSum:
      return a.parts() == b.parts();
  }
  return false;
}

namespace {

Int shift_order(const GroupBackend& b) { return b.shift().order; }

GroupElement::Shift normalize_shift(const GroupBackend& b, GroupElement::Shift m) {
  const Int n = shift_order(b);
  for (auto it = m.begin(); it != m.end();) {
    it->second = pos_mod(it->second, n);
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
  return m;
}

}  // namespace

GroupElement g_id(const GroupBackend& b) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return GroupElement(GroupElement::Lattice(size_t(b.lattice().dim), Int(0)));
    case GroupBackend::Kind::Shift:
      return GroupElement(GroupElement::Shift{});
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct parts;
      parts.reserve(b.direct().parts.size());
      for (const auto& pb : b.direct().parts) parts.push_back(g_id(pb));
      return GroupElement(std::move(parts));
    }
  }
  return {};
}

bool g_is_id(const GroupElement& x) {
  switch (x.kind()) {
    case GroupElement::Kind::Lattice:
      return std::all_of(x.vec().begin(), x.vec().end(), [](const Int& c) { return c == 0; });
    case GroupElement::Kind::Shift:
      return x.bits().empty();
    case GroupElement::Kind::DirectSum:
      return std::all_of(x.parts().begin(), x.parts().end(),
                         [](const GroupElement& e) { return g_is_id(e); });
  }
  return false;
}

GroupElement g_op(const GroupBackend& b, const GroupElement& x, const GroupElement& y) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      const auto &u = x.vec(), &v = y.vec();
      if (u.size() != v.size() || int(u.size()) != b.lattice().dim)
        throw BackendMismatch("g_op: lattice dimension mismatch");
      GroupElement::Lattice r(u.size());
      for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
      return GroupElement(std::move(r));
    }
    case GroupBackend::Kind::Shift: {
      GroupElement::Shift r = x.bits();
      for (const auto& [pos, val] : y.bits()) r[pos] += val;
      return GroupElement(normalize_shift(b, std::move(r)));
    }
    case GroupBackend::Kind::DirectSum: {
      const auto &u = x.parts(), &v = y.parts();
      if (u.size() != v.size() || u.size() != b.direct().parts.size())
        throw BackendMismatch("g_op: direct-sum arity mismatch");
      GroupElement::Direct r;
      r.reserve(u.size());
      for (size_t i = 0; i < u.size(); ++i) r.push_back(g_op(b.direct().parts[i], u[i], v[i]));
      return GroupElement(std::move(r));
    }
  }
  return {};
}

GroupElement g_inv(const GroupBackend& b, const GroupElement& x) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      GroupElement::Lattice r = x.vec();
      for (auto& c : r) c = -c;
      return GroupElement(std::move(r));
    }
    case GroupBackend::Kind::Shift: {
      GroupElement::Shift r = x.bits();
      for (auto& [pos, val] : r) val = -val;
      return GroupElement(normalize_shift(b, std::move(r)));
    }
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct r;
      r.reserve(x.parts().size());
      for (size_t i = 0; i < x.parts().size(); ++i)
        r.push_back(g_inv(b.direct().parts[i], x.parts()[i]));
      return GroupElement(std::move(r));
    }
  }
  return {};
}

bool g_valid(const GroupBackend& b, const GroupElement& x) {
  try {
    switch (b.kind()) {
      case GroupBackend::Kind::Lattice:
        return int(x.vec().size()) == b.lattice().dim;
      case GroupBackend::Kind::Shift: {
        for (const auto& [pos, val] : x.bits()) {
          if (val < 1 || val >= b.shift().order) return false;
          for (const auto& [id, e] : pos.exponents())
            if (id >= b.shift().index_gens) return false;
        }
        return true;
      }
      case GroupBackend::Kind::DirectSum: {
        if (x.parts().size() != b.direct().parts.size()) return false;
        for (size_t i = 0; i < x.parts().size(); ++i)
          if (!g_valid(b.direct().parts[i], x.parts()[i])) return false;
        return true;
      }
    }
  } catch (const std::bad_variant_access&) {
    return false;
  }
  return false;
}

Endomorphism endo_identity(const GroupBackend& b) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return Endomorphism(IMat::identity(b.lattice().dim));
    case GroupBackend::Kind::Shift:
      return Endomorphism(PElement::one());
    case GroupBackend::Kind::DirectSum: {
      std::vector<Endomorphism> parts;
      parts.reserve(b.direct().parts.size());
      for (const auto& pb : b.direct().parts) parts.push_back(endo_identity(pb));
      return Endomorphism(std::move(parts));
    }
  }
  return {};
}

bool endo_is_injective(const GroupBackend& b, const Endomorphism& e) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return e.matrix().det() != 0;
    case GroupBackend::Kind::Shift:
      return true;
    case GroupBackend::Kind::DirectSum: {
      for (size_t i = 0; i < e.parts().size(); ++i)
        if (!endo_is_injective(b.direct().parts[i], e.parts()[i])) return false;
      return true;
    }
  }
  return false;
}

bool endo_is_surjective(const GroupBackend& b, const Endomorphism& e) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      Int d = e.matrix().det();
      return d == 1 || d == -1;
    }
    case GroupBackend::Kind::Shift:
      return e.shift_by().is_one();
    case GroupBackend::Kind::DirectSum: {
      for (size_t i = 0; i < e.parts().size(); ++i)
        if (!endo_is_surjective(b.direct().parts[i], e.parts()[i])) return false;
      return true;
    }
  }
  return false;
}

bool endo_valid(const GroupBackend& b, const Endomorphism& e) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return e.kind() == Endomorphism::Kind::Matrix && e.matrix().rows() == b.lattice().dim &&
             e.matrix().cols() == b.lattice().dim && e.matrix().det() != 0;
    case GroupBackend::Kind::Shift: {
      if (e.kind() != Endomorphism::Kind::Shift) return false;
      for (const auto& [id, exp] : e.shift_by().exponents())
        if (id >= b.shift().index_gens) return false;
      return true;
    }
    case GroupBackend::Kind::DirectSum: {
      if (e.kind() != Endomorphism::Kind::DirectSum ||
          e.parts().size() != b.direct().parts.size())
        return false;
      for (size_t i = 0; i < e.parts().size(); ++i)
        if (!endo_valid(b.direct().parts[i], e.parts()[i])) return false;
      return true;
    }
  }
  return false;
}

GroupElement endo_apply(const GroupBackend& b, const Endomorphism& e, const GroupElement& x) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return GroupElement(e.matrix().apply(x.vec()));
    case GroupBackend::Kind::Shift: {
      GroupElement::Shift r;
      for (const auto& [pos, val] : x.bits()) r[p_mul(e.shift_by(), pos)] = val;
      return GroupElement(std::move(r));
    }
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct r;
      r.reserve(x.parts().size());
      for (size_t i = 0; i < x.parts().size(); ++i)
        r.push_back(endo_apply(b.direct().parts[i], e.parts()[i], x.parts()[i]));
      return GroupElement(std::move(r));
    }
  }
  return {};
}

Endomorphism endo_compose(const GroupBackend& b, const Endomorphism& e1, const Endomorphism& e2) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return Endomorphism(e1.matrix().mul(e2.matrix()));
    case GroupBackend::Kind::Shift:
      return Endomorphism(p_mul(e1.shift_by(), e2.shift_by()));
    case GroupBackend::Kind::DirectSum: {
      std::vector<Endomorphism> parts;
      parts.reserve(e1.parts().size());
      for (size_t i = 0; i < e1.parts().size(); ++i)
        parts.push_back(endo_compose(b.direct().parts[i], e1.parts()[i], e2.parts()[i]));
      return Endomorphism(std::move(parts));
    }
  }
  return {};
}

Endomorphism endo_pow(const GroupBackend& b, const Endomorphism& e, const Int& n) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return Endomorphism(e.matrix().pow(n));
    case GroupBackend::Kind::Shift:
      return Endomorphism(p_pow(e.shift_by(), n));
    case GroupBackend::Kind::DirectSum: {
      std::vector<Endomorphism> parts;
      parts.reserve(e.parts().size());
      for (size_t i = 0; i < e.parts().size(); ++i)
        parts.push_back(endo_pow(b.direct().parts[i], e.parts()[i], n));
      return Endomorphism(std::move(parts));
    }
  }
  return {};
}

std::optional<GroupElement> image_membership(const GroupBackend& b, const Endomorphism& e,
                                             const GroupElement& x) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      auto sol = solve_integer(e.matrix(), x.vec());
      if (!sol) return std::nullopt;
      return GroupElement(std::move(*sol));
    }
    case GroupBackend::Kind::Shift: {
      const PElement& s = e.shift_by();
      GroupElement::Shift r;
      for (const auto& [pos, val] : x.bits()) {
        if (!p_divides(s, pos)) return std::nullopt;
        r[p_quotient(s, pos)] = val;
      }
      return GroupElement(std::move(r));
    }
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct r;
      r.reserve(x.parts().size());
      for (size_t i = 0; i < x.parts().size(); ++i) {
        auto pre = image_membership(b.direct().parts[i], e.parts()[i], x.parts()[i]);
        if (!pre) return std::nullopt;
        r.push_back(std::move(*pre));
      }
      return GroupElement(std::move(r));
    }
  }
  return std::nullopt;
}

std::optional<std::pair<GroupElement, GroupElement>> product_image_membership(
    const GroupBackend& b, const Endomorphism& e1, const Endomorphism& e2,
    const GroupElement& x) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      int d = b.lattice().dim;
      IMat block = e1.matrix().hstack(e2.matrix());
      auto sol = solve_integer(block, x.vec());
      if (!sol) return std::nullopt;
      GroupElement::Lattice a(sol->begin(), sol->begin() + d);
      GroupElement::Lattice c(sol->begin() + d, sol->end());
      return std::make_pair(GroupElement(std::move(a)), GroupElement(std::move(c)));
    }
    case GroupBackend::Kind::Shift: {
      const PElement &s = e1.shift_by(), &t = e2.shift_by();
      GroupElement::Shift a, c;
      for (const auto& [pos, val] : x.bits()) {
        if (p_divides(s, pos))
          a[p_quotient(s, pos)] = val;
        else if (p_divides(t, pos))
          c[p_quotient(t, pos)] = val;
        else
          return std::nullopt;
      }
      return std::make_pair(GroupElement(std::move(a)), GroupElement(std::move(c)));
    }
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct a, c;
      for (size_t i = 0; i < x.parts().size(); ++i) {
        auto w = product_image_membership(b.direct().parts[i], e1.parts()[i], e2.parts()[i],
                                          x.parts()[i]);
        if (!w) return std::nullopt;
        a.push_back(std::move(w->first));
        c.push_back(std::move(w->second));
      }
      return std::make_pair(GroupElement(std::move(a)), GroupElement(std::move(c)));
    }
  }
  return std::nullopt;
}

std::optional<Int> subgroup_index(const GroupBackend& b, const Endomorphism& e) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return boost::multiprecision::abs(e.matrix().det());
    case GroupBackend::Kind::Shift: {
      const PElement& s = e.shift_by();
      if (s.is_one()) return Int(1);
      if (b.shift().index_gens > 1) return std::nullopt;
      Int k = s.exponent(0);
      if (k > 4096) throw std::domain_error("subgroup_index: shift exponent too large");
      return boost::multiprecision::pow(b.shift().order, k.convert_to<unsigned>());
    }
    case GroupBackend::Kind::DirectSum: {
      Int prod = 1;
      for (size_t i = 0; i < e.parts().size(); ++i) {
        auto idx = subgroup_index(b.direct().parts[i], e.parts()[i]);
        if (!idx) return std::nullopt;
        prod *= *idx;
      }
      return prod;
    }
  }
  return std::nullopt;
}

namespace {

constexpr long kEnumerationCap = 1L << 22;

long to_long_checked(const Int& v, const char* who) {
  if (v > kEnumerationCap) throw std::domain_error(std::string(who) + ": enumeration too large");
  return v.convert_to<long>();
}

std::vector<GroupElement> lattice_transversal(const GroupBackend& b, const IMat& t) {
  IMat h = column_hnf(t);
  int d = h.rows();
  Int total = 1;
  for (int i = 0; i < d; ++i) total *= h(i, i);
  long n = to_long_checked(total, "transversal");
  std::vector<GroupElement> out;
  out.reserve(size_t(n));
  std::vector<Int> x(size_t(d), Int(0));
  for (;;) {
    out.emplace_back(GroupElement::Lattice(x));
    int i = d - 1;
    while (i >= 0) {
      ++x[size_t(i)];
      if (x[size_t(i)] < h(i, i)) break;
      x[size_t(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  (void)b;
  return out;
}

// All residue assignments on a fixed position list, in base-order counting
// with the last position moving fastest.
std::vector<GroupElement> shift_assignments(const GroupBackend& b,
                                            const std::vector<PElement>& positions) {
  long n = to_long_checked(b.shift().order, "shift enumeration");
  Int total = boost::multiprecision::pow(Int(n), unsigned(positions.size()));
  long count = to_long_checked(total, "shift enumeration");
  std::vector<GroupElement> out;
  out.reserve(size_t(count));
  std::vector<long> digits(positions.size(), 0);
  for (long c = 0; c < count; ++c) {
    GroupElement::Shift m;
    for (size_t j = 0; j < positions.size(); ++j)
      if (digits[j] != 0) m[positions[j]] = digits[j];
    out.emplace_back(std::move(m));
    for (size_t j = positions.size(); j-- > 0;) {
      if (++digits[j] < n) break;
      digits[j] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<PElement> shift_positions(unsigned index_gens, size_t count) {
  std::vector<PElement> out;
  out.reserve(count);
  // graded order, within a degree the first generator dominates
  std::function<void(PElement, unsigned, long)> emit = [&](PElement base, unsigned gen,
                                                           long degree_left) {
    if (out.size() >= count) return;
    if (gen + 1 == index_gens) {
      if (degree_left > 0) base = p_mul(base, PElement::generator(gen, degree_left));
      out.push_back(std::move(base));
      return;
    }
    for (long e = degree_left; e >= 0 && out.size() < count; --e) {
      PElement next = e > 0 ? p_mul(base, PElement::generator(gen, e)) : base;
      emit(std::move(next), gen + 1, degree_left - e);
    }
  };
  for (long deg = 0; out.size() < count; ++deg) emit(PElement::one(), 0, deg);
  out.resize(count);
  return out;
}

std::vector<GroupElement> transversal(const GroupBackend& b, const Endomorphism& e) {
  auto idx = subgroup_index(b, e);
  if (!idx) throw InfiniteIndex("transversal: subgroup has infinite index");
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return lattice_transversal(b, e.matrix());
    case GroupBackend::Kind::Shift: {
      const PElement& s = e.shift_by();
      if (s.is_one()) return {g_id(b)};
      long k = to_long_checked(s.exponent(0), "transversal");
      std::vector<PElement> positions;
      positions.reserve(size_t(k));
      for (long j = 0; j < k; ++j) positions.push_back(PElement::generator(0, j));
      return shift_assignments(b, positions);
    }
    case GroupBackend::Kind::DirectSum: {
      std::vector<std::vector<GroupElement>> parts;
      parts.reserve(e.parts().size());
      for (size_t i = 0; i < e.parts().size(); ++i)
        parts.push_back(transversal(b.direct().parts[i], e.parts()[i]));
      std::vector<GroupElement> out;
      std::vector<size_t> at(parts.size(), 0);
      for (;;) {
        GroupElement::Direct tuple;
        tuple.reserve(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) tuple.push_back(parts[i][at[i]]);
        out.emplace_back(std::move(tuple));
        size_t i = parts.size();
        for (; i-- > 0;) {
          if (++at[i] < parts[i].size()) break;
          at[i] = 0;
          if (i == 0) return out;
        }
        if (i == size_t(-1)) break;
      }
      return out;
    }
  }
  return {};
}

GroupElement canonical_rep(const GroupBackend& b, const Endomorphism& e, const GroupElement& x) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      IMat h = column_hnf(e.matrix());
      int d = h.rows();
      GroupElement::Lattice y = x.vec();
      for (int i = 0; i < d; ++i) {
        Int q = floor_div(y[size_t(i)], h(i, i));
        if (q == 0) continue;
        for (int r = i; r < d; ++r) y[size_t(r)] -= q * h(r, i);
      }
      return GroupElement(std::move(y));
    }
    case GroupBackend::Kind::Shift: {
      const PElement& s = e.shift_by();
      GroupElement::Shift r;
      for (const auto& [pos, val] : x.bits())
        if (!p_divides(s, pos)) r[pos] = val;
      return GroupElement(std::move(r));
    }
    case GroupBackend::Kind::DirectSum: {
      GroupElement::Direct r;
      r.reserve(x.parts().size());
      for (size_t i = 0; i < x.parts().size(); ++i)
        r.push_back(canonical_rep(b.direct().parts[i], e.parts()[i], x.parts()[i]));
      return GroupElement(std::move(r));
    }
  }
  return {};
}

std::vector<Int> quotient_structure(const GroupBackend& b, const Endomorphism& e) {
  auto idx = subgroup_index(b, e);
  if (!idx) throw InfiniteIndex("quotient_structure: infinite index");
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return smith_normal_form(e.matrix()).invariant_factors();
    case GroupBackend::Kind::Shift: {
      const PElement& s = e.shift_by();
      std::vector<Int> f;
      if (s.is_one()) return f;
      long k = to_long_checked(s.exponent(0), "quotient_structure");
      f.assign(size_t(k), b.shift().order);
      return f;
    }
    case GroupBackend::Kind::DirectSum: {
      std::vector<Int> all;
      for (size_t i = 0; i < e.parts().size(); ++i) {
        auto f = quotient_structure(b.direct().parts[i], e.parts()[i]);
        all.insert(all.end(), f.begin(), f.end());
      }
      if (all.empty()) return all;
      // recombine into a divisor chain
      IMat diag(int(all.size()), int(all.size()));
      for (size_t i = 0; i < all.size(); ++i) diag(int(i), int(i)) = all[i];
      return smith_normal_form(diag).invariant_factors();
    }
  }
  return {};
}

std::vector<GroupElement> coset_reps_prefix(const GroupBackend& b, const Endomorphism& e,
                                            size_t count) {
  if (has_finite_index(b, e)) {
    auto full = transversal(b, e);
    if (full.size() > count) full.resize(count);
    return full;
  }
  switch (b.kind()) {
    case GroupBackend::Kind::Shift: {
      const PElement& s = e.shift_by();
      long n = to_long_checked(b.shift().order, "coset_reps_prefix");
      // positions off sJ carry the canonical representatives; walk them in
      // base-n counter order
      std::vector<PElement> off;
      size_t scan = 0;
      auto ensure = [&](size_t need) {
        while (off.size() < need) {
          scan += 16;
          auto pos = shift_positions(b.shift().index_gens, scan);
          off.clear();
          for (const auto& p : pos)
            if (!p_divides(s, p)) off.push_back(p);
        }
      };
      std::vector<GroupElement> out;
      out.reserve(count);
      for (long c = 0; out.size() < count; ++c) {
        GroupElement::Shift m;
        long rest = c;
        size_t j = 0;
        while (rest != 0) {
          ensure(j + 1);
          long digit = rest % n;
          rest /= n;
          if (digit != 0) m[off[j]] = digit;
          ++j;
        }
        out.emplace_back(std::move(m));
      }
      return out;
    }
    case GroupBackend::Kind::DirectSum: {
      for (size_t i = 0; i < e.parts().size(); ++i) {
        if (has_finite_index(b.direct().parts[i], e.parts()[i])) continue;
        auto inner = coset_reps_prefix(b.direct().parts[i], e.parts()[i], count);
        std::vector<GroupElement> out;
        out.reserve(inner.size());
        for (auto& g : inner) {
          GroupElement::Direct tuple;
          tuple.reserve(e.parts().size());
          for (size_t j = 0; j < e.parts().size(); ++j)
            tuple.push_back(j == i ? std::move(g) : g_id(b.direct().parts[j]));
          out.emplace_back(std::move(tuple));
        }
        return out;
      }
      throw std::logic_error("coset_reps_prefix: no infinite part in infinite-index direct sum");
    }
    default:
      throw std::logic_error("coset_reps_prefix: lattice backends always have finite index");
  }
}

std::vector<GroupElement> window_elements(const GroupBackend& b, int r) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      int d = b.lattice().dim;
      std::vector<GroupElement> out;
      std::vector<Int> x(size_t(d), Int(-r));
      for (;;) {
        out.emplace_back(GroupElement::Lattice(x));
        int i = d - 1;
        while (i >= 0) {
          ++x[size_t(i)];
          if (x[size_t(i)] <= r) break;
          x[size_t(i)] = -r;
          --i;
        }
        if (i < 0) break;
      }
      return out;
    }
    case GroupBackend::Kind::Shift:
      return shift_assignments(b, shift_positions(b.shift().index_gens, size_t(r)));
    case GroupBackend::Kind::DirectSum: {
      std::vector<std::vector<GroupElement>> parts;
      parts.reserve(b.direct().parts.size());
      for (const auto& pb : b.direct().parts) parts.push_back(window_elements(pb, r));
      std::vector<GroupElement> out;
      std::vector<size_t> at(parts.size(), 0);
      for (;;) {
        GroupElement::Direct tuple;
        tuple.reserve(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) tuple.push_back(parts[i][at[i]]);
        out.emplace_back(std::move(tuple));
        size_t i = parts.size();
        bool done = true;
        for (; i-- > 0;) {
          if (++at[i] < parts[i].size()) {
            done = false;
            break;
          }
          at[i] = 0;
        }
        if (done) break;
      }
      return out;
    }
  }
  return {};
}

bool endo_tail_trivial(const GroupBackend& b, const Endomorphism& e) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return all_eigenvalues_outside_unit_circle(e.matrix());
    case GroupBackend::Kind::Shift:
      return !e.shift_by().is_one();  // finite supports leave every shifted index set
    case GroupBackend::Kind::DirectSum: {
      for (size_t i = 0; i < e.parts().size(); ++i)
        if (!endo_tail_trivial(b.direct().parts[i], e.parts()[i])) return false;
      return true;
    }
  }
  return false;
}

EndoSolver::EndoSolver(const GroupBackend& b, const Endomorphism& e)
    : v_(PElement::one()) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      v_ = LatticeData{SnfSolver(e.matrix()), column_hnf(e.matrix())};
      break;
    case GroupBackend::Kind::Shift:
      v_ = e.shift_by();
      break;
    case GroupBackend::Kind::DirectSum: {
      std::vector<EndoSolver> parts;
      parts.reserve(e.parts().size());
      for (size_t i = 0; i < e.parts().size(); ++i)
        parts.emplace_back(b.direct().parts[i], e.parts()[i]);
      v_ = std::move(parts);
      break;
    }
  }
}

std::optional<GroupElement> EndoSolver::preimage(const GroupElement& x) const {
  if (const auto* lat = std::get_if<LatticeData>(&v_)) {
    auto sol = lat->solver.solve(x.vec());
    if (!sol) return std::nullopt;
    return GroupElement(std::move(*sol));
  }
  if (const auto* s = std::get_if<PElement>(&v_)) {
    GroupElement::Shift r;
    for (const auto& [pos, val] : x.bits()) {
      if (!p_divides(*s, pos)) return std::nullopt;
      r[p_quotient(*s, pos)] = val;
    }
    return GroupElement(std::move(r));
  }
  const auto& parts = std::get<std::vector<EndoSolver>>(v_);
  GroupElement::Direct r;
  r.reserve(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    auto pre = parts[i].preimage(x.parts()[i]);
    if (!pre) return std::nullopt;
    r.push_back(std::move(*pre));
  }
  return GroupElement(std::move(r));
}

GroupElement EndoSolver::rep(const GroupElement& x) const {
  if (const auto* lat = std::get_if<LatticeData>(&v_)) {
    const IMat& h = lat->hnf;
    int d = h.rows();
    GroupElement::Lattice y = x.vec();
    for (int i = 0; i < d; ++i) {
      Int q = floor_div(y[size_t(i)], h(i, i));
      if (q == 0) continue;
      for (int r = i; r < d; ++r) y[size_t(r)] -= q * h(r, i);
    }
    return GroupElement(std::move(y));
  }
  if (const auto* s = std::get_if<PElement>(&v_)) {
    GroupElement::Shift r;
    for (const auto& [pos, val] : x.bits())
      if (!p_divides(*s, pos)) r[pos] = val;
    return GroupElement(std::move(r));
  }
  const auto& parts = std::get<std::vector<EndoSolver>>(v_);
  GroupElement::Direct r;
  r.reserve(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) r.push_back(parts[i].rep(x.parts()[i]));
  return GroupElement(std::move(r));
}

PairSolver::PairSolver(const GroupBackend& b, const Endomorphism& e1, const Endomorphism& e2)
    : v_(std::pair<PElement, PElement>{}) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      v_ = LatticeData{SnfSolver(e1.matrix().hstack(e2.matrix())), b.lattice().dim};
      break;
    case GroupBackend::Kind::Shift:
      v_ = std::make_pair(e1.shift_by(), e2.shift_by());
      break;
    case GroupBackend::Kind::DirectSum: {
      std::vector<PairSolver> parts;
      parts.reserve(e1.parts().size());
      for (size_t i = 0; i < e1.parts().size(); ++i)
        parts.emplace_back(b.direct().parts[i], e1.parts()[i], e2.parts()[i]);
      v_ = std::move(parts);
      break;
    }
  }
}

std::optional<std::pair<GroupElement, GroupElement>> PairSolver::factorize(
    const GroupElement& x) const {
  if (const auto* lat = std::get_if<LatticeData>(&v_)) {
    auto sol = lat->solver.solve(x.vec());
    if (!sol) return std::nullopt;
    GroupElement::Lattice a(sol->begin(), sol->begin() + lat->dim);
    GroupElement::Lattice c(sol->begin() + lat->dim, sol->end());
    return std::make_pair(GroupElement(std::move(a)), GroupElement(std::move(c)));
  }
  if (const auto* st = std::get_if<std::pair<PElement, PElement>>(&v_)) {
    GroupElement::Shift a, c;
    for (const auto& [pos, val] : x.bits()) {
      if (p_divides(st->first, pos))
        a[p_quotient(st->first, pos)] = val;
      else if (p_divides(st->second, pos))
        c[p_quotient(st->second, pos)] = val;
      else
        return std::nullopt;
    }
    return std::make_pair(GroupElement(std::move(a)), GroupElement(std::move(c)));
  }
  const auto& parts = std::get<std::vector<PairSolver>>(v_);
  GroupElement::Direct a, c;
  for (size_t i = 0; i < parts.size(); ++i) {
    auto w = parts[i].factorize(x.parts()[i]);
    if (!w) return std::nullopt;
    a.push_back(std::move(w->first));
    c.push_back(std::move(w->second));
  }
  return std::make_pair(GroupElement(std::move(a)), GroupElement(std::move(c)));
}

std::string g_str(const GroupBackend& b, const GroupElement& x) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      const auto& v = x.vec();
      if (v.size() == 1) return v[0].str();
      std::string s = "(";
      for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
      return s + ")";
    }
    case GroupBackend::Kind::Shift: {
      std::string s = "{";
      bool first = true;
      for (const auto& [pos, val] : x.bits()) {
        if (!first) s += ",";
        first = false;
        if (b.shift().index_gens == 1)
          s += pos.exponent(0).str();
        else
          s += pos.str();
        s += ":" + val.str();
      }
      return s + "}";
    }
    case GroupBackend::Kind::DirectSum: {
      std::string s = "[";
      for (size_t i = 0; i < x.parts().size(); ++i)
        s += (i ? "; " : "") + g_str(b.direct().parts[i], x.parts()[i]);
      return s + "]";
    }
  }
  return {};
}

std::string endo_str(const GroupBackend& b, const Endomorphism& e) {
  switch (e.kind()) {
    case Endomorphism::Kind::Matrix:
      return e.matrix().str();
    case Endomorphism::Kind::Shift:
      return "shift(" + e.shift_by().str() + ")";
    case Endomorphism::Kind::DirectSum: {
      std::string s = "[";
      for (size_t i = 0; i < e.parts().size(); ++i)
        s += (i ? "; " : "") + endo_str(b.direct().parts[i], e.parts()[i]);
      return s + "]";
    }
  }
  return {};
}

}  // namespace iads
