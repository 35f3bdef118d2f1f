#include "iads/partialrep.hpp"

#include <set>

namespace iads {

PartialInjection monomial_semantics(const DynamicalSystem& sys, const Monomial& m) {
  (void)sys;
  return PartialInjection{false, m};
}

PartialInjection pinj_empty() { return PartialInjection{}; }

PartialInjection pinj_identity(const DynamicalSystem& sys) {
  return PartialInjection{false, mono_unit(sys)};
}

Coset pinj_domain(const DynamicalSystem& sys, const PartialInjection& f) {
  if (f.empty) throw std::domain_error("pinj_domain: empty partial injection");
  return make_coset(sys, f.m.h, f.m.q);
}

Coset pinj_range(const DynamicalSystem& sys, const PartialInjection& f) {
  if (f.empty) throw std::domain_error("pinj_range: empty partial injection");
  return make_coset(sys, f.m.g, f.m.p);
}

std::optional<GroupElement> pinj_apply(const DynamicalSystem& sys, const PartialInjection& f,
                                       const GroupElement& x) {
  if (f.empty) return std::nullopt;
  const GroupBackend& b = sys.backend();
  auto pre = sys.preimage(f.m.q, g_sub(b, x, f.m.h));
  if (!pre) return std::nullopt;
  return g_op(b, f.m.g, sys.apply(f.m.p, *pre));
}

PartialInjection pinj_compose(const DynamicalSystem& sys, const PartialInjection& f,
                              const PartialInjection& s) {
  if (f.empty || s.empty) return pinj_empty();
  const GroupBackend& b = sys.backend();
  auto meet = coset_intersect(sys, pinj_range(sys, s), pinj_domain(sys, f));
  if (!meet) return pinj_empty();
  const GroupElement& c = meet->g;  // a point in range(s) ∩ dom(f)

  auto back = sys.preimage(s.m.p, g_sub(b, c, s.m.g));
  auto forth = sys.preimage(f.m.q, g_sub(b, c, f.m.h));
  if (!back || !forth) throw std::logic_error("pinj_compose: intersection point escaped");

  GroupElement h2 = g_op(b, s.m.h, sys.apply(s.m.q, *back));   // s^{-1}(c)
  GroupElement g2 = g_op(b, f.m.g, sys.apply(f.m.p, *forth));  // f(c)
  PElement join = p_lcm(s.m.p, f.m.q);
  PElement q2 = p_mul(s.m.q, p_quotient(s.m.p, join));
  PElement p2 = p_mul(f.m.p, p_quotient(f.m.q, join));
  return PartialInjection{false, mono_canonicalize(sys, g2, p2, q2, h2)};
}

PartialInjection pinj_invert(const DynamicalSystem& sys, const PartialInjection& f) {
  if (f.empty) return pinj_empty();
  return PartialInjection{false, mono_canonicalize(sys, f.m.h, f.m.q, f.m.p, f.m.g)};
}

std::string pinj_str(const DynamicalSystem& sys, const PartialInjection& f) {
  if (f.empty) return "empty";
  return "x in " + coset_str(sys, pinj_domain(sys, f)) + " -> " + sys.g_text(f.m.g) +
         " + theta_{" + sys.p_str(f.m.p) + "}(theta_{" + sys.p_str(f.m.q) + "}^{-1}(x - " +
         sys.g_text(f.m.h) + "))";
}

TruncatedOperator truncate(const DynamicalSystem& sys, const PartialInjection& f,
                           const std::vector<GroupElement>& window) {
  TruncatedOperator t;
  t.window = window;
  std::map<GroupElement, size_t> where;
  for (size_t i = 0; i < window.size(); ++i) where.emplace(window[i], i);
  for (size_t col = 0; col < window.size(); ++col) {
    auto y = pinj_apply(sys, f, window[col]);
    if (!y) continue;
    auto it = where.find(*y);
    if (it != where.end()) t.entries.emplace_back(it->second, col);
  }
  return t;
}

bool truncated_equal(const TruncatedOperator& a, const TruncatedOperator& b) {
  return a.window == b.window && a.entries == b.entries;
}

namespace {

std::vector<GroupElement> window_classes(const DynamicalSystem& sys, const PElement& p,
                                         const std::vector<GroupElement>& window) {
  std::set<GroupElement> classes;
  for (const auto& x : window) classes.insert(sys.rep(p, x));
  return {classes.begin(), classes.end()};
}

}  // namespace

size_t visible_classes(const DynamicalSystem& sys, const PElement& p,
                       const std::vector<GroupElement>& window) {
  return window_classes(sys, p, window).size();
}

Rat cnp3_defect(const DynamicalSystem& sys, const PElement& p,
                const std::vector<GroupElement>& window, size_t class_count) {
  if (window.empty()) throw std::domain_error("cnp3_defect: empty window");
  auto classes = window_classes(sys, p, window);
  if (class_count > classes.size()) class_count = classes.size();
  std::set<GroupElement> chosen(classes.begin(), classes.begin() + long(class_count));
  size_t missed = 0;
  for (const auto& x : window)
    if (chosen.find(sys.rep(p, x)) == chosen.end()) ++missed;
  return Rat(Int(missed), Int(window.size()));
}

}  // namespace iads
