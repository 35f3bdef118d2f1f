#include "iads/suites.hpp"
#include "iads/sysio.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace iads;

namespace {

using SysPtr = std::shared_ptr<DynamicalSystem>;

py::object fraction(const Rat& r) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(py::int_(py::str(boost::multiprecision::numerator(r).str())),
              py::int_(py::str(boost::multiprecision::denominator(r).str())));
}

py::object maybe_int(const std::optional<Int>& v) {
  if (!v) return py::none();
  return py::int_(py::str(v->str()));
}

struct PyGroupElement {
  SysPtr sys;
  GroupElement value;
};

struct PyPElement {
  SysPtr sys;
  PElement value;
};

struct PyCoset {
  SysPtr sys;
  Coset value;
};

struct PyDiag {
  SysPtr sys;
  DiagonalElement value;
};

struct PyAlg {
  SysPtr sys;
  AlgebraElement value;
};

struct PySystem {
  SystemDescription desc;
  SysPtr sys;

  explicit PySystem(SystemDescription d, bool enforce)
      : desc(std::move(d)),
        sys(std::make_shared<DynamicalSystem>(desc.backend, desc.generators,
                                              desc.generator_names, enforce)) {}

  PyPElement p(const std::string& text) const { return {sys, parse_pelement(*sys, text)}; }
  PyGroupElement g(const std::string& text) const {
    return {sys, parse_group_element(sys->backend(), text)};
  }
  PyCoset coset(const PyGroupElement& g, const PyPElement& p) const {
    return {sys, make_coset(*sys, g.value, p.value)};
  }
  PyDiag diag(const std::string& expr) const { return {sys, parse_diag_expr(*sys, expr)}; }
  PyAlg alg(const std::string& expr) const { return {sys, parse_alg_expr(*sys, expr)}; }
};

py::dict norm_dict(const PySystem& s, const DiagNorm& nr) {
  py::dict out;
  out["norm_sq"] = fraction(nr.value_sq);
  out["norm"] = nr.value ? fraction(*nr.value) : py::object(py::none());
  out["approx"] = nr.approx();
  out["achieving_sum"] = nr.achieving_sum.str();
  py::list subset;
  for (const auto& c : nr.subset) subset.append(coset_str(*s.sys, c));
  out["subset"] = subset;
  out["witness"] = nr.witness ? py::object(py::cast(PyCoset{s.sys, *nr.witness}))
                              : py::object(py::none());
  return out;
}

py::list report_list(const std::vector<SuiteReport>& reports) {
  py::list out;
  for (const auto& rep : reports) {
    py::dict d;
    d["suite"] = rep.suite;
    py::list checks;
    for (const auto& c : rep.checks) {
      py::dict cd;
      cd["name"] = c.name;
      cd["status"] = c.status;
      cd["detail"] = c.detail;
      checks.append(cd);
    }
    d["checks"] = checks;
    d["pass"] = rep.pass();
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations for irreversible algebraic dynamical systems";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfiniteIndex>(m, "InfiniteIndexError", PyExc_ArithmeticError);
  py::register_exception<NeedsUnitP>(m, "NeedsUnitPError", PyExc_ValueError);

  py::class_<PyPElement>(m, "PElement")
      .def("__repr__", [](const PyPElement& p) { return p.sys->p_str(p.value); })
      .def("__eq__",
           [](const PyPElement& a, const PyPElement& b) { return a.value == b.value; })
      .def("__mul__",
           [](const PyPElement& a, const PyPElement& b) {
             return PyPElement{a.sys, p_mul(a.value, b.value)};
           })
      .def("lcm", [](const PyPElement& a,
                     const PyPElement& b) { return PyPElement{a.sys, p_lcm(a.value, b.value)}; })
      .def("gcd", [](const PyPElement& a,
                     const PyPElement& b) { return PyPElement{a.sys, p_gcd(a.value, b.value)}; })
      .def("divides",
           [](const PyPElement& a, const PyPElement& b) { return p_divides(a.value, b.value); })
      .def("pow", [](const PyPElement& a, long n) { return PyPElement{a.sys, p_pow(a.value, n)}; })
      .def_property_readonly("is_one", [](const PyPElement& p) { return p.value.is_one(); });

  py::class_<PyGroupElement>(m, "GroupElement")
      .def("__repr__", [](const PyGroupElement& g) { return g.sys->g_text(g.value); })
      .def("__eq__", [](const PyGroupElement& a,
                        const PyGroupElement& b) { return a.value == b.value; })
      .def("__add__",
           [](const PyGroupElement& a, const PyGroupElement& b) {
             return PyGroupElement{a.sys, g_op(a.sys->backend(), a.value, b.value)};
           })
      .def("__neg__",
           [](const PyGroupElement& a) {
             return PyGroupElement{a.sys, g_inv(a.sys->backend(), a.value)};
           })
      .def_property_readonly("is_identity",
                             [](const PyGroupElement& g) { return g_is_id(g.value); });

  py::class_<PyCoset>(m, "Coset")
      .def("__repr__", [](const PyCoset& c) { return coset_str(*c.sys, c.value); })
      .def("__eq__", [](const PyCoset& a, const PyCoset& b) { return a.value == b.value; })
      .def("contains", [](const PyCoset& c, const PyGroupElement& x) {
        return coset_contains(*c.sys, c.value, x.value);
      })
      .def_property_readonly(
          "rep", [](const PyCoset& c) { return PyGroupElement{c.sys, c.value.g}; })
      .def_property_readonly("level",
                             [](const PyCoset& c) { return PyPElement{c.sys, c.value.p}; });

  py::class_<PyDiag>(m, "DiagonalElement")
      .def("__repr__", [](const PyDiag& d) { return d.value.str(*d.sys); })
      .def("__eq__", [](const PyDiag& a, const PyDiag& b) { return a.value == b.value; })
      .def("__add__",
           [](const PyDiag& a, const PyDiag& b) {
             return PyDiag{a.sys, diag_add(a.value, b.value)};
           })
      .def("__mul__",
           [](const PyDiag& a, const PyDiag& b) {
             return PyDiag{a.sys, diag_mul(*a.sys, a.value, b.value)};
           })
      .def_property_readonly("is_zero", [](const PyDiag& d) { return d.value.is_zero(); });

  py::class_<PyAlg>(m, "AlgebraElement")
      .def("__repr__", [](const PyAlg& a) { return a.value.str(*a.sys); })
      .def("__eq__", [](const PyAlg& a, const PyAlg& b) { return a.value == b.value; })
      .def("__add__",
           [](const PyAlg& a, const PyAlg& b) { return PyAlg{a.sys, alg_add(a.value, b.value)}; })
      .def("__mul__",
           [](const PyAlg& a, const PyAlg& b) {
             return PyAlg{a.sys, alg_mul(*a.sys, a.value, b.value)};
           })
      .def("star", [](const PyAlg& a) { return PyAlg{a.sys, alg_star(*a.sys, a.value)}; })
      .def("equiv",
           [](const PyAlg& a, const PyAlg& b) { return alg_equiv(*a.sys, a.value, b.value); })
      .def_property_readonly("is_zero", [](const PyAlg& a) { return a.value.is_zero(); })
      .def_property_readonly("term_count", [](const PyAlg& a) { return a.value.size(); });

  py::class_<PySystem>(m, "System")
      .def_static(
          "from_file",
          [](const std::string& path, bool enforce) {
            return PySystem(load_system_file(path), enforce);
          },
          py::arg("path"), py::arg("enforce") = true)
      .def_static(
          "from_json",
          [](const std::string& text, bool enforce) {
            return PySystem(parse_system_text(text), enforce);
          },
          py::arg("text"), py::arg("enforce") = true)
      .def_property_readonly("name", [](const PySystem& s) { return s.desc.name; })
      .def_property_readonly(
          "generators", [](const PySystem& s) { return s.sys->generator_names(); })
      .def_property_readonly(
          "issues", [](const PySystem& s) { return s.sys->construction_issues(); })
      .def("p", &PySystem::p, py::arg("text"))
      .def("g", &PySystem::g, py::arg("text"))
      .def("coset", &PySystem::coset, py::arg("g"), py::arg("p"))
      .def("diag", &PySystem::diag, py::arg("expr"))
      .def("alg", &PySystem::alg, py::arg("expr"))
      .def("unit",
           [](const PySystem& s) {
             return PyAlg{s.sys, AlgebraElement::monomial(mono_unit(*s.sys))};
           })
      .def(
          "index",
          [](const PySystem& s, const PyPElement& p) { return maybe_int(s.sys->index(p.value)); },
          py::arg("p"))
      .def(
          "transversal",
          [](const PySystem& s, const PyPElement& p) {
            py::list out;
            for (const auto& t : s.sys->transversal_at(p.value))
              out.append(PyGroupElement{s.sys, t});
            return out;
          },
          py::arg("p"))
      .def(
          "rep",
          [](const PySystem& s, const PyPElement& p, const PyGroupElement& g) {
            return PyGroupElement{s.sys, s.sys->rep(p.value, g.value)};
          },
          py::arg("p"), py::arg("g"))
      .def(
          "apply",
          [](const PySystem& s, const PyPElement& p, const PyGroupElement& g) {
            return PyGroupElement{s.sys, s.sys->apply(p.value, g.value)};
          },
          py::arg("p"), py::arg("g"))
      .def(
          "preimage",
          [](const PySystem& s, const PyPElement& p, const PyGroupElement& g) -> py::object {
            auto r = s.sys->preimage(p.value, g.value);
            if (!r) return py::none();
            return py::cast(PyGroupElement{s.sys, *r});
          },
          py::arg("p"), py::arg("g"))
      .def(
          "quotient_structure",
          [](const PySystem& s, const PyPElement& p) {
            py::list out;
            for (const auto& f : quotient_structure(s.sys->backend(), s.sys->theta(p.value)))
              out.append(py::int_(py::str(f.str())));
            return out;
          },
          py::arg("p"))
      .def(
          "independence",
          [](const PySystem& s, const PyPElement& p, const PyPElement& q) {
            auto r = check_independence(*s.sys, p.value, q.value);
            py::dict out;
            out["verdict"] = to_string(r.verdict);
            out["witness"] = r.witness
                                 ? py::object(py::cast(PyGroupElement{s.sys, *r.witness}))
                                 : py::object(py::none());
            return out;
          },
          py::arg("p"), py::arg("q"))
      .def(
          "check_axioms",
          [](const PySystem& s) {
            py::list out;
            for (const auto& c : check_axioms(*s.sys).checks) {
              py::dict d;
              d["name"] = c.name;
              d["pass"] = c.pass;
              d["detail"] = c.detail;
              out.append(d);
            }
            return out;
          })
      .def(
          "check_minimality",
          [](const PySystem& s, int radius) {
            auto r = check_minimality(*s.sys, radius);
            py::dict out;
            switch (r.status) {
              case MinimalityResult::Status::Certified:
                out["status"] = "MinimalCertified";
                break;
              case MinimalityResult::Status::UpTo:
                out["status"] = "MinimalUpTo";
                break;
              case MinimalityResult::Status::Unknown:
                out["status"] = "Unknown";
                break;
              case MinimalityResult::Status::NotMinimal:
                out["status"] = "NotMinimal";
                break;
            }
            out["radius"] = r.radius;
            out["detail"] = r.detail;
            out["witness"] = r.witness
                                 ? py::object(py::cast(PyGroupElement{s.sys, *r.witness}))
                                 : py::object(py::none());
            return out;
          },
          py::arg("radius") = 4)
      .def(
          "intersect",
          [](const PySystem& s, const PyCoset& a, const PyCoset& b) -> py::object {
            auto r = coset_intersect(*s.sys, a.value, b.value);
            if (!r) return py::none();
            return py::cast(PyCoset{s.sys, *r});
          },
          py::arg("a"), py::arg("b"))
      .def(
          "constellation",
          [](const PySystem& s, const PyCoset& base,
             const std::vector<PyCoset>& blockers) -> py::object {
            std::vector<Coset> blks;
            blks.reserve(blockers.size());
            for (const auto& b : blockers) blks.push_back(b.value);
            auto r = constellation_nonempty(*s.sys, base.value, blks);
            if (!r) return py::none();
            return py::cast(PyCoset{s.sys, *r});
          },
          py::arg("base"), py::arg("blockers"))
      .def(
          "avoid_tails",
          [](const PySystem& s, const PyCoset& start,
             const std::vector<std::pair<PyGroupElement, PyPElement>>& constraints) {
            std::vector<std::pair<GroupElement, PElement>> cs;
            cs.reserve(constraints.size());
            for (const auto& [g, p] : constraints) cs.emplace_back(g.value, p.value);
            return PyCoset{s.sys, avoid_orbit_tails(*s.sys, start.value, cs)};
          },
          py::arg("start"), py::arg("constraints"))
      .def(
          "projection",
          [](const PySystem& s, const PyGroupElement& g, const PyPElement& p) {
            return PyDiag{s.sys, DiagonalElement::projection(*s.sys, g.value, p.value)};
          },
          py::arg("g"), py::arg("p"))
      .def(
          "cnp3",
          [](const PySystem& s, const PyPElement& p) {
            return PyDiag{s.sys, cnp3_expand(*s.sys, p.value)};
          },
          py::arg("p"))
      .def(
          "tau",
          [](const PySystem& s, const PyGroupElement& g, const PyDiag& d) {
            return PyDiag{s.sys, tau_act(*s.sys, g.value, d.value)};
          },
          py::arg("g"), py::arg("d"))
      .def(
          "norm",
          [](const PySystem& s, const PyDiag& d) { return norm_dict(s, diag_norm(*s.sys, d.value)); },
          py::arg("d"))
      .def(
          "norming_projection",
          [](const PySystem& s, const PyDiag& d) -> py::object {
            auto r = norming_projection(*s.sys, d.value);
            if (!r) return py::none();
            return py::cast(PyCoset{s.sys, *r});
          },
          py::arg("d"))
      .def(
          "expectation",
          [](const PySystem& s, const PyAlg& a) {
            return PyDiag{s.sys, expectation_E(*s.sys, a.value)};
          },
          py::arg("a"))
      .def(
          "gauge_part",
          [](const PySystem& s, const PyAlg& a) {
            return PyAlg{s.sys, expectation_E1(a.value)};
          },
          py::arg("a"))
      .def(
          "spectrum_points",
          [](const PySystem& s, const PyPElement& p) {
            py::list out;
            for (const auto& x : spectrum_level(*s.sys, p.value).points)
              out.append(PyGroupElement{s.sys, x});
            return out;
          },
          py::arg("p"))
      .def(
          "cofinal_chain",
          [](const PySystem& s, int length) {
            py::list out;
            for (const auto& lvl : cofinal_chain(*s.sys, length)) {
              py::dict d;
              d["p"] = s.sys->p_str(lvl.p);
              d["index"] = maybe_int(lvl.index);
              py::list fs;
              for (const auto& f : lvl.invariant_factors) fs.append(py::int_(py::str(f.str())));
              d["invariant_factors"] = fs;
              out.append(d);
            }
            return out;
          },
          py::arg("length") = 4)
      .def(
          "cnp3_defect",
          [](const PySystem& s, const PyPElement& p, int window, size_t classes) {
            auto win = window_elements(s.sys->backend(), window);
            return fraction(cnp3_defect(*s.sys, p.value, win, classes));
          },
          py::arg("p"), py::arg("window"), py::arg("classes"))
      .def(
          "run_suites",
          [](const PySystem& s, uint64_t seed, size_t samples) {
            return report_list(run_all_suites(*s.sys, seed, samples));
          },
          py::arg("seed") = 42, py::arg("samples") = 100);

  m.def("load_system", [](const std::string& path) { return PySystem(load_system_file(path), true); });
}
