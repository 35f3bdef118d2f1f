// iads: axiom checks, coset arithmetic and identity suites for irreversible
// algebraic dynamical systems, driven by JSON system descriptions.

#include "iads/suites.hpp"
#include "iads/sysio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

using namespace iads;
using nlohmann::json;

namespace {

struct Common {
  std::string system_path;
  uint64_t seed = 42;
  size_t samples = 200;
  bool as_json = false;
};

DynamicalSystem load_or_exit(const std::string& path, bool enforce = true) {
  auto desc = load_system_file(path);
  return desc.instantiate(enforce);
}

json check_to_json(const CheckResult& c) {
  json j{{"name", c.name}, {"status", c.status}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

void print_suite(const SuiteReport& rep, bool as_json) {
  if (as_json) {
    for (const auto& c : rep.checks) {
      json line = check_to_json(c);
      line["suite"] = rep.suite;
      std::cout << line.dump() << "\n";
    }
    return;
  }
  std::printf("== %s\n", rep.suite.c_str());
  for (const auto& c : rep.checks)
    std::printf("  [%s] %s%s%s\n", c.status.c_str(), c.name.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
}

int run_check(const Common& opt, int radius, bool allow_unknown) {
  auto desc = load_system_file(opt.system_path);
  auto sys = desc.instantiate(false);
  SuiteReport rep{"check", {}};
  for (const auto& issue : sys.construction_issues())
    rep.add_status("construction", "fail", issue);

  if (sys.construction_issues().empty()) {
    auto ax = check_axioms(sys);
    for (const auto& c : ax.checks) rep.add(c.name, c.pass, c.detail);

    for (GenId i = 0; i < sys.generator_count(); ++i) {
      auto idx = sys.index(PElement::generator(i));
      rep.add_status("finite type at " + sys.generator_names()[i], "pass",
                     idx ? "index " + idx->str() : "infinite index");
    }

    auto min = check_minimality(sys, radius);
    switch (min.status) {
      case MinimalityResult::Status::Certified:
        rep.add_status("minimality", "pass", "MinimalCertified: " + min.detail);
        break;
      case MinimalityResult::Status::UpTo:
        rep.add_status("minimality", "pass",
                       "MinimalUpTo(" + std::to_string(min.radius) + "): " + min.detail);
        break;
      case MinimalityResult::Status::Unknown:
        rep.add_status("minimality", allow_unknown ? "unknown" : "fail", min.detail);
        break;
      case MinimalityResult::Status::NotMinimal:
        rep.add_status("minimality", "fail",
                       "NotMinimal, witness " + sys.g_text(*min.witness));
        break;
    }
  }
  print_suite(rep, opt.as_json);
  bool ok = true;
  for (const auto& c : rep.checks) ok = ok && c.status != "fail";
  if (!opt.as_json) std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}

int run_suite(const Common& opt) {
  auto sys = load_or_exit(opt.system_path);
  auto reports = run_all_suites(sys, opt.seed, opt.samples);
  bool ok = true;
  json summary = json::array();
  for (const auto& rep : reports) {
    print_suite(rep, opt.as_json);
    size_t fails = 0;
    for (const auto& c : rep.checks)
      if (c.failed()) ++fails;
    ok = ok && fails == 0;
    summary.push_back(
        {{"suite", rep.suite}, {"checks", rep.checks.size()}, {"failures", fails}});
  }
  if (opt.as_json)
    std::cout << json{{"summary", summary}, {"seed", opt.seed}, {"samples", opt.samples}}
                     .dump()
              << "\n";
  else
    std::printf("%s (seed %llu, %zu samples)\n", ok ? "PASS" : "FAIL",
                static_cast<unsigned long long>(opt.seed), opt.samples);
  return ok ? 0 : 1;
}

int run_coset_intersect(const Common& opt, const std::string& a, const std::string& b) {
  auto sys = load_or_exit(opt.system_path);
  Coset ca = parse_coset(sys, a), cb = parse_coset(sys, b);
  auto res = coset_intersect(sys, ca, cb);
  if (opt.as_json) {
    json j{{"a", coset_str(sys, ca)}, {"b", coset_str(sys, cb)}};
    j["intersection"] = res ? json(coset_str(sys, *res)) : json();
    std::cout << j.dump() << "\n";
  } else {
    std::printf("%s\n", res ? coset_str(sys, *res).c_str() : "EMPTY");
  }
  return 0;
}

int run_norm(const Common& opt, const std::string& expr) {
  auto sys = load_or_exit(opt.system_path);
  DiagonalElement d = parse_diag_expr(sys, expr);
  auto nr = diag_norm(sys, d);
  std::string subset;
  for (const auto& c : nr.subset) subset += (subset.empty() ? "" : ", ") + coset_str(sys, c);
  if (opt.as_json) {
    json j{{"expr", d.str(sys)},
           {"norm_sq", to_string(nr.value_sq)},
           {"achieving_sum", nr.achieving_sum.str()},
           {"subset", subset}};
    if (nr.value) j["norm"] = to_string(*nr.value);
    std::cout << j.dump() << "\n";
  } else if (nr.value) {
    std::printf("norm = %s  (attained by the subset {%s})\n", to_string(*nr.value).c_str(),
                subset.c_str());
  } else {
    std::printf("norm^2 = %s (~ %.6f), achieving sum %s  (attained by the subset {%s})\n",
                to_string(nr.value_sq).c_str(), nr.approx(), nr.achieving_sum.str().c_str(),
                subset.c_str());
  }
  return 0;
}

int run_mono_mul(const Common& opt, const std::string& a, const std::string& b) {
  auto sys = load_or_exit(opt.system_path);
  AlgebraElement prod = alg_mul(sys, parse_alg_expr(sys, a), parse_alg_expr(sys, b));
  if (opt.as_json)
    std::cout << json{{"product", prod.str(sys)}}.dump() << "\n";
  else
    std::printf("%s\n", prod.str(sys).c_str());
  return 0;
}

int run_spectrum(const Common& opt, const std::string& level) {
  auto sys = load_or_exit(opt.system_path);
  PElement p = parse_pelement(sys, level);
  auto lvl = spectrum_level(sys, p);
  json points = json::array();
  for (const auto& x : lvl.points) points.push_back(sys.g_text(x));
  json maps = json::object();
  for (const auto& [id, e] : p.exponents()) {
    PElement coarse = p_quotient(PElement::generator(id), p);
    auto table = level_map(sys, lvl, coarse);
    json t = json::array();
    for (size_t i = 0; i < table.size(); ++i)
      t.push_back({{"from", sys.g_text(lvl.points[i])},
                   {"to", sys.g_text(sys.transversal_at(coarse)[table[i]])}});
    maps[sys.p_str(coarse)] = t;
  }
  if (opt.as_json) {
    std::cout << json{{"level", sys.p_str(p)},
                      {"index", sys.index(p)->str()},
                      {"points", points},
                      {"level_maps", maps}}
                     .dump()
              << "\n";
  } else {
    std::printf("level %s: %zu points\n", sys.p_str(p).c_str(), lvl.points.size());
    for (const auto& x : lvl.points) std::printf("  %s\n", sys.g_text(x).c_str());
    for (const auto& [coarse, t] : maps.items()) {
      std::printf("map to level %s:\n", coarse.c_str());
      for (const auto& entry : t)
        std::printf("  %s -> %s\n", entry["from"].get<std::string>().c_str(),
                    entry["to"].get<std::string>().c_str());
    }
  }
  return 0;
}

int run_prodsys(const Common& opt) {
  auto sys = load_or_exit(opt.system_path);
  SuiteReport rep{"prodsys", {}};
  for (const auto& c : cnp_representation_check(sys, opt.samples, opt.seed))
    rep.add(c.name, c.pass(),
            c.pass() ? std::to_string(c.samples) + " samples" : c.first_failure);
  print_suite(rep, opt.as_json);
  if (!opt.as_json) std::printf("%s\n", rep.pass() ? "PASS" : "FAIL");
  return rep.pass() ? 0 : 1;
}

int run_l2(const Common& opt, int window) {
  auto sys = load_or_exit(opt.system_path);
  Sampler rng(opt.seed);
  size_t agree = 0;
  for (size_t i = 0; i < opt.samples; ++i) {
    Monomial m1 = sample_monomial(rng, sys, 3, 2);
    Monomial m2 = sample_monomial(rng, sys, 3, 2);
    auto prod = mono_mul(sys, m1, m2);
    auto sem = pinj_compose(sys, monomial_semantics(sys, m1), monomial_semantics(sys, m2));
    bool ok = prod.has_value() != sem.empty &&
              (!prod || monomial_semantics(sys, *prod) == sem);
    if (ok) ++agree;
  }

  // defect table along the first generator
  int r = 1;
  while ((1 << r) < window && r < 6) ++r;
  auto win = window_elements(sys.backend(), sys.backend().kind() == GroupBackend::Kind::Lattice
                                                ? window
                                                : r);
  PElement p = PElement::generator(0);
  size_t classes = visible_classes(sys, p, win);
  json defects = json::array();
  for (size_t k = 1; k <= classes; ++k) {
    Rat d = cnp3_defect(sys, p, win, k);
    defects.push_back({{"classes", k}, {"defect", to_string(d)}});
  }
  if (opt.as_json) {
    std::cout << json{{"oracle_agree", agree},
                      {"oracle_total", opt.samples},
                      {"window", win.size()},
                      {"defects", defects}}
                     .dump()
              << "\n";
  } else {
    std::printf("oracle agreement: %zu/%zu\n", agree, opt.samples);
    std::printf("window size %zu, defect of sum over the first k classes at level %s:\n",
                win.size(), sys.p_str(p).c_str());
    for (const auto& row : defects)
      std::printf("  k=%3ld  defect %s\n", row["classes"].get<long>(),
                  row["defect"].get<std::string>().c_str());
  }
  return agree == opt.samples ? 0 : 1;
}

int run_quotient(const Common& opt, const std::string& level) {
  auto sys = load_or_exit(opt.system_path);
  PElement p = parse_pelement(sys, level);
  auto factors = quotient_structure(sys.backend(), sys.theta(p));
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : ", ") + f.str();
  if (opt.as_json) {
    json arr = json::array();
    for (const auto& f : factors) arr.push_back(f.str());
    std::cout << json{{"level", sys.p_str(p)},
                      {"index", sys.index(p)->str()},
                      {"invariant_factors", arr}}
                     .dump()
              << "\n";
  } else {
    std::printf("G/theta_{%s}(G): index %s, invariant factors [%s]\n",
                sys.p_str(p).c_str(), sys.index(p)->str().c_str(), s.c_str());
  }
  return 0;
}

int run_chain(const Common& opt, int length) {
  auto sys = load_or_exit(opt.system_path);
  auto chain = cofinal_chain(sys, length);
  json arr = json::array();
  for (const auto& lvl : chain) {
    std::string facs;
    for (const auto& f : lvl.invariant_factors) facs += (facs.empty() ? "" : ", ") + f.str();
    if (opt.as_json) {
      json j{{"p", sys.p_str(lvl.p)}};
      j["index"] = lvl.index ? json(lvl.index->str()) : json();
      j["invariant_factors"] = facs;
      arr.push_back(j);
    } else {
      std::printf("p = %-14s index %-10s factors [%s]\n", sys.p_str(lvl.p).c_str(),
                  lvl.index ? lvl.index->str().c_str() : "infinite", facs.c_str());
    }
  }
  if (opt.as_json) std::cout << arr.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for irreversible algebraic dynamical systems"};
  app.require_subcommand(1);

  Common opt;
  int radius = 4;
  int window = 64;
  int length = 4;
  bool allow_unknown = false;
  std::string arg_a, arg_b, expr, level;

  auto add_common = [&](CLI::App* sub, bool needs_system = true) {
    auto* o = sub->add_option("--system", opt.system_path, "system description file");
    if (needs_system) o->required();
    sub->add_option("--seed", opt.seed, "rng seed");
    sub->add_option("--samples", opt.samples, "sample count");
    sub->add_flag("--json", opt.as_json, "machine-readable output");
  };

  auto* check = app.add_subcommand("check", "axioms, finite-type table, minimality");
  add_common(check);
  check->add_option("--radius", radius, "ball radius for the minimality sweep");
  check->add_flag("--allow-unknown", allow_unknown, "treat unknown minimality as ok");

  auto* suite = app.add_subcommand("suite", "run every property suite");
  add_common(suite);

  auto* coset = app.add_subcommand("coset", "coset arithmetic");
  auto* intersect = coset->add_subcommand("intersect", "intersect two cosets");
  add_common(intersect);
  intersect->add_option("--a", arg_a, "first coset, g=<elt>,p=<monoid>")->required();
  intersect->add_option("--b", arg_b, "second coset")->required();

  auto* norm = app.add_subcommand("norm", "exact norm of a diagonal combination");
  add_common(norm);
  norm->add_option("--expr", expr, "e.g. \"1*e(0,g0) + 1*e(0,g1)\"")->required();

  auto* mono = app.add_subcommand("mono", "monomial algebra");
  auto* mul = mono->add_subcommand("mul", "multiply two expressions");
  add_common(mul);
  mul->add_option("--a", arg_a, "left factor, e.g. \"u(1)s(g0)\"")->required();
  mul->add_option("--b", arg_b, "right factor")->required();

  auto* spectrum = app.add_subcommand("spectrum", "finite level of the diagonal spectrum");
  add_common(spectrum);
  spectrum->add_option("--level", level, "monoid element, e.g. g0*g1")->required();

  auto* prod = app.add_subcommand("prodsys", "product-system identity checks");
  auto* prod_check = prod->add_subcommand("check", "run the identity classes");
  add_common(prod_check);

  auto* l2 = app.add_subcommand("l2", "canonical representation checks");
  auto* l2v = l2->add_subcommand("validate", "oracle agreement and defect tables");
  add_common(l2v);
  l2v->add_option("--window", window, "window size");

  auto* quot = app.add_subcommand("quotient", "invariant factors of G/theta_p(G)");
  add_common(quot);
  quot->add_option("--p", level, "monoid element")->required();

  auto* chain = app.add_subcommand("chain", "cofinal chain of subgroups");
  add_common(chain);
  chain->add_option("--length", length, "number of chain levels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(opt, radius, allow_unknown);
    if (suite->parsed()) return run_suite(opt);
    if (intersect->parsed()) return run_coset_intersect(opt, arg_a, arg_b);
    if (norm->parsed()) return run_norm(opt, expr);
    if (mul->parsed()) return run_mono_mul(opt, arg_a, arg_b);
    if (spectrum->parsed()) return run_spectrum(opt, level);
    if (prod_check->parsed()) return run_prodsys(opt);
    if (l2v->parsed()) return run_l2(opt, window);
    if (quot->parsed()) return run_quotient(opt, level);
    if (chain->parsed()) return run_chain(opt, length);
    std::fprintf(stderr, "missing subcommand\n");
    return 2;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
