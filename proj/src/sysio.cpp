#include "iads/sysio.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace iads {

using nlohmann::json;

namespace {

GroupBackend backend_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "lattice") return GroupBackend(LatticeBackend{j.at("dim").get<int>()});
  if (type == "shift_sum") {
    ShiftBackend sb;
    sb.order = Int(j.at("order").get<long>());
    if (j.contains("index")) {
      const auto& idx = j.at("index");
      if (idx.is_string()) {
        if (idx.get<std::string>() != "nat")
          throw ParseError("shift_sum index must be \"nat\" or a generator count");
        sb.index_gens = 1;
      } else {
        sb.index_gens = idx.get<unsigned>();
      }
    }
    return GroupBackend(sb);
  }
  if (type == "direct_sum") {
    DirectSumBackend db;
    for (const auto& part : j.at("parts")) db.parts.push_back(backend_from_json(part));
    return GroupBackend(db);
  }
  throw ParseError("unknown group type: " + type);
}

json backend_to_json(const GroupBackend& b) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice:
      return json{{"type", "lattice"}, {"dim", b.lattice().dim}};
    case GroupBackend::Kind::Shift: {
      json j{{"type", "shift_sum"}, {"order", b.shift().order.convert_to<long>()}};
      if (b.shift().index_gens == 1)
        j["index"] = "nat";
      else
        j["index"] = b.shift().index_gens;
      return j;
    }
    case GroupBackend::Kind::DirectSum: {
      json parts = json::array();
      for (const auto& p : b.direct().parts) parts.push_back(backend_to_json(p));
      return json{{"type", "direct_sum"}, {"parts", parts}};
    }
  }
  return {};
}

PElement shift_amount_from_json(const json& j, unsigned index_gens) {
  if (j.is_number_integer()) {
    long k = j.get<long>();
    if (k < 0) throw ParseError("shift amount must be nonnegative");
    return k == 0 ? PElement::one() : PElement::generator(0, k);
  }
  // string form over default position names g0, g1, ...
  std::string s = j.get<std::string>();
  PElement out;
  if (s == "1") return out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, '*')) {
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    long exp = caret == std::string::npos ? 1 : std::stol(tok.substr(caret + 1));
    if (name.size() < 2 || name[0] != 'g') throw ParseError("bad shift position: " + tok);
    unsigned id = unsigned(std::stoul(name.substr(1)));
    if (id >= index_gens) throw ParseError("shift position uses unknown index generator");
    out = p_mul(out, PElement::generator(id, exp));
  }
  return out;
}

Endomorphism endo_from_json(const json& j, const GroupBackend& b) {
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      const auto& rows = j.at("matrix");
      std::vector<std::vector<Int>> m;
      for (const auto& row : rows) {
        std::vector<Int> r;
        for (const auto& v : row) r.emplace_back(v.get<long>());
        m.push_back(std::move(r));
      }
      return Endomorphism(IMat::from_rows(m));
    }
    case GroupBackend::Kind::Shift:
      return Endomorphism(shift_amount_from_json(j.at("shift"), b.shift().index_gens));
    case GroupBackend::Kind::DirectSum: {
      std::vector<Endomorphism> parts;
      const auto& arr = j.at("parts");
      if (arr.size() != b.direct().parts.size())
        throw ParseError("direct-sum generator arity mismatch");
      for (size_t i = 0; i < arr.size(); ++i)
        parts.push_back(endo_from_json(arr[i], b.direct().parts[i]));
      return Endomorphism(std::move(parts));
    }
  }
  throw ParseError("unreachable backend kind");
}

json endo_to_json(const Endomorphism& e, const GroupBackend& b) {
  switch (e.kind()) {
    case Endomorphism::Kind::Matrix: {
      json rows = json::array();
      for (int i = 0; i < e.matrix().rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < e.matrix().cols(); ++j2)
          row.push_back(e.matrix()(i, j2).convert_to<long>());
        rows.push_back(row);
      }
      return json{{"matrix", rows}};
    }
    case Endomorphism::Kind::Shift: {
      if (b.shift().index_gens == 1)
        return json{{"shift", e.shift_by().exponent(0).convert_to<long>()}};
      return json{{"shift", e.shift_by().str()}};
    }
    case Endomorphism::Kind::DirectSum: {
      json parts = json::array();
      for (size_t i = 0; i < e.parts().size(); ++i)
        parts.push_back(endo_to_json(e.parts()[i], b.direct().parts[i]));
      return json{{"parts", parts}};
    }
  }
  return {};
}

}  // namespace

SystemDescription parse_system_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    SystemDescription d;
    d.name = j.value("name", "");
    d.notes = j.value("notes", "");
    d.backend = backend_from_json(j.at("group"));
    for (const auto& [name, spec] : j.at("generators").items()) {
      d.generator_names.push_back(name);
      d.generators.push_back(endo_from_json(spec, d.backend));
    }
    if (d.generators.empty()) throw ParseError("system has no generators");
    return d;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad system description: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad system description: ") + e.what());
  }
}

SystemDescription load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_system_text(buf.str());
}

std::string system_to_json(const SystemDescription& desc) {
  json gens = json::object();
  for (size_t i = 0; i < desc.generators.size(); ++i)
    gens[desc.generator_names[i]] = endo_to_json(desc.generators[i], desc.backend);
  json j{{"name", desc.name}, {"group", backend_to_json(desc.backend)}, {"generators", gens}};
  if (!desc.notes.empty()) j["notes"] = desc.notes;
  return j.dump(2);
}

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// splits on `sep` at paren/brace/bracket depth zero
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("expected an integer");
  try {
    return Int(t);
  } catch (const std::exception&) {
    throw ParseError("bad integer: " + t);
  }
}

GroupElement parse_shift_element(const GroupBackend& b, const std::string& body) {
  GroupElement::Shift m;
  std::string inner = strip(body);
  if (inner.empty()) return GroupElement(std::move(m));
  for (const auto& item : split_top(inner, ',')) {
    auto kv = split_top(item, ':');
    if (kv.size() != 2) throw ParseError("bad shift entry: " + item);
    std::string pos_text = strip(kv[0]);
    PElement pos;
    if (b.shift().index_gens == 1) {
      Int k = parse_int(pos_text);
      if (k < 0) throw ParseError("negative shift position");
      if (k > 0) pos = PElement::generator(0, k);
    } else if (pos_text != "1") {
      for (const auto& tok : split_top(pos_text, '*')) {
        auto caret = tok.find('^');
        std::string name = strip(tok.substr(0, caret));
        Int exp = caret == std::string::npos ? Int(1) : parse_int(tok.substr(caret + 1));
        if (name.size() < 2 || name[0] != 'g') throw ParseError("bad position: " + tok);
        unsigned id = unsigned(std::stoul(name.substr(1)));
        if (id >= b.shift().index_gens) throw ParseError("unknown index generator in " + tok);
        pos = p_mul(pos, PElement::generator(id, exp));
      }
    }
    Int val = pos_mod(parse_int(kv[1]), b.shift().order);
    if (val != 0) m[pos] = val;
  }
  return GroupElement(std::move(m));
}

}  // namespace

GroupElement parse_group_element(const GroupBackend& b, const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty group element");
  switch (b.kind()) {
    case GroupBackend::Kind::Lattice: {
      std::vector<Int> v;
      if (t.front() == '(') {
        if (t.back() != ')') throw ParseError("unbalanced parentheses in " + t);
        for (const auto& c : split_top(t.substr(1, t.size() - 2), ','))
          v.push_back(parse_int(c));
      } else {
        v.push_back(parse_int(t));
      }
      if (int(v.size()) != b.lattice().dim)
        throw ParseError("element has wrong dimension: " + t);
      return GroupElement(std::move(v));
    }
    case GroupBackend::Kind::Shift: {
      if (t.front() != '{' || t.back() != '}') throw ParseError("shift element needs {..}: " + t);
      return parse_shift_element(b, t.substr(1, t.size() - 2));
    }
    case GroupBackend::Kind::DirectSum: {
      if (t.front() != '[' || t.back() != ']')
        throw ParseError("direct-sum element needs [..;..]: " + t);
      auto items = split_top(t.substr(1, t.size() - 2), ';');
      if (items.size() != b.direct().parts.size())
        throw ParseError("direct-sum element arity mismatch: " + t);
      GroupElement::Direct parts;
      for (size_t i = 0; i < items.size(); ++i)
        parts.push_back(parse_group_element(b.direct().parts[i], items[i]));
      return GroupElement(std::move(parts));
    }
  }
  throw ParseError("unreachable");
}

PElement parse_pelement(const DynamicalSystem& sys, const std::string& text) {
  std::string t = strip(text);
  if (t == "1" || t.empty()) return PElement::one();
  PElement out;
  for (const auto& tok : split_top(t, '*')) {
    std::string piece = strip(tok);
    auto caret = piece.find('^');
    std::string name = strip(piece.substr(0, caret));
    Int exp = caret == std::string::npos ? Int(1) : parse_int(piece.substr(caret + 1));
    out = p_mul(out, PElement::generator(sys.generator_id(name), exp));
  }
  return out;
}

Coset parse_coset(const DynamicalSystem& sys, const std::string& text) {
  GroupElement g = g_id(sys.backend());
  PElement p;
  for (const auto& item : split_top(text, ',')) {
    std::string piece = strip(item);
    if (piece.rfind("g=", 0) == 0)
      g = parse_group_element(sys.backend(), piece.substr(2));
    else if (piece.rfind("p=", 0) == 0)
      p = parse_pelement(sys, piece.substr(2));
    else
      throw ParseError("coset syntax is g=<element>,p=<monoid element>: " + text);
  }
  return make_coset(sys, g, p);
}

namespace {

GaussianRat parse_rational_coeff(const std::string& text) {
  std::string t = strip(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return GaussianRat(Rat(parse_int(t)));
  Int num = parse_int(t.substr(0, slash));
  Int den = parse_int(t.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in " + text);
  return GaussianRat(Rat(num, den));
}

// one product of factors u(..), s(..), e(..,..), 1, each with optional *
AlgebraElement parse_word(const DynamicalSystem& sys, const std::string& text) {
  AlgebraElement acc = AlgebraElement::monomial(mono_unit(sys));
  size_t i = 0;
  std::string t = strip(text);
  while (i < t.size()) {
    if (t[i] == ' ') {
      ++i;
      continue;
    }
    if (t[i] == '1') {
      ++i;
      continue;
    }
    char kind = t[i];
    if (kind != 'u' && kind != 's' && kind != 'e')
      throw ParseError("expected factor u(..), s(..) or e(..,..) at: " + t.substr(i));
    size_t open = t.find('(', i);
    if (open == std::string::npos) throw ParseError("missing ( in " + t);
    int depth = 1;
    size_t close = open + 1;
    for (; close < t.size() && depth > 0; ++close) {
      if (t[close] == '(') ++depth;
      if (t[close] == ')') --depth;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in " + t);
    std::string body = t.substr(open + 1, close - open - 2);
    bool star = close < t.size() && t[close] == '*';
    i = close + (star ? 1 : 0);

    Monomial m = mono_unit(sys);
    if (kind == 'u') {
      m = mono_u(sys, parse_group_element(sys.backend(), body));
    } else if (kind == 's') {
      m = mono_s(sys, parse_pelement(sys, body));
    } else {
      auto args = split_top(body, ',');
      if (args.size() != 2) throw ParseError("e(..) needs two arguments: " + body);
      m = mono_proj(sys, parse_group_element(sys.backend(), args[0]),
                    parse_pelement(sys, args[1]));
    }
    if (star) m = mono_star(sys, m);
    acc = alg_mul(sys, acc, AlgebraElement::monomial(m));
  }
  return acc;
}

}  // namespace

AlgebraElement parse_alg_expr(const DynamicalSystem& sys, const std::string& text) {
  // normalize "a - b" into "+(-1)*" terms by scanning top-level signs
  AlgebraElement out;
  std::string t = strip(text);
  if (t.empty()) return out;
  size_t pos = 0;
  int depth = 0;
  std::string cur;
  std::vector<std::pair<int, std::string>> terms;  // sign, body
  int sign = 1;
  for (; pos <= t.size(); ++pos) {
    bool end = pos == t.size();
    char c = end ? '+' : t[pos];
    if (!end && (c == '(' || c == '[' || c == '{')) ++depth;
    if (!end && (c == ')' || c == ']' || c == '}')) --depth;
    if ((c == '+' || c == '-') && depth == 0) {
      if (!strip(cur).empty()) terms.emplace_back(sign, strip(cur));
      sign = c == '-' ? -1 : 1;
      cur.clear();
    } else {
      cur += c;
    }
  }
  for (const auto& [sg, body] : terms) {
    // optional leading rational coefficient ending at the first '*'
    // before a factor letter
    GaussianRat coeff(sg);
    std::string word = body;
    size_t fac = body.find_first_of("use");
    if (fac != std::string::npos && fac > 0) {
      std::string head = strip(body.substr(0, fac));
      if (!head.empty() && head.back() == '*') head.pop_back();
      head = strip(head);
      if (!head.empty()) coeff = coeff * parse_rational_coeff(head);
      word = body.substr(fac);
    } else if (fac == std::string::npos) {
      // pure scalar term
      coeff = coeff * parse_rational_coeff(body);
      word = "1";
    }
    out = alg_add(out, alg_scale(coeff, parse_word(sys, word)));
  }
  return out;
}

DiagonalElement parse_diag_expr(const DynamicalSystem& sys, const std::string& text) {
  AlgebraElement a = parse_alg_expr(sys, text);
  try {
    DiagonalElement d = expectation_E2(sys, a);
    if (alg_from_diagonal(sys, d) != a) throw std::domain_error("off-diagonal core term");
    return d;
  } catch (const std::domain_error&) {
    throw ParseError("expression is not a combination of projections e(g,p)");
  }
}

}  // namespace iads
