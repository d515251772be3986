#include "toricres/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "toricres/errors.hpp"

using json = nlohmann::json;

namespace toricres {

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ValidationError(origin + ": " + what);
}

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(const std::string& text, const std::string& origin) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    fail(origin, "empty input file");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin + ":" + std::to_string(line_of_offset(text, e.byte)),
         std::string("JSON parse error: ") + e.what());
  }
}

std::vector<Integer> read_int_vector(const json& j, const std::string& origin,
                                     const std::string& where) {
  if (!j.is_array()) fail(origin, where + " must be an array of integers");
  std::vector<Integer> out;
  for (const auto& v : j) {
    if (v.is_number_integer())
      out.emplace_back(static_cast<long>(v.get<long long>()));
    else if (v.is_string())
      out.emplace_back(v.get<std::string>());
    else
      fail(origin, where + " must contain integers");
  }
  return out;
}

Exponent read_exponent(const json& j, const std::string& origin, const std::string& where) {
  if (!j.is_array()) fail(origin, where + " must be an array of nonnegative integers");
  Exponent out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(origin, where + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  return true;
}

}  // namespace

std::string Instance::atom_name(const Atom& a) const {
  auto it = name_by_atom.find(a);
  return it != name_by_atom.end() ? it->second : default_atom_name(a);
}

AtomNamer Instance::namer() const {
  return [this](const Atom& a) { return atom_name(a); };
}

std::vector<Atom> Instance::atoms() const {
  std::vector<Atom> out;
  out.reserve(name_by_atom.size());
  for (const auto& [a, n] : name_by_atom) out.push_back(a);
  return out;  // map iteration is already sorted
}

AtomAssignment Instance::random_specialization(std::uint64_t seed) const {
  SpecRng rng(seed);
  AtomAssignment values;
  for (const Atom& a : atoms()) values.emplace(a, rng.draw());
  return values;
}

const Flag& Instance::flag(int index) const {
  if (flags.empty()) throw ValidationError("instance declares no flags");
  if (index < 0 || index >= static_cast<int>(flags.size()))
    throw ValidationError("flag index " + std::to_string(index) + " out of range (instance has " +
                          std::to_string(flags.size()) + ")");
  return flags[static_cast<std::size_t>(index)];
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_global_instance_text(const std::string& text) {
  json j = parse_json(text, "<input>");
  return j.is_object() && j.contains("laurent");
}

Instance parse_instance_text(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) fail(origin, "top level must be an object");
  for (const char* field : {"rays", "max_cones", "degrees", "polys"})
    if (!j.contains(field)) fail(origin, std::string("missing field '") + field + "'");

  Instance inst;
  inst.name = j.value("name", std::string{});

  std::vector<std::vector<Integer>> rays;
  for (std::size_t i = 0; i < j["rays"].size(); ++i)
    rays.push_back(read_int_vector(j["rays"][i], origin, "rays[" + std::to_string(i) + "]"));
  std::vector<std::vector<int>> cones;
  for (std::size_t i = 0; i < j["max_cones"].size(); ++i) {
    const auto& c = j["max_cones"][i];
    if (!c.is_array()) fail(origin, "max_cones[" + std::to_string(i) + "] must be an array");
    std::vector<int> cone;
    for (const auto& v : c) cone.push_back(v.get<int>());
    cones.push_back(std::move(cone));
  }
  inst.fan = Fan::create(std::move(rays), std::move(cones));
  const int s = inst.fan.num_rays();

  if (j.contains("vars")) {
    for (const auto& v : j["vars"]) inst.var_names.push_back(v.get<std::string>());
    if (static_cast<int>(inst.var_names.size()) != s)
      fail(origin, "vars must name every ray");
  } else {
    for (int i = 0; i < s; ++i) inst.var_names.push_back("x" + std::to_string(i));
  }

  for (std::size_t i = 0; i < j["degrees"].size(); ++i) {
    auto d = read_int_vector(j["degrees"][i], origin, "degrees[" + std::to_string(i) + "]");
    if (static_cast<int>(d.size()) != s)
      fail(origin, "degrees[" + std::to_string(i) + "] has wrong length");
    inst.degrees.push_back(std::move(d));
  }
  if (static_cast<int>(inst.degrees.size()) != inst.fan.dim() + 1)
    fail(origin, "expected dim+1 = " + std::to_string(inst.fan.dim() + 1) + " degrees, got " +
                     std::to_string(inst.degrees.size()));

  if (j["polys"].size() != inst.degrees.size())
    fail(origin, "polys and degrees must have the same length");
  for (std::size_t i = 0; i < j["polys"].size(); ++i) {
    const auto& jp = j["polys"][i];
    const std::string where = "polys[" + std::to_string(i) + "]";
    if (!jp.is_object() || !jp.contains("terms")) fail(origin, where + " must have 'terms'");
    auto support = inst.fan.monomial_basis(inst.degrees[i]);
    CoxPolynomial poly(s);
    for (std::size_t t = 0; t < jp["terms"].size(); ++t) {
      const auto& jt = jp["terms"][t];
      const std::string twhere = where + ".terms[" + std::to_string(t) + "]";
      Exponent e = read_exponent(jt.at("exp"), origin, twhere + ".exp");
      if (static_cast<int>(e.size()) != s) fail(origin, twhere + ".exp has wrong length");
      auto pos = std::lower_bound(support.begin(), support.end(), e, GrlexLess{});
      if (pos == support.end() || *pos != e)
        fail(origin, twhere + ": monomial " + monomial_to_string(e, inst.var_names) +
                         " is not in the basis of degrees[" + std::to_string(i) + "]");
      if (!jt.contains("coeff") || !jt.at("coeff").is_string())
        fail(origin, twhere + " needs a string 'coeff'");
      std::string coeff = jt.at("coeff").get<std::string>();
      if (looks_like_rational(coeff)) {
        poly.add_term(e, CoeffPoly(parse_rational(coeff)));
      } else {
        Atom atom{static_cast<std::int32_t>(i),
                  static_cast<std::int32_t>(pos - support.begin())};
        auto known = inst.atom_by_name.find(coeff);
        if (known != inst.atom_by_name.end())
          atom = known->second;  // reuse of a declared symbol
        else {
          inst.atom_by_name.emplace(coeff, atom);
          inst.name_by_atom.emplace(atom, coeff);
        }
        poly.add_term(e, CoeffPoly::atom(atom));
      }
    }
    if (poly.is_zero()) fail(origin, where + " is the zero polynomial");
    inst.polys.push_back(std::move(poly));
  }

  auto read_flag = [&](const json& jf, const std::string& where) {
    Flag flag;
    if (!jf.is_array()) fail(origin, where + " must be an array of ray index lists");
    for (const auto& c : jf) {
      std::vector<int> cone;
      for (const auto& v : c) cone.push_back(v.get<int>());
      std::sort(cone.begin(), cone.end());
      flag.cones.push_back(std::move(cone));
    }
    try {
      inst.fan.validate_flag(flag);
    } catch (const ValidationError& e) {
      fail(origin, where + ": " + e.what());
    }
    return flag;
  };
  if (j.contains("flag")) inst.flags.push_back(read_flag(j["flag"], "flag"));
  if (j.contains("flags"))
    for (std::size_t i = 0; i < j["flags"].size(); ++i)
      inst.flags.push_back(read_flag(j["flags"][i], "flags[" + std::to_string(i) + "]"));

  if (j.contains("h")) {
    if (j["h"].is_string())
      inst.h = parse_monomial_expr(inst, j["h"].get<std::string>());
    else
      inst.h = read_exponent(j["h"], origin, "h");
  }
  if (j.contains("P")) {
    CoxPolynomial P(s);
    for (std::size_t t = 0; t < j["P"].size(); ++t) {
      const auto& jt = j["P"][t];
      Exponent e = read_exponent(jt.at("exp"), origin, "P[" + std::to_string(t) + "].exp");
      P.add_term(e, CoeffPoly(parse_rational(jt.at("coeff").get<std::string>())));
    }
    inst.P = std::move(P);
  }
  if (j.contains("resultant_oracle")) {
    std::string o = j["resultant_oracle"].get<std::string>();
    if (o == "det_M")
      inst.oracle = ResultantOracle::DetM;
    else if (o == "coeff_det")
      inst.oracle = ResultantOracle::CoeffDet;
    else
      fail(origin, "unknown resultant_oracle '" + o + "'");
  }
  return inst;
}

Instance parse_instance_file(const std::string& path) {
  return parse_instance_text(read_text_file(path), path);
}

GlobalInstance parse_global_text(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object() || !j.contains("laurent")) fail(origin, "missing field 'laurent'");
  GlobalInstance g;
  g.name = j.value("name", std::string{});
  if (!j.contains("n")) fail(origin, "missing field 'n'");
  g.system.n = j["n"].get<int>();
  for (std::size_t i = 0; i < j["laurent"].size(); ++i) {
    const auto& jp = j["laurent"][i];
    LaurentPoly f(g.system.n);
    for (const auto& jt : jp.at("terms")) {
      LaurentExp e;
      for (const auto& v : jt.at("exp")) e.push_back(v.get<int>());
      if (static_cast<int>(e.size()) != g.system.n)
        fail(origin, "laurent[" + std::to_string(i) + "] exponent has wrong length");
      f.add_term(e, parse_rational(jt.at("coeff").get<std::string>()));
    }
    g.system.f.push_back(std::move(f));
  }
  if (j.contains("recipe")) {
    const auto& jr = j["recipe"];
    std::string type = jr.value("type", "macaulay");
    if (type == "macaulay") {
      g.recipe.kind = HomogenizeRecipe::Kind::Macaulay;
    } else if (type == "power") {
      g.recipe.kind = HomogenizeRecipe::Kind::Power;
      g.recipe.f0_power = jr.value("f0_power", 1);
      if (jr.contains("g")) g.recipe.g = read_exponent(jr["g"], origin, "recipe.g");
    } else {
      fail(origin, "unknown recipe type '" + type + "'");
    }
  }
  if (j.contains("roots")) {
    for (const auto& jr : j["roots"]) {
      std::vector<Rational> root;
      for (const auto& v : jr) root.push_back(parse_rational(v.get<std::string>()));
      g.roots.push_back(std::move(root));
    }
  }
  return g;
}

GlobalInstance parse_global_file(const std::string& path) {
  return parse_global_text(read_text_file(path), path);
}

std::string serialize_instance(const Instance& inst) {
  json j;
  if (!inst.name.empty()) j["name"] = inst.name;
  j["vars"] = inst.var_names;
  j["rays"] = json::array();
  for (const auto& ray : inst.fan.rays()) {
    json r = json::array();
    for (const auto& v : ray) r.push_back(static_cast<long long>(v.get_si()));
    j["rays"].push_back(std::move(r));
  }
  j["max_cones"] = inst.fan.max_cones();
  j["degrees"] = json::array();
  for (const auto& d : inst.degrees) {
    json r = json::array();
    for (const auto& v : d) r.push_back(static_cast<long long>(v.get_si()));
    j["degrees"].push_back(std::move(r));
  }
  j["polys"] = json::array();
  for (const auto& poly : inst.polys) {
    json terms = json::array();
    for (const auto& [e, c] : poly.terms()) {
      json jt;
      jt["exp"] = e;
      if (c.is_constant())
        jt["coeff"] = to_string(c.constant_value());
      else if (c.term_count() == 1 && c.terms().begin()->second == 1 &&
               c.terms().begin()->first.size() == 1 && c.terms().begin()->first[0].second == 1)
        jt["coeff"] = inst.atom_name(c.terms().begin()->first[0].first);
      else
        throw ValidationError("cannot serialize a compound coefficient");
      terms.push_back(std::move(jt));
    }
    j["polys"].push_back(json{{"terms", std::move(terms)}});
  }
  if (!inst.flags.empty()) {
    j["flags"] = json::array();
    for (const auto& flag : inst.flags) j["flags"].push_back(flag.cones);
  }
  if (inst.h) j["h"] = *inst.h;
  if (inst.P) {
    json terms = json::array();
    for (const auto& [e, c] : inst.P->terms())
      terms.push_back(json{{"exp", e}, {"coeff", to_string(c.constant_value())}});
    j["P"] = std::move(terms);
  }
  if (inst.oracle)
    j["resultant_oracle"] = (*inst.oracle == ResultantOracle::DetM) ? "det_M" : "coeff_det";
  return j.dump(2) + "\n";
}

namespace {

struct TermFactors {
  Rational coeff{1};
  Exponent exp;
};

TermFactors parse_term(const Instance& inst, const std::string& term) {
  TermFactors out;
  out.exp.assign(static_cast<std::size_t>(inst.fan.num_rays()), 0);
  std::size_t pos = 0;
  while (pos < term.size()) {
    std::size_t next = term.find('*', pos);
    std::string factor = term.substr(pos, next == std::string::npos ? next : next - pos);
    if (factor.empty()) throw ValidationError("empty factor in term '" + term + "'");
    if (looks_like_rational(factor)) {
      out.coeff *= parse_rational(factor);
    } else {
      std::string name = factor;
      int power = 1;
      auto caret = factor.find('^');
      if (caret != std::string::npos) {
        name = factor.substr(0, caret);
        power = std::stoi(factor.substr(caret + 1));
        if (power < 0) throw ValidationError("negative power in '" + factor + "'");
      }
      auto it = std::find(inst.var_names.begin(), inst.var_names.end(), name);
      if (it == inst.var_names.end())
        throw ValidationError("unknown variable '" + name + "'");
      out.exp[static_cast<std::size_t>(it - inst.var_names.begin())] += power;
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Exponent parse_monomial_expr(const Instance& inst, const std::string& expr) {
  TermFactors t = parse_term(inst, strip_spaces(expr));
  if (t.coeff != 1)
    throw ValidationError("expected a plain monomial, got a scaled term: '" + expr + "'");
  return t.exp;
}

CoxPolynomial parse_poly_expr(const Instance& inst, const std::string& expr) {
  std::string s = strip_spaces(expr);
  if (s.empty()) throw ValidationError("empty polynomial expression");
  CoxPolynomial out(inst.fan.num_rays());
  std::size_t pos = 0;
  int sign = 1;
  if (s[0] == '-') {
    sign = -1;
    pos = 1;
  } else if (s[0] == '+') {
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    TermFactors t = parse_term(inst, s.substr(pos, end - pos));
    out.add_term(t.exp, CoeffPoly(sign > 0 ? t.coeff : -t.coeff));
    if (end >= s.size()) break;
    sign = (s[end] == '+') ? 1 : -1;
    pos = end + 1;
  }
  return out;
}

AtomAssignment parse_assignment_text(const Instance& inst, const std::string& text) {
  json j = parse_json(text, "<spec>");
  if (!j.is_object()) throw ValidationError("specialization file must be a JSON object");
  AtomAssignment values;
  for (const auto& [key, val] : j.items()) {
    auto it = inst.atom_by_name.find(key);
    if (it == inst.atom_by_name.end())
      throw ValidationError("specialization names unknown atom '" + key + "'");
    values.emplace(it->second, parse_rational(val.get<std::string>()));
  }
  for (const Atom& a : inst.atoms())
    if (!values.count(a))
      throw ValidationError("specialization misses atom '" + inst.atom_name(a) + "'");
  return values;
}

AtomAssignment parse_assignment_file(const Instance& inst, const std::string& path) {
  return parse_assignment_text(inst, read_text_file(path));
}

Rational resultant_oracle_value(const Instance& inst, const AtomAssignment& spec) {
  if (!inst.oracle) throw ValidationError("instance declares no resultant oracle");
  if (*inst.oracle == ResultantOracle::DetM) {
    MacaulayMatrix M = assemble_matrix(inst.fan, inst.polys, inst.degrees, inst.flag(0));
    if (M.rows() != M.cols())
      throw ValidationError("det_M oracle needs a square Macaulay matrix");
    return bareiss_det(M.specialize(spec));
  }
  // CoeffDet: shared support of size dim+1
  const int n = inst.fan.dim();
  auto support = inst.fan.monomial_basis(inst.degrees[0]);
  if (static_cast<int>(support.size()) != n + 1)
    throw ValidationError("coeff_det oracle needs a support of size dim+1");
  RatMatrix D(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int jx = 0; jx <= n; ++jx)
      D(i, jx) = inst.polys[static_cast<std::size_t>(i)]
                     .coefficient(support[static_cast<std::size_t>(jx)])
                     .evaluate(spec);
  return bareiss_det(D);
}

}  // namespace toricres
