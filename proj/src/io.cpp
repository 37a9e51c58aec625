#include "algtheta/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "algtheta/error.hpp"

namespace algtheta {

namespace {

using Json = nlohmann::ordered_json;

Rat rat_of(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InputError(where + ": expected a rational string \"p/q\"");
}

UPoly upoly_of(const Json& j, const std::string& where) {
  if (!j.is_array()) return UPoly::constant(rat_of(j, where));
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_of(x, where));
  return UPoly(std::move(c));
}

Json json_of(const UPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (p.is_zero()) a.push_back("0");
  return a;
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("curve spec: missing field \"") + key + "\"");
  return j.at(key);
}

Parametrization parametrization_of(const Json& j) {
  if (!j.is_object()) throw InputError("parametrization: expected an object");
  Parametrization p;
  const Json& comps = field(j, "components");
  if (!comps.is_array()) throw InputError("parametrization: components must be a list");
  for (const auto& c : comps) p.components.push_back(upoly_of(c, "parametrization"));
  if (j.contains("degree")) {
    if (!j.at("degree").is_number_integer()) throw InputError("parametrization: degree must be an integer");
    p.degree = j.at("degree").get<int>();
  } else {
    p.degree = -1;
    for (const auto& c : p.components) p.degree = std::max(p.degree, c.degree());
  }
  return p;
}

std::string joined(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Pretty printer that keeps lists of scalars and lists of such lists on one line.
bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); })))
      return false;
  return true;
}

void write(std::string& out, const Json& j, int indent) {
  const std::string pad(2 * indent + 2, ' ');
  if (j.is_object()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      write(out, it.value(), indent + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * indent, ' ') + "}";
  } else if (j.is_array() && !flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(out, j[i], indent + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(2 * indent, ' ') + "]";
  } else {
    out += j.dump(-1, ' ', false);
  }
}

std::string pretty(const Json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

std::string point_list(const std::vector<BranchPoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + pts[i].to_string();
  return s + "}";
}

}  // namespace

CurveSpec parse_curve_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("curve spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("curve spec: expected an object");
  try {
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw InputError("curve spec: kind must be a string");
    const std::string k = kind.get<std::string>();
    CurveSpec c;
    if (k == "monomial") {
      const Json& g = field(j, "generators");
      if (!g.is_array() || g.empty()) throw InputError("curve spec: generators must be a nonempty list");
      std::vector<int> gens;
      for (const auto& x : g) {
        if (!x.is_number_integer()) throw InputError("curve spec: generators must be integers");
        gens.push_back(x.get<int>());
      }
      c = monomial_curve(NumericalSemigroup::from_generators(gens));
    } else if (k == "explicit" || k == "parametrized") {
      if (k == "explicit") {
        const Json& d = field(j, "differentials");
        if (!d.is_array()) throw InputError("curve spec: differentials must be a list");
        for (const auto& f : d) {
          if (!f.is_array() || f.size() != 2) throw InputError("curve spec: each differential is [numerator, denominator]");
          const UPoly den = upoly_of(f[1], "differential denominator");
          if (den.is_zero()) throw InputError("curve spec: zero denominator");
          c.differentials.emplace_back(upoly_of(f[0], "differential numerator"), den);
        }
      } else if (!j.contains("parametrization")) {
        throw InputError("curve spec: missing field \"parametrization\"");
      }
      if (j.contains("singular_points")) {
        const Json& s = j.at("singular_points");
        if (!s.is_array()) throw InputError("curve spec: singular_points must be a list");
        for (const auto& p : s) {
          if (!p.is_string()) throw InputError("curve spec: singular points are strings");
          c.singular_points.push_back(BranchPoint::parse(p.get<std::string>()));
        }
      } else if (k == "explicit") {
        throw InputError("curve spec: missing field \"singular_points\"");
      }
      if (j.contains("base_point")) c.base_point = rat_of(j.at("base_point"), "base_point");
      if (j.contains("parametrization")) c.parametrization = parametrization_of(j.at("parametrization"));
    } else {
      throw InputError("curve spec: unknown kind \"" + k + "\"");
    }
    if (j.contains("name")) {
      if (!j.at("name").is_string()) throw InputError("curve spec: name must be a string");
      c.name = j.at("name").get<std::string>();
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("curve spec: ") + e.what());
  }
}

CurveSpec load_curve_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_spec(ss.str());
}

std::string serialize_curve_spec(const CurveSpec& c) {
  Json j;
  if (c.semigroup) {
    j["kind"] = "monomial";
    j["generators"] = c.semigroup->generators();
    if (c.name != c.semigroup->to_string()) j["name"] = c.name;
    return pretty(j);
  }
  j["kind"] = c.differentials.empty() ? "parametrized" : "explicit";
  if (!c.name.empty()) j["name"] = c.name;
  if (!c.differentials.empty()) {
    Json d = Json::array();
    for (const auto& f : c.differentials) d.push_back(Json::array({json_of(f.numerator()), json_of(f.denominator())}));
    j["differentials"] = d;
  }
  if (!c.differentials.empty() || !c.singular_points.empty()) {
    Json s = Json::array();
    for (const auto& p : c.singular_points) s.push_back(p.to_string());
    j["singular_points"] = s;
  }
  j["base_point"] = to_string(c.base_point);
  if (c.parametrization) {
    Json comps = Json::array();
    for (const auto& p : c.parametrization->components) comps.push_back(json_of(p));
    j["parametrization"] = {{"components", comps}, {"degree", c.parametrization->degree}};
  }
  return pretty(j);
}

CurveSpec complete_curve(const CurveSpec& c0) {
  if (!c0.differentials.empty() || !c0.parametrization) return c0;
  CurveSpec c = c0;
  if (c.singular_points.empty()) {
    const CurveSpec moved = normalize_base_point(c);
    const Classification cls = classify_algebraic(*moved.parametrization);
    for (const auto& p : cls.cusps)
      c.singular_points.push_back(p.infinite ? p : BranchPoint::at(p.value + c.base_point));
  }
  if (c.singular_points.empty()) return c;
  const CurveSpec moved = normalize_base_point(c);
  // Local rings only: differentials are filled in below.
  std::vector<SingularityData> sing;
  for (const auto& p : moved.singular_points) {
    const LocalRing ring = local_ring(*moved.parametrization, p);
    if (!ring.semigroup.is_gorenstein())
      throw RejectedCurve("singularity at u = " + p.to_string() + " has non-symmetric value semigroup " +
                          ring.semigroup.to_string());
    sing.push_back(SingularityData{p, ring.semigroup, {}});
  }
  std::vector<RationalFunction> basis = canonical_basis(*moved.parametrization, sing);
  if (c.base_point != 0) {
    const RationalFunction back(UPoly({-c.base_point, Rat(1)}));
    for (auto& f : basis) f = f.compose(back);
  }
  c.differentials = std::move(basis);
  return c;
}

void Report::add(const std::string& key, const std::string& value) {
  text_ += std::string(2 * depth_, ' ') + key + ":" + (value.empty() ? "" : " " + value) + "\n";
}

void Report::begin(const std::string& section) {
  add(section, std::string());
  ++depth_;
}

void Report::end() {
  if (depth_ > 0) --depth_;
}

void report_classification(Report& r, const Classification& c) {
  r.begin("classification");
  r.add("algebraic", c.algebraic);
  r.add("arithmetic_genus", static_cast<long>(c.arithmetic_genus));
  r.add("cusps", point_list(c.cusps));
  r.add("cusp_delta", static_cast<long>(c.cusp_delta));
  for (const auto& f : c.multibranch) r.add("multibranch_fiber", point_list(f.points));
  r.end();
}

void report_singularities(Report& r, const std::vector<SingularityData>& sing) {
  r.begin("singularities");
  for (const auto& s : sing) {
    r.begin("point " + s.point.to_string());
    r.add("semigroup", s.semigroup.to_string());
    r.add("gaps", "{" + joined(s.gaps()) + "}");
    r.add("delta", static_cast<long>(s.delta()));
    r.add("partition", s.lambda.to_string());
    r.end();
  }
  r.end();
}

void report_tau(Report& r, const TauPolynomial& t) {
  r.begin("tau");
  r.add("exact", t.exact);
  r.add("wmax", static_cast<long>(t.wmax));
  r.add("plucker", t.table_string());
  r.add("polynomial", t.polynomial.to_string());
  r.end();
}

void report_theta(Report& r, const ThetaPolynomial& th) {
  r.begin("theta");
  r.add("provenance", th.provenance == Provenance::FromTau ? "from_tau" : "implicitized");
  std::string vars;
  for (std::size_t i = 0; i < th.variables.size(); ++i) {
    const auto& v = th.variables[i];
    vars += (i ? ", " : "") + v.name + "(point " + std::to_string(v.group + 1) + ", gap " + std::to_string(v.gap) + ")";
  }
  r.add("variables", vars);
  if (th.tau_scalar != 0) r.add("tau_scalar", to_string(th.tau_scalar));
  r.add("polynomial", th.polynomial.to_string());
  r.end();
}

void report_degree(Report& r, const DegreeReport& d) {
  r.begin("degree");
  r.add("total", static_cast<long>(d.total_degree));
  r.add("group_degrees", "{" + joined(d.group_degrees) + "}");
  r.add("leading_monomial", d.leading_monomial_text);
  r.add("leading_unique", d.leading_unique);
  r.add("bound", static_cast<long>(d.bound));
  r.add("bound_attained", d.bound_attained);
  r.add("matches_lambda", d.matches_lambda);
  r.end();
}

void report_relation(Report& r, const RelationReport& rel) {
  r.begin("relation");
  r.add("ok", rel.ok);
  r.add("exact", rel.exact);
  r.add("order", static_cast<long>(rel.order));
  r.add("scalar", to_string(rel.scalar));
  std::string e;
  for (std::size_t i = 0; i < rel.exponents.size(); ++i) {
    const auto& [t, c] = rel.exponents[i];
    e += (i ? " + " : "") + std::to_string(c) + "*(" + to_string(t) + ")^i";
  }
  r.add("exp_factor", e.empty() ? "1" : "exp(sum_i (" + e + ") x_i)");
  if (rel.first_bad_weight >= 0) r.add("first_bad_weight", static_cast<long>(rel.first_bad_weight));
  r.end();
}

void report_kp(Report& r, const std::string& section, const std::vector<KPResidualReport>& reps) {
  r.begin(section);
  bool all = true;
  for (const auto& k : reps) all = all && k.verdict;
  r.add("verdict", all);
  for (const auto& k : reps) {
    std::size_t nonzero = 0;
    for (const auto& c : k.residual) nonzero += c != 0;
    r.add("base (" + to_string(k.base[0]) + "," + to_string(k.base[1]) + "," + to_string(k.base[2]) + ")",
          std::string(k.verdict ? "pass" : "fail") + ", N=" + std::to_string(k.order) + ", " +
              std::to_string(k.residual.size()) + " coefficients, " + std::to_string(nonzero) + " nonzero");
  }
  r.end();
}

}  // namespace algtheta
