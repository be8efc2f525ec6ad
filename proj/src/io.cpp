#include "realrank/io.hpp"

#include <sstream>

namespace realrank::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorCode::Parse, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json modes_to_json(const ModeSet& m) {
  json a = json::array();
  for (std::size_t v : m) a.push_back(v + 1);
  return a;
}

json complex_vector(const CVector& v) {
  json re = json::array(), im = json::array();
  for (const cplx& z : v) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return {{"re", re}, {"im", im}};
}

json real_vector(const std::vector<double>& v) { return json(v); }

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(static_cast<long long>(j.get<unsigned long long>()));
  if (j.is_number_float()) return Rational::from_double(j.get<double>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  parse_fail("expected a number or a \"num/den\" string, got " + j.dump());
}

double double_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return Rational::parse(j.get<std::string>()).to_double();
  parse_fail("expected a number, got " + j.dump());
}

json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  return r.to_string();
}

// ---------------------------------------------------------------------------

Tensor tensor_from_json(const json& j) {
  const json& shape = require(j, "shape");
  const json& entries = require(j, "entries");
  if (!shape.is_array() || !entries.is_array()) parse_fail("\"shape\" and \"entries\" must be arrays");
  std::vector<std::size_t> dims;
  for (const auto& v : shape) {
    if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail("shape entries must be nonnegative integers");
    dims.push_back(v.get<std::size_t>());
  }
  std::vector<double> e;
  for (const auto& v : entries) e.push_back(double_from_json(v));
  return Tensor(Shape(dims), std::move(e));
}

json tensor_to_json(const Tensor& t) { return {{"shape", t.shape().dims()}, {"entries", t.entries()}}; }

SymTensorCoords sym_from_json(const json& j) {
  SymTensorCoords f;
  f.n = require(j, "n").get<unsigned>();
  f.d = require(j, "d").get<unsigned>();
  if (j.contains("x")) {
    if (f.n != 2) parse_fail("\"x\" lists are only accepted for n = 2");
    std::vector<double> x;
    for (const auto& v : j.at("x")) x.push_back(double_from_json(v));
    if (x.size() != f.d + 1) parse_fail("\"x\" needs d+1 entries");
    return SymTensorCoords::binary(x);
  }
  const json& coeffs = require(j, "coeffs");
  if (!coeffs.is_object()) parse_fail("\"coeffs\" must map \"u1,...,un\" to numbers");
  for (const auto& u : SymTensorCoords::multidegrees(f.n, f.d)) f.coeffs[u] = 0.0;
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    Exponent u;
    std::stringstream ss(it.key());
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        u.push_back(static_cast<unsigned>(std::stoul(part)));
      } catch (const std::exception&) {
        parse_fail("bad multidegree key \"" + it.key() + "\"");
      }
    }
    unsigned total = 0;
    for (unsigned v : u) total += v;
    if (u.size() != f.n || total != f.d) parse_fail("multidegree \"" + it.key() + "\" does not have n parts summing to d");
    f.coeffs[u] = double_from_json(it.value());
  }
  f.validate();
  return f;
}

json sym_to_json(const SymTensorCoords& f) {
  json c = json::object();
  for (const auto& [u, v] : f.coeffs) {
    std::string key;
    for (std::size_t i = 0; i < u.size(); ++i) key += (i ? "," : "") + std::to_string(u[i]);
    c[key] = v;
  }
  return {{"n", f.n}, {"d", f.d}, {"coeffs", c}};
}

json selector_to_json(const SubBlockSelector& s) {
  json pairs = json::array();
  for (const auto& p : s.index_pairs) pairs.push_back({p[0], p[1]});
  json free = json::array();
  for (std::size_t m : s.free_modes) free.push_back(m + 1);
  return {{"free_modes", free}, {"index_pairs", pairs}, {"fixed_indices", s.fixed_indices}, {"label", s.to_string()}};
}

json hyperdet_report_to_json(const HyperdetReport& r, bool include_values) {
  json j = {{"count", r.values.size()},
            {"num_positive", r.num_positive},
            {"num_zero", r.num_zero},
            {"num_negative", r.num_negative},
            {"zero_tol", r.zero_tol}};
  if (!r.values.empty()) {
    j["min_value"] = r.min_value;
    j["argmin"] = selector_to_json(r.argmin);
    j["max_value"] = r.max_value;
    j["argmax"] = selector_to_json(r.argmax);
  }
  if (include_values) {
    json v = json::array();
    for (const auto& e : r.values) v.push_back({{"selector", e.selector.to_string()}, {"value", e.value}});
    j["values"] = v;
  }
  return j;
}

json certificate_to_json(const Certificate& c) {
  json ranks = json::array();
  for (const auto& [modes, r] : c.flattening_ranks) ranks.push_back({{"row_modes", modes_to_json(modes)}, {"rank", r}});
  json j = {{"verdict", verdict_name(c.verdict)},
            {"method", c.method},
            {"input_shape", c.input_shape.dims()},
            {"shape", c.shape.dims()},
            {"kept_modes", modes_to_json(c.kept_modes)},
            {"flattening_ranks", ranks},
            {"max_flattening_rank", c.max_flattening_rank},
            {"merged_flattenings_checked", c.merged_flattenings_checked},
            {"has_hyperdets", c.has_hyperdets},
            {"zero_probe", zero_probe_name(c.zero_probe)},
            {"tolerances", {{"rank", c.tolerances.rank}, {"hyperdet", c.tolerances.hyperdet}}}};
  if (c.has_hyperdets) j["hyperdets"] = hyperdet_report_to_json(c.hyperdet_report);
  return j;
}

json decomposition_to_json(const Rank2Decomposition& d) {
  json j = {{"kind", decomposition_kind_name(d.kind)},
            {"shape", d.shape.dims()},
            {"residual", d.residual},
            {"pencil_gap", d.pencil_gap},
            {"pencil_discriminant", d.pencil_discriminant}};
  if (d.kind == DecompositionKind::Tangential) {
    j["x"] = d.tangent_x;
    j["y"] = d.tangent_y;
    return j;
  }
  json terms = json::array();
  for (const auto& t : d.terms) {
    json factors = json::array();
    if (d.kind == DecompositionKind::RealPair) {
      for (const auto& f : t.real_factors()) factors.push_back(real_vector(f));
      terms.push_back({{"weight", t.weight.real()}, {"factors", factors}});
    } else {
      for (const auto& f : t.factors) factors.push_back(complex_vector(f));
      terms.push_back({{"weight", {{"re", t.weight.real()}, {"im", t.weight.imag()}}}, {"factors", factors}});
    }
  }
  j["terms"] = terms;
  if (d.kind == DecompositionKind::ConjugatePair) j["note"] = "tensor = 2*Re(term)";
  return j;
}

json best_rank_one_to_json(const BestRankOne& b) {
  json factors = json::array();
  for (const auto& f : b.term.real_factors()) factors.push_back(real_vector(f));
  return {{"weight", b.term.weight.real()},
          {"factors", factors},
          {"distance", b.distance},
          {"iterations", b.iterations},
          {"stationarity", b.stationarity},
          {"history", b.history}};
}

json quadrics_to_json(const std::vector<QuadricGenerator>& q) {
  json a = json::array();
  for (const auto& g : q)
    a.push_back({{"label", g.tableau.label()},
                 {"mu", g.tableau.mu},
                 {"nu", g.tableau.nu},
                 {"k", g.tableau.k},
                 {"poly", g.polynomial.to_string()}});
  return a;
}

json table1_to_json() {
  json rows = json::array();
  for (unsigned n = 2; n <= 5; ++n) {
    json row = json::array();
    for (unsigned d = 4; d <= 10; ++d) row.push_back(quadric_count(n, d).get_si());
    rows.push_back({{"n", n}, {"counts", row}});
  }
  return {{"d", {4, 5, 6, 7, 8, 9, 10}}, {"rows", rows}};
}

json binary_verdict_to_json(const BinaryFormVerdict& v) {
  json j = {{"d", v.d},
            {"exact", v.exact},
            {"verdict", verdict_name(v.verdict)},
            {"catalecticant_rank", v.catalecticant_rank},
            {"hankel_rank", v.hankel_rank},
            {"d_values", v.d_values},
            {"zero_probe", zero_probe_name(v.zero_probe)}};
  if (v.d_exact) {
    json e = json::array();
    for (const auto& r : *v.d_exact) e.push_back(rational_to_json(r));
    j["d_values_exact"] = e;
  }
  j["strata"] = v.strata ? json(*v.strata) : json(nullptr);
  return j;
}

json ideal_report_to_json(const IdealReport& r) {
  auto list = [](const std::vector<LabeledPoly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back({{"label", p.label}, {"poly", p.poly.to_string()}});
    return a;
  };
  return {{"d", r.d}, {"curve_ideal", list(r.curve_ideal)}, {"secant_ideal", list(r.secant_ideal)},
          {"tangential_ideal", list(r.tangential_ideal)}};
}

// ---------------------------------------------------------------------------

CurveParam curve_from_json(const json& j) {
  CurveParam c;
  c.d = require(j, "d").get<unsigned>();
  const json& f = require(j, "F");
  if (!f.is_array() || f.size() != 4) parse_fail("\"F\" must list four coefficient arrays");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!f[i].is_array()) parse_fail("\"F\" entries must be arrays");
    for (const auto& v : f[i]) c.F[i].push_back(rational_from_json(v));
  }
  c.validate();
  return c;
}

json curve_to_json(const CurveParam& c) {
  json f = json::array();
  for (const auto& form : c.F) {
    json a = json::array();
    for (const auto& v : form) a.push_back(rational_to_json(v));
    f.push_back(a);
  }
  return {{"d", c.d}, {"F", f}};
}

json plucker_to_json(const PluckerMap& pm) {
  json j = json::object();
  for (std::size_t i = 0; i < 6; ++i) j[PluckerMap::kNames[i]] = pm.p[i].to_string();
  return {{"d", pm.d}, {"variables", {"a", "b", "c"}}, {"plucker", j}, {"relation_vanishes", pm.relation().is_zero()}};
}

PathSpec path_from_json(const json& j) {
  PathSpec p;
  const json& path = require(j, "path");
  if (!path.is_array() || path.size() != 4) parse_fail("\"path\" must hold four [constant, slope] pairs");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!path[i].is_array() || path[i].size() != 2) parse_fail("each path row must be [constant, slope]");
    p.path.coeffs[i] = {rational_from_json(path[i][0]), rational_from_json(path[i][1])};
  }
  if (j.contains("interval")) {
    const json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) parse_fail("\"interval\" must be [t0, t1]");
    p.path.t0 = double_from_json(iv[0]);
    p.path.t1 = double_from_json(iv[1]);
  }
  if (j.contains("samples")) p.samples = j.at("samples").get<std::size_t>();
  if (j.contains("fixtures")) {
    for (const auto& f : j.at("fixtures")) {
      const std::string kind = require(f, "kind").get<std::string>();
      if (kind != "TANGENTIAL" && kind != "EDGE") parse_fail("fixture kind must be TANGENTIAL or EDGE");
      p.fixtures.push_back({kind, MultiPoly::parse(require(f, "poly").get<std::string>(), {"w", "x", "y", "z"})});
    }
  }
  return p;
}

json path_to_json(const PathSpec& p) {
  json rows = json::array();
  for (const auto& r : p.path.coeffs) rows.push_back({rational_to_json(r[0]), rational_to_json(r[1])});
  json fx = json::array();
  for (const auto& f : p.fixtures) fx.push_back({{"kind", f.kind}, {"poly", f.poly.to_string()}});
  return {{"path", rows}, {"interval", {p.path.t0, p.path.t1}}, {"samples", p.samples}, {"fixtures", fx}};
}

json secant_report_to_json(const SecantReport& r) {
  json sols = json::array();
  for (const auto& s : r.real) {
    json roots = json::array(), pts = json::array();
    for (int k = 0; k < 2; ++k) {
      roots.push_back(complex_vector({s.roots[k][0], s.roots[k][1]}));
      pts.push_back(complex_vector(CVector(s.curve_points[k].begin(), s.curve_points[k].end())));
    }
    sols.push_back({{"abc", s.abc},
                    {"discriminant", s.discriminant},
                    {"contact", secant_contact_name(s.contact)},
                    {"multiplicity", s.multiplicity},
                    {"residual", s.residual},
                    {"roots", roots},
                    {"curve_points", pts}});
  }
  return {{"total", r.total}, {"nonreal", r.nonreal}, {"real", sols}};
}

json classification_to_json(const PointClassification& c) {
  return {{"class", point_class_name(c.cls)},
          {"real_lines", c.real_lines},
          {"real_meeting", c.real_meeting},
          {"secants", secant_report_to_json(c.evidence)}};
}

json path_report_to_json(const PathReport& r) {
  json samples = json::array(), transitions = json::array(), segments = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"t", s.t},
                       {"class", point_class_name(s.cls)},
                       {"real_lines", s.real_lines},
                       {"real_meeting", s.real_meeting},
                       {"total", s.total},
                       {"min_discriminant", s.min_discriminant},
                       {"max_discriminant", s.max_discriminant}});
  for (const auto& t : r.transitions)
    transitions.push_back({{"t", t.t},
                           {"kind", transition_kind_name(t.kind)},
                           {"rank_before", t.rank_before},
                           {"rank_after", t.rank_after},
                           {"surface", t.surface},
                           {"surface_residual", t.surface_residual},
                           {"bracket", {t.bracket_lo, t.bracket_hi}}});
  for (const auto& s : r.segments)
    segments.push_back({{"interval", {s.lo, s.hi}},
                        {"class", point_class_name(s.cls)},
                        {"real_lines", s.real_lines},
                        {"real_meeting", s.real_meeting}});
  return {{"transitions", transitions}, {"segments", segments}, {"samples", samples}};
}

}  // namespace realrank::io
