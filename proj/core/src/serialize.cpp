#include "maninlab/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "maninlab/error.hpp"

namespace maninlab {
namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed ") + what + ": " + e.what());
  }
}

Integer integer_from(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw Error(ErrorKind::parse_error, "expected an integer as decimal string, got " + j.dump());
}

Json integers_to_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

IntVector integers_from(const Json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

}  // namespace

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).get_str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& e = j.at("entries");
    if (e.size() != rows * cols) throw Error(ErrorKind::parse_error, "matrix entry count does not match its shape");
    return IntMatrix(rows, cols, integers_from(e));
  });
}

Json to_json(const FinAbGroup& g) { return {{"relations", to_json(g.relations())}}; }

FinAbGroup group_from_json(const Json& j) {
  return guarded("group", [&] { return FinAbGroup(matrix_from_json(j.at("relations"))); });
}

Json to_json(const InvariantFactors& f) {
  return {{"factors", integers_to_json(f.factors)}, {"free_rank", f.free_rank}};
}

InvariantFactors invariants_from_json(const Json& j) {
  return guarded("invariant factors", [&] {
    return InvariantFactors{integers_from(j.at("factors")), j.at("free_rank").get<std::size_t>()};
  });
}

Json to_json(const PairDescriptor& p) {
  Json galois = Json::array();
  for (const auto& g : p.galois) galois.push_back({{"on_H", to_json(g.on_H)}, {"on_G", to_json(g.on_G)}});
  Json j = {{"name", p.name},
            {"pi1_H", to_json(p.pi1_H)},
            {"pi1_G", to_json(p.pi1_G)},
            {"embedding", to_json(p.embedding)},
            {"galois", galois}};
  if (p.expected_finite) j["expected_finite"] = *p.expected_finite;
  return j;
}

PairDescriptor pair_from_json(const Json& j) {
  return guarded("pair", [&] {
    PairDescriptor p;
    p.name = j.at("name").get<std::string>();
    p.pi1_H = group_from_json(j.at("pi1_H"));
    p.pi1_G = group_from_json(j.at("pi1_G"));
    p.embedding = matrix_from_json(j.at("embedding"));
    for (const auto& g : j.at("galois")) p.galois.push_back({matrix_from_json(g.at("on_H")), matrix_from_json(g.at("on_G"))});
    if (j.contains("expected_finite")) p.expected_finite = j.at("expected_finite").get<bool>();
    validate(p);
    return p;
  });
}

Json catalog_to_json(std::span<const PairDescriptor> pairs) {
  Json a = Json::array();
  for (const auto& p : pairs) a.push_back(to_json(p));
  return a;
}

std::vector<PairDescriptor> catalog_from_json(const Json& j) {
  return guarded("catalog", [&] {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "catalog must be a JSON array");
    std::vector<PairDescriptor> out;
    for (const auto& p : j) out.push_back(pair_from_json(p));
    return out;
  });
}

Json to_json(const Verdict& v) {
  Json j = {{"finite", v.finite}};
  if (v.witness_generator) {
    j["witness"] = {{"generator", *v.witness_generator},
                    {"subgroup", v.witness_subgroup},
                    {"element", integers_to_json(v.kernel_element)}};
  }
  return j;
}

Verdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    Verdict v;
    v.finite = j.at("finite").get<bool>();
    if (j.contains("witness")) {
      const auto& w = j.at("witness");
      v.witness_generator = w.at("generator").get<std::size_t>();
      v.witness_subgroup = w.at("subgroup").get<std::vector<std::size_t>>();
      v.kernel_element = integers_from(w.at("element"));
    }
    return v;
  });
}

Json to_json(const CatalogReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x = {{"name", e.name}, {"computed", e.computed_finite}};
    if (e.expected_finite) x["expected"] = *e.expected_finite;
    if (e.verdict.witness_generator) x["witness"] = to_json(e.verdict)["witness"];
    entries.push_back(x);
  }
  return {{"entries", entries}, {"total", r.entries.size()}, {"mismatches", r.mismatches}};
}

CatalogReport report_from_json(const Json& j) {
  return guarded("catalog report", [&] {
    CatalogReport r;
    for (const auto& x : j.at("entries")) {
      CatalogEntryReport e;
      e.name = x.at("name").get<std::string>();
      e.computed_finite = x.at("computed").get<bool>();
      if (x.contains("expected")) e.expected_finite = x.at("expected").get<bool>();
      Json v = {{"finite", e.computed_finite}};
      if (x.contains("witness")) v["witness"] = x.at("witness");
      e.verdict = verdict_from_json(v);
      r.entries.push_back(std::move(e));
    }
    r.mismatches = j.at("mismatches").get<std::size_t>();
    return r;
  });
}

Json to_json(const AffineDiagramChoice& c) {
  Json j = {{"type", std::string(1, c.rs.type())},
            {"rank", c.rs.rank()},
            {"vertex", c.vertex},
            {"twist", std::string(to_string(c.twist))}};
  if (c.labeling == Labeling::long_first) j["labeling"] = "long_first";
  return j;
}

AffineDiagramChoice choice_from_json(const Json& j) {
  return guarded("diagram choice", [&] {
    const auto type = j.at("type").get<std::string>();
    if (type.size() != 1) throw Error(ErrorKind::parse_error, "type must be a single letter");
    Labeling lab = Labeling::bourbaki;
    if (j.contains("labeling")) {
      const auto s = j.at("labeling").get<std::string>();
      if (s == "long_first") lab = Labeling::long_first;
      else if (s != "bourbaki") throw Error(ErrorKind::parse_error, "unknown labeling '" + s + "'");
    }
    return make_choice(type[0], j.at("rank").get<int>(), j.at("vertex").get<std::size_t>(),
                       parse_twist(j.at("twist").get<std::string>()), lab);
  });
}

Json to_json(const KacResult& r) {
  return {{"verdict", std::string(to_string(r.verdict))},
          {"family", r.family.label()},
          {"series", r.family.series},
          {"p", r.family.p},
          {"q", r.family.q},
          {"subgroup", r.subgroup},
          {"double_edge", r.double_edge},
          {"short_vertex", r.short_vertex}};
}

KacResult kac_result_from_json(const Json& j) {
  return guarded("kac result", [&] {
    KacResult r;
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.family = {j.at("series").get<std::string>(), j.at("p").get<int>(), j.at("q").get<int>()};
    r.subgroup = j.at("subgroup").get<std::string>();
    r.double_edge = j.at("double_edge").get<bool>();
    r.short_vertex = j.at("short_vertex").get<bool>();
    return r;
  });
}

Json to_json(const WeightInRootBasis& w) {
  Json a = Json::array();
  for (const auto& q : w.coefficients) a.push_back(format_rational(q));
  return {{"coefficients", a}};
}

WeightInRootBasis weight_from_json(const Json& j) {
  return guarded("weight", [&] {
    WeightInRootBasis w;
    const Json& arr = j.is_array() ? j : j.at("coefficients");
    for (const auto& x : arr) w.coefficients.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(integer_from(x)));
    return w;
  });
}

Json to_json(const DivisorData& d) {
  Json j = {{"m", integers_to_json(d.m)}, {"n", integers_to_json(d.n)}};
  if (!d.orbits.empty()) j["orbits"] = d.orbits;
  return j;
}

DivisorData divisor_data_from_json(const Json& j) {
  return guarded("divisor data", [&] {
    DivisorData d;
    d.m = integers_from(j.at("m"));
    d.n = integers_from(j.at("n"));
    if (j.contains("orbits")) d.orbits = j.at("orbits").get<OrbitPartition>();
    validate(d);
    return d;
  });
}

Json to_json(const ExponentPair& e) {
  return {{"a", format_rational(e.a)}, {"a_decimal", e.a.get_d()}, {"b", e.b}};
}

ExponentPair exponents_from_json(const Json& j) {
  return guarded("exponents", [&] {
    return ExponentPair{parse_rational(j.at("a").get<std::string>()), j.at("b").get<std::size_t>()};
  });
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"c", t.coeff.get_str()}, {"e", t.exponents}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const auto nvars = j.at("nvars").get<std::size_t>();
    std::vector<Monomial> terms;
    for (const auto& t : j.at("terms")) {
      Monomial m{integer_from(t.at("c")), t.at("e").get<std::vector<unsigned>>()};
      if (m.exponents.size() != nvars) throw Error(ErrorKind::parse_error, "monomial exponent length differs from nvars");
      terms.push_back(std::move(m));
    }
    return Polynomial(nvars, std::move(terms));
  });
}

Json to_json(const VarietySpec& v) {
  Json eqs = Json::array(), ineqs = Json::array();
  for (const auto& p : v.equations) eqs.push_back(to_json(p));
  for (const auto& p : v.inequations) ineqs.push_back(to_json(p));
  Json j = {{"name", v.name},
            {"description", v.description},
            {"ambient_dim", v.ambient_dim},
            {"equations", eqs},
            {"inequations", ineqs},
            {"dim_U", v.dim_U}};
  if (v.affine_chart) j["affine_chart"] = *v.affine_chart;
  if (!v.coordinate_multiplicity.empty()) j["coordinate_multiplicity"] = v.coordinate_multiplicity;
  if (!v.structure.empty()) j["structure"] = v.structure;
  return j;
}

VarietySpec variety_from_json(const Json& j) {
  return guarded("variety", [&] {
    VarietySpec v;
    v.name = j.at("name").get<std::string>();
    v.description = j.value("description", std::string());
    v.ambient_dim = j.at("ambient_dim").get<std::size_t>();
    for (const auto& p : j.value("equations", Json::array())) v.equations.push_back(polynomial_from_json(p));
    for (const auto& p : j.value("inequations", Json::array())) v.inequations.push_back(polynomial_from_json(p));
    if (j.contains("affine_chart")) v.affine_chart = j.at("affine_chart").get<std::size_t>();
    v.dim_U = j.value("dim_U", v.ambient_dim);
    v.coordinate_multiplicity = j.value("coordinate_multiplicity", std::vector<int>{});
    v.structure = j.value("structure", std::string());
    validate(v);
    return v;
  });
}

Json varieties_to_json(std::span<const VarietySpec> vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<VarietySpec> varieties_from_json(const Json& j) {
  return guarded("variety catalog", [&] {
    if (!j.is_array()) throw Error(ErrorKind::parse_error, "variety catalog must be a JSON array");
    std::vector<VarietySpec> out;
    for (const auto& v : j) out.push_back(variety_from_json(v));
    return out;
  });
}

Json to_json(const CountSeries& s) {
  Json a = Json::array();
  for (const auto& x : s.samples) a.push_back({{"T", x.t}, {"N", x.n}});
  return {{"samples", a}};
}

CountSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    CountSeries s;
    for (const auto& x : j.at("samples")) s.samples.push_back({x.at("T").get<double>(), x.at("N").get<std::uint64_t>()});
    validate(s);
    return s;
  });
}

std::string series_to_csv(const CountSeries& s) {
  std::string out = "T,N\n";
  for (const auto& x : s.samples) out += format_double(x.t) + "," + std::to_string(x.n) + "\n";
  return out;
}

CountSeries series_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || (line != "T,N" && line != "T,N\r")) {
    throw Error(ErrorKind::parse_error, "series CSV must start with the header T,N");
  }
  CountSeries s;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    CountSample x;
    const char* b = line.data();
    const char* e = b + line.size();
    bool ok = comma != std::string::npos;
    if (ok) {
      auto r1 = std::from_chars(b, b + comma, x.t);
      auto r2 = std::from_chars(b + comma + 1, e, x.n);
      ok = r1.ec == std::errc() && r1.ptr == b + comma && r2.ec == std::errc() && r2.ptr == e;
    }
    if (!ok) throw Error(ErrorKind::parse_error, "series CSV line " + std::to_string(lineno) + ": '" + line + "'");
    s.samples.push_back(x);
  }
  validate(s);
  return s;
}

Json to_json(const LocalDensity& d) {
  return {{"p", d.p}, {"count", d.count}, {"dim", d.dim}, {"density", format_rational(d.density)}};
}

LocalDensity density_from_json(const Json& j) {
  return guarded("local density", [&] {
    return LocalDensity{j.at("p").get<std::int64_t>(), j.at("count").get<std::uint64_t>(), j.at("dim").get<std::size_t>(),
                        parse_rational(j.at("density").get<std::string>())};
  });
}

Json to_json(const FitResult& f) {
  return {{"a_hat", f.a_hat}, {"b_hat", f.b_hat}, {"c_hat", f.c_hat}, {"residual", f.residual}, {"used", f.used}};
}

FitResult fit_from_json(const Json& j) {
  return guarded("fit result", [&] {
    return FitResult{j.at("a_hat").get<double>(), j.at("b_hat").get<double>(), j.at("c_hat").get<double>(),
                     j.at("residual").get<double>(), j.at("used").get<std::size_t>()};
  });
}

Json parse_json(const std::string& text) {
  return guarded("JSON", [&] { return Json::parse(text); });
}

}  // namespace maninlab
