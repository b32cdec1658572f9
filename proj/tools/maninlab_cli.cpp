#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maninlab/error.hpp"
#include "maninlab/exponents.hpp"
#include "maninlab/restricted_sum.hpp"
#include "maninlab/serialize.hpp"

namespace fs = std::filesystem;
using namespace maninlab;

namespace {

fs::path catalog_dir() {
  if (const char* env = std::getenv("MANINLAB_CATALOG_DIR"); env && *env) return env;
  return MANINLAB_DATA_DIR;
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::not_found, "cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_);
    if (!out) throw Error(ErrorKind::not_found, "cannot write " + path_);
    out << text;
  }
  void json(const Json& j) const { write(j.dump(2) + "\n"); }

 private:
  std::string path_;
};

int error_exit(ErrorKind kind, const std::string& message) {
  Json err = {{"error", {{"kind", std::string(to_string(kind))}, {"message", message}}}};
  std::cout << err.dump() << "\n";
  return 2;
}

struct Flags {
  std::string pair, twist = "inner", type, variety, norm = "max", engine = "B", input, out, varieties, labeling = "bourbaki";
  int n = 0, l = 0, p = 0, q = 0, rank = 0;
  std::size_t vertex = 0;
  double tmax = 0, window = 0.5;
  std::int64_t prime = 0;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultDensityBudget;
  bool csv = false;
  std::vector<std::string> lambda;
};

Labeling parse_labeling(const std::string& s) {
  if (s == "bourbaki") return Labeling::bourbaki;
  if (s == "long_first") return Labeling::long_first;
  throw Error(ErrorKind::parse_error, "labeling must be bourbaki or long_first");
}

char type_letter(const std::string& t) {
  if (t.size() != 1) throw Error(ErrorKind::parse_error, "--type takes a single letter A..G");
  return t[0];
}

VarietySpec variety_for(const Flags& f) {
  if (f.variety.empty()) throw Error(ErrorKind::invalid_argument, "--variety is required");
  if (!f.varieties.empty()) return resolve_variety(f.variety, fs::path(f.varieties));
  return resolve_variety(f.variety, catalog_dir() / "varieties.json");
}

WeightInRootBasis lambda_weight(const Flags& f) {
  if (f.lambda.empty()) throw Error(ErrorKind::invalid_argument, "--lambda is required");
  WeightInRootBasis w;
  for (const auto& s : f.lambda) w.coefficients.push_back(parse_rational(s));
  return w;
}

int run_orbit_check(const Flags& f, const Output& out) {
  PairDescriptor pair;
  if (!f.input.empty()) {
    pair = pair_from_json(parse_json(read_input(f.input)));
  } else if (!f.pair.empty()) {
    pair = maninlab::make_pair(f.pair, PairParams{f.n, f.l, f.p, f.q, parse_twist(f.twist)});
  } else if (!f.type.empty()) {
    pair = simply_connected_pair(make_choice(type_letter(f.type), f.rank, f.vertex, parse_twist(f.twist), parse_labeling(f.labeling)));
  } else {
    throw Error(ErrorKind::invalid_argument, "orbit-check needs --pair, --type or --input");
  }
  Json j = to_json(check_condition_iv(pair));
  j["pair"] = pair.name;
  out.json(j);
  return 0;
}

int run_catalog(const Flags& f, const Output& out) {
  const std::string path = f.input.empty() ? (catalog_dir() / "symmetric_pairs.json").string() : f.input;
  auto pairs = catalog_from_json(parse_json(read_input(path)));
  auto report = catalog_verdicts(pairs, f.threads);
  Json j = to_json(report);
  j["status"] = report.mismatches == 0 ? "pass" : "fail";
  out.json(j);
  std::cerr << "catalog: " << report.entries.size() << " entries, " << report.mismatches << " mismatches: "
            << (report.mismatches == 0 ? "PASS" : "FAIL") << "\n";
  return report.mismatches == 0 ? 0 : 1;
}

int run_kac(const Flags& f, const Output& out) {
  auto choice = make_choice(type_letter(f.type), f.rank, f.vertex, parse_twist(f.twist), parse_labeling(f.labeling));
  Json j = to_json(kac_classify(choice));
  j["choice"] = to_json(choice);
  out.json(j);
  return 0;
}

int run_exponents(const Flags& f, const Output& out) {
  ExponentPair e;
  if (!f.input.empty()) {
    Json j = parse_json(read_input(f.input));
    OrbitPartition orbits = j.contains("orbits") ? j.at("orbits").get<OrbitPartition>() : OrbitPartition{};
    if (j.contains("m") && j.contains("n")) {
      e = ab_from_divisor_data(divisor_data_from_json(j));
    } else if (j.contains("root_system")) {
      const auto& rs = j.at("root_system");
      e = ab_group_variety(build_root_system(type_letter(rs.at("type").get<std::string>()), rs.at("rank").get<int>()),
                           weight_from_json(j.at("lambda")), orbits);
    } else if (j.contains("restricted")) {
      e = ab_wonderful_symmetric(weight_from_json(j.at("restricted")), weight_from_json(j.at("lambda")), orbits);
    } else {
      throw Error(ErrorKind::parse_error, "exponents input needs m/n, root_system/lambda or restricted/lambda");
    }
  } else if (!f.type.empty()) {
    e = ab_group_variety(build_root_system(type_letter(f.type), f.rank), lambda_weight(f));
  } else if (f.pair == "symplectic") {
    e = ab_wonderful_symmetric(restricted_sum_psl2n_psp(f.n), lambda_weight(f));
  } else {
    throw Error(ErrorKind::invalid_argument, "exponents needs --input, --type/--rank/--lambda or --pair symplectic --n/--lambda");
  }
  out.json(to_json(e));
  return 0;
}

int run_restricted_sum(const Flags& f, const Output& out) {
  auto details = restricted_sum_details(f.n);
  auto closed = restricted_sum_closed_form(f.n);
  out.json({{"n", f.n},
            {"coefficients", to_json(details.coefficients)["coefficients"]},
            {"closed_form", to_json(closed)["coefficients"]},
            {"agrees_with_closed_form", details.coefficients == closed},
            {"involution_compatible", details.involution_compatible},
            {"fixed_roots", details.fixed_roots},
            {"moved_roots", details.moved_roots}});
  return 0;
}

HeightSpec height_for(const Flags& f) { return HeightSpec{parse_norm(f.norm)}; }

int run_count(const Flags& f, const Output& out) {
  auto spec = variety_for(f);
  const auto n = enumerate_points(spec, f.tmax, height_for(f), {parse_engine(f.engine), f.threads});
  out.json({{"variety", spec.name}, {"T", f.tmax}, {"norm", f.norm}, {"N", n}});
  return 0;
}

int run_series(const Flags& f, const Output& out) {
  auto spec = variety_for(f);
  auto s = count_series(spec, f.tmax, height_for(f), {parse_engine(f.engine), f.threads});
  if (f.csv) {
    out.write(series_to_csv(s));
  } else {
    out.json(to_json(s));
  }
  return 0;
}

CountSeries parse_series(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return series_from_json(parse_json(text));
  std::istringstream in(text);
  return series_from_csv(in);
}

int run_fit(const Flags& f, const Output& out) {
  auto series = parse_series(read_input(f.input));
  out.json(to_json(fit_exponents(series, f.window)));
  return 0;
}

int run_local_density(const Flags& f, const Output& out) {
  out.json(to_json(local_density(variety_for(f), f.prime, f.budget)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit finiteness, Kac classification, Manin exponents and height counts"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", f.out, "Write output to FILE instead of stdout");
  };
  auto pair_flags = [&](CLI::App* sub) {
    sub->add_option("--pair", f.pair, "Pair family name");
    sub->add_option("--n", f.n);
    sub->add_option("--l", f.l);
    sub->add_option("--p", f.p);
    sub->add_option("--q", f.q);
    sub->add_option("--twist", f.twist, "inner or outer");
  };
  auto diagram_flags = [&](CLI::App* sub) {
    sub->add_option("--type", f.type, "Cartan type A..G");
    sub->add_option("--rank", f.rank);
    sub->add_option("--vertex", f.vertex, "Vertex of the affine diagram");
    sub->add_option("--labeling", f.labeling, "bourbaki or long_first");
  };
  auto census_flags = [&](CLI::App* sub) {
    sub->add_option("--variety", f.variety, "Variety name")->required();
    sub->add_option("--varieties", f.varieties, "Variety catalog JSON");
    sub->add_option("--norm", f.norm, "max or euclid");
    sub->add_option("--threads", f.threads);
  };

  auto* orbit = app.add_subcommand("orbit-check", "Orbit finiteness verdict for one pair");
  pair_flags(orbit);
  diagram_flags(orbit);
  orbit->add_option("--input", f.input, "Pair descriptor JSON");
  common(orbit);

  auto* catalog = app.add_subcommand("catalog", "Run a catalog of pairs (default: the shipped tables)");
  catalog->add_option("file", f.input, "Catalog JSON");
  catalog->add_option("--threads", f.threads);
  common(catalog);

  auto* kac = app.add_subcommand("kac", "Classify an involution by its affine diagram vertex");
  diagram_flags(kac);
  kac->add_option("--twist", f.twist, "inner or outer");
  common(kac);

  auto* expo = app.add_subcommand("exponents", "Exponent pair (a, b)");
  expo->add_option("--input", f.input, "JSON input, - for stdin");
  expo->add_option("--type", f.type);
  expo->add_option("--rank", f.rank);
  expo->add_option("--pair", f.pair, "symplectic");
  expo->add_option("--n", f.n);
  expo->add_option("--lambda", f.lambda, "Comma separated coefficients")->delimiter(',');
  common(expo);

  auto* rsum = app.add_subcommand("restricted-sum", "Restricted positive-root sum for PGL_2n / PSp_2n");
  rsum->add_option("--n", f.n)->required();
  common(rsum);

  auto* count = app.add_subcommand("count", "Number of points of height < T");
  census_flags(count);
  count->add_option("--tmax", f.tmax, "Height bound T")->required();
  count->add_option("--engine", f.engine, "A (box scan) or B (pruned)");
  common(count);

  auto* series = app.add_subcommand("series", "Counts at geometrically spaced heights up to T_max");
  census_flags(series);
  series->add_option("--tmax", f.tmax)->required();
  series->add_option("--engine", f.engine, "A (box scan) or B (pruned)");
  series->add_flag("--csv", f.csv, "Emit CSV with header T,N");
  common(series);

  auto* fit = app.add_subcommand("fit", "Fit N = c T^a (log T)^(b-1) to a series (CSV or JSON)");
  fit->add_option("--input", f.input, "Series file, default stdin");
  fit->add_option("--window", f.window, "Tail fraction of samples used");
  common(fit);

  auto* dens = app.add_subcommand("local-density", "#U(F_p) / p^dim U by exhaustive scan");
  census_flags(dens);
  dens->add_option("--prime", f.prime)->required();
  dens->add_option("--budget", f.budget, "Maximum number of evaluations");
  common(dens);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_exit(ErrorKind::parse_error, e.what());
  }

  try {
    const Output out(f.out);
    if (orbit->parsed()) return run_orbit_check(f, out);
    if (catalog->parsed()) return run_catalog(f, out);
    if (kac->parsed()) return run_kac(f, out);
    if (expo->parsed()) return run_exponents(f, out);
    if (rsum->parsed()) return run_restricted_sum(f, out);
    if (count->parsed()) return run_count(f, out);
    if (series->parsed()) return run_series(f, out);
    if (fit->parsed()) return run_fit(f, out);
    if (dens->parsed()) return run_local_density(f, out);
  } catch (const Error& e) {
    return error_exit(e.kind(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_exit(ErrorKind::parse_error, e.what());
  } catch (const std::exception& e) {
    return error_exit(ErrorKind::invalid_argument, e.what());
  }
  return 2;
}
