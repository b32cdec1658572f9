#include "maninlab/variety.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "maninlab/error.hpp"
#include "maninlab/serialize.hpp"

namespace maninlab {

void validate(const VarietySpec& spec) {
  const std::size_t n = spec.coordinates();
  auto check = [&](const Polynomial& p, const char* what) {
    if (p.nvars() != n) {
      throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "': " + what + " has " +
                                                   std::to_string(p.nvars()) + " variables, expected " +
                                                   std::to_string(n));
    }
    if (!p.is_homogeneous()) {
      throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "': " + what + " is not homogeneous");
    }
  };
  for (const auto& p : spec.equations) check(p, "equation");
  for (const auto& p : spec.inequations) check(p, "inequation");
  if (spec.affine_chart && *spec.affine_chart >= n) {
    throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "': affine chart index out of range");
  }
  if (!spec.coordinate_multiplicity.empty()) {
    if (spec.coordinate_multiplicity.size() != n) {
      throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "': coordinate_multiplicity length mismatch");
    }
    for (int m : spec.coordinate_multiplicity)
      if (m < 1) throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "': multiplicities must be >= 1");
  }
  if (!spec.structure.empty() && spec.structure != "pfaffian4") {
    throw Error(ErrorKind::invalid_argument, "variety '" + spec.name + "': unknown structure '" + spec.structure + "'");
  }
}

VarietySpec projective_space(std::size_t d) {
  VarietySpec s;
  s.name = "p" + std::to_string(d);
  s.description = "projective space P^" + std::to_string(d);
  s.ambient_dim = d;
  s.dim_U = d;
  return s;
}

Polynomial pfaffian4() {
  const std::size_t n = 7;
  auto x = [n](std::size_t i) { return variable(n, i); };
  // indices: 0 x0, 1 a12, 2 a13, 3 a14, 4 a23, 5 a24, 6 a34
  return x(1) * x(6) - x(2) * x(5) + x(3) * x(4);
}

std::vector<VarietySpec> builtin_varieties() {
  std::vector<VarietySpec> out;
  for (std::size_t d = 1; d <= 3; ++d) out.push_back(projective_space(d));

  {
    VarietySpec s;
    s.name = "pgl2";
    s.description = "PGL2 as the complement of det = 0 in P^3";
    s.ambient_dim = 3;
    s.inequations.push_back(variable(4, 0) * variable(4, 3) - variable(4, 1) * variable(4, 2));
    s.dim_U = 3;
    out.push_back(std::move(s));
  }
  {
    VarietySpec s;
    s.name = "sl2";
    s.description = "SL2 as x1 x4 - x2 x3 = x0^2 in the chart x0 != 0 of P^4";
    s.ambient_dim = 4;
    auto x = [](std::size_t i) { return variable(5, i); };
    s.equations.push_back(x(1) * x(4) - x(2) * x(3) - x(0) * x(0));
    s.affine_chart = 0;
    s.dim_U = 3;
    out.push_back(std::move(s));
  }
  {
    VarietySpec s;
    s.name = "skew4";
    s.description =
        "4x4 skew-symmetric matrices with Pfaffian +-1: pf^2 = x0^4 in the chart x0 != 0, "
        "coordinates (x0, a12, a13, a14, a23, a24, a34)";
    s.ambient_dim = 6;
    Polynomial pf = pfaffian4();
    Polynomial x0 = variable(7, 0);
    s.equations.push_back(pf * pf - x0 * x0 * x0 * x0);
    s.affine_chart = 0;
    s.dim_U = 5;
    s.coordinate_multiplicity = {1, 2, 2, 2, 2, 2, 2};
    s.structure = "pfaffian4";
    out.push_back(std::move(s));
  }
  return out;
}

VarietySpec builtin_variety(const std::string& name) {
  for (auto& v : builtin_varieties())
    if (v.name == name) return v;
  throw Error(ErrorKind::not_found, "unknown variety '" + name + "'");
}

std::vector<VarietySpec> load_varieties(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::not_found, "cannot open variety catalog " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, file.string() + ": " + e.what());
  }
  return varieties_from_json(j);
}

VarietySpec resolve_variety(const std::string& name, const std::optional<std::filesystem::path>& file) {
  if (file && std::filesystem::exists(*file)) {
    for (auto& v : load_varieties(*file))
      if (v.name == name) return v;
    throw Error(ErrorKind::not_found, "variety '" + name + "' not found in " + file->string());
  }
  return builtin_variety(name);
}

}  // namespace maninlab
