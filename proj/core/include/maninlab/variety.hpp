#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "maninlab/polynomial.hpp"

namespace maninlab {

// Locally closed subset of P^d: equations vanish, inequations do not.
struct VarietySpec {
  std::string name;
  std::string description;
  std::size_t ambient_dim = 0;  // d; points have d + 1 coordinates
  std::vector<Polynomial> equations;
  std::vector<Polynomial> inequations;
  std::optional<std::size_t> affine_chart;  // this coordinate is nonzero
  std::size_t dim_U = 0;
  // Weight of each stored coordinate in the Euclidean norm, for models that
  // store one representative of repeated ambient coordinates. Empty = all 1.
  std::vector<int> coordinate_multiplicity;
  // Optional hint for a specialised counter ("pfaffian4").
  std::string structure;

  std::size_t coordinates() const noexcept { return ambient_dim + 1; }
  int multiplicity(std::size_t i) const {
    return coordinate_multiplicity.empty() ? 1 : coordinate_multiplicity.at(i);
  }
};

void validate(const VarietySpec& spec);

// Polynomial-free projective space P^d.
VarietySpec projective_space(std::size_t d);

// Catalog shipped with the library: p1, p2, p3, pgl2, sl2, skew4.
std::vector<VarietySpec> builtin_varieties();
VarietySpec builtin_variety(const std::string& name);

// Reads a JSON array of varieties.
std::vector<VarietySpec> load_varieties(const std::filesystem::path& file);
// Looks the name up in file when it exists, else in the built-in catalog.
VarietySpec resolve_variety(const std::string& name, const std::optional<std::filesystem::path>& file);

// Pfaffian a12 a34 - a13 a24 + a14 a23 in the 7 coordinates
// (x0, a12, a13, a14, a23, a24, a34).
Polynomial pfaffian4();

}  // namespace maninlab
