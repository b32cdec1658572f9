#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maninlab/int_matrix.hpp"

namespace maninlab {

using RationalVector = std::vector<Rational>;

// Irreducible reduced root system realized in a Euclidean ambient space with
// exact rational coordinates. The pairing is (x, y) = scale * sum x_i y_i, with
// scale chosen so long roots have squared length 2.
class RootSystemData {
 public:
  char type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::size_t ambient_dim() const noexcept { return simple_.empty() ? 0 : simple_.front().size(); }

  const std::vector<RationalVector>& simple_roots() const noexcept { return simple_; }
  const Rational& scale() const noexcept { return scale_; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<Rational>& squared_lengths() const noexcept { return sq_lengths_; }
  // Simple-root coordinates of every positive root, sorted by height.
  const std::vector<IntVector>& positive_roots() const noexcept { return positive_; }

  bool simply_laced() const noexcept;
  bool is_long(std::size_t i) const { return sq_lengths_.at(i) == 2; }

  Rational pair(std::span<const Rational> x, std::span<const Rational> y) const;
  RationalVector to_ambient(std::span<const Integer> simple_coords) const;
  RationalVector coroot(std::span<const Rational> root) const;
  const IntVector& highest_root() const { return positive_.back(); }
  RationalVector lowest_root_ambient() const;

 private:
  friend RootSystemData build_root_system(char type, int rank);

  char type_ = 'A';
  int rank_ = 0;
  std::vector<RationalVector> simple_;
  Rational scale_ = 1;
  IntMatrix cartan_;
  std::vector<Rational> sq_lengths_;
  std::vector<IntVector> positive_;
};

bool valid_type_rank(char type, int rank) noexcept;
RootSystemData build_root_system(char type, int rank);

struct WeightInRootBasis {
  std::vector<Rational> coefficients;

  friend bool operator==(const WeightInRootBasis&, const WeightInRootBasis&) = default;
};

WeightInRootBasis two_rho_in_simple_basis(const RootSystemData& rs);

// Solves C^T n = c: fundamental-weight coordinates c to simple-root coordinates n.
WeightInRootBasis weight_in_simple_root_basis(const RootSystemData& rs, std::span<const Rational> fundamental_coords);
// Inverse direction, c_j = <lambda, alpha_j^vee>.
std::vector<Rational> fundamental_coordinates(const RootSystemData& rs, const WeightInRootBasis& w);

// Vertex numbering for affine diagrams. Bourbaki is the internal convention;
// the long_first labeling differs only for G2, where alpha_1 is the long root.
enum class Labeling { bourbaki, long_first };

std::size_t to_internal_vertex(const RootSystemData& rs, std::size_t vertex, Labeling labeling);
std::size_t to_external_vertex(const RootSystemData& rs, std::size_t vertex, Labeling labeling);

// a_0, ..., a_l with a_0 = 1 for the lowest root.
std::vector<Integer> affine_marks(const RootSystemData& rs, Labeling labeling = Labeling::bourbaki);
// a'_i = a_i (alpha_i, alpha_i) / 2.
std::vector<Integer> dual_marks(const RootSystemData& rs, Labeling labeling = Labeling::bourbaki);

// Simple roots alpha_0 (lowest root), alpha_1, ..., alpha_l in ambient coordinates.
std::vector<RationalVector> affine_simple_roots(const RootSystemData& rs);

}  // namespace maninlab
