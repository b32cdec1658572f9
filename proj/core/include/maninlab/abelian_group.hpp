#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "maninlab/int_matrix.hpp"
#include "maninlab/smith.hpp"

namespace maninlab {

struct InvariantFactors {
  std::vector<Integer> factors;  // each > 1, d_i | d_{i+1}
  std::size_t free_rank = 0;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

// Z^n modulo the column span of a relation matrix with n rows.
class FinAbGroup {
 public:
  FinAbGroup();
  explicit FinAbGroup(IntMatrix relations);

  static FinAbGroup free(std::size_t rank);
  // One cyclic summand per entry, 0 meaning Z.
  static FinAbGroup from_orders(std::span<const Integer> orders);
  static FinAbGroup cyclic(const Integer& order);
  static FinAbGroup trivial();

  std::size_t ambient_rank() const noexcept { return relations_.rows(); }
  const IntMatrix& relations() const noexcept { return relations_; }
  const SmithDecomposition& smith() const noexcept { return *snf_; }

  const InvariantFactors& invariants() const noexcept { return invariants_; }
  std::size_t free_rank() const noexcept { return invariants_.free_rank; }
  bool is_finite() const noexcept { return invariants_.free_rank == 0; }
  bool is_trivial() const noexcept { return is_finite() && invariants_.factors.empty(); }
  // Group order, or nullopt for infinite groups.
  std::optional<Integer> order() const;

  // Coordinates in the SNF basis: torsion coordinates reduced into [0, d_i),
  // followed by the free coordinates.
  IntVector canonical(std::span<const Integer> x) const;
  bool is_zero(std::span<const Integer> x) const;
  bool equal(std::span<const Integer> x, std::span<const Integer> y) const;
  // 0 for elements of infinite order.
  Integer element_order(std::span<const Integer> x) const;

  // SNF coordinate indices carrying a nontrivial finite cyclic factor.
  const std::vector<std::size_t>& torsion_coordinates() const noexcept { return torsion_coords_; }
  // Columns U^{-1} e_i for the torsion coordinates, in ambient coordinates.
  IntMatrix torsion_generators() const;

  void check_element(std::span<const Integer> x) const;

 private:
  IntMatrix relations_;
  std::shared_ptr<const SmithDecomposition> snf_;
  InvariantFactors invariants_;
  std::vector<std::size_t> torsion_coords_;
};

InvariantFactors invariant_factors(const FinAbGroup& g);

// Homomorphism given by an integer matrix on ambient coordinates.
class AbHom {
 public:
  AbHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix);

  static AbHom identity(const FinAbGroup& g);

  const FinAbGroup& source() const noexcept { return source_; }
  const FinAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector apply(std::span<const Integer> x) const;

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  IntMatrix matrix_;
};

bool is_compatible(const FinAbGroup& source, const FinAbGroup& target, const IntMatrix& matrix);

// g after f.
AbHom compose(const AbHom& g, const AbHom& f);

// Two matrices induce the same map source -> target.
bool same_map(const FinAbGroup& source, const FinAbGroup& target, const IntMatrix& a, const IntMatrix& b);

struct Subgroup {
  FinAbGroup group;
  AbHom inclusion;
};

// Subgroup spanned by the columns of generators (ambient coordinates of g).
Subgroup subgroup_generated(const FinAbGroup& g, const IntMatrix& generators);
Subgroup torsion_subgroup(const FinAbGroup& g);
Subgroup kernel(const AbHom& h);
Subgroup image(const AbHom& h);
FinAbGroup cokernel(const AbHom& h);

bool is_injective(const AbHom& h);
bool is_surjective(const AbHom& h);
bool is_isomorphism(const AbHom& h);

// Restriction of h to torsion subgroups, written between the presentations
// returned by torsion_subgroup.
AbHom induced_on_torsion(const AbHom& h);

bool isomorphic(const FinAbGroup& a, const FinAbGroup& b);

}  // namespace maninlab
