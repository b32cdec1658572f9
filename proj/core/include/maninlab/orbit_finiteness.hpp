#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maninlab/abelian_group.hpp"
#include "maninlab/group_action.hpp"
#include "maninlab/kac.hpp"

namespace maninlab {

// One element of the Galois image, acting on pi_1(H) and pi_1(G).
struct GaloisActor {
  IntMatrix on_H;
  IntMatrix on_G;
};

struct PairDescriptor {
  std::string name;
  FinAbGroup pi1_H;
  FinAbGroup pi1_G;
  IntMatrix embedding;  // pi_1(H) -> pi_1(G), G ambient rank x H ambient rank
  std::vector<GaloisActor> galois;
  std::optional<bool> expected_finite;
};

// Throws when the embedding or an actor is incompatible, or when an actor
// does not commute with the embedding.
void validate(const PairDescriptor& pair);

// Action of the Galois image on pi_1(H) + pi_1(G), block diagonal.
GroupAction combined_action(const PairDescriptor& pair);

struct Verdict {
  bool finite = true;
  // For an infinite verdict: the generating actor, its cyclic subgroup and an
  // element of pi_1(H) (ambient coordinates) whose image in the H-coinvariants
  // is a nonzero torsion element killed by the map to the G-coinvariants.
  std::optional<std::size_t> witness_generator;
  std::vector<std::size_t> witness_subgroup;
  IntVector kernel_element;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// The map (pi_1(H)_h)_tors -> (pi_1(G)_h)_tors for the cyclic subgroup h.
AbHom coinvariant_torsion_map(const PairDescriptor& pair, std::span<const std::size_t> subgroup);

Verdict check_condition_iv(const PairDescriptor& pair);
bool verify_witness(const PairDescriptor& pair, const Verdict& verdict);

struct ImageCheck {
  bool torsion_free = true;
  FinAbGroup torsion;
};

// Columns of cochar_map are the images of a basis of X_*(T_{H^sc}).
ImageCheck simply_connected_image_check(const IntMatrix& cochar_map);

struct CatalogEntryReport {
  std::string name;
  bool computed_finite = true;
  std::optional<bool> expected_finite;
  Verdict verdict;

  bool mismatch() const { return expected_finite && *expected_finite != computed_finite; }
};

struct CatalogReport {
  std::vector<CatalogEntryReport> entries;
  std::size_t mismatches = 0;
};

CatalogReport catalog_verdicts(std::span<const PairDescriptor> catalog, unsigned threads = 1);

// Built-in pairs. Names accepted by make_pair:
//   AII-adjoint (n, twist), CII-adjoint (p, q), BDI(2l,1)-adjoint (l),
//   BDI(2l-1,1)-adjoint (l, twist), EIV-adjoint (twist), FII-adjoint,
//   PSLD-PSU (n odd).
struct PairParams {
  int n = 0;
  int l = 0;
  int p = 0;
  int q = 0;
  Twist twist = Twist::inner;
};

PairDescriptor make_pair(const std::string& name, const PairParams& params);

// Simply connected G with the pi_1(H) predicted by kac_classify.
PairDescriptor simply_connected_pair(const AffineDiagramChoice& choice);

// Every family over the parameter grids n, l <= 10, 1 <= p <= q <= 5, plus the
// simply connected pairs from every affine diagram choice of rank <= 8.
std::vector<PairDescriptor> builtin_catalog();

}  // namespace maninlab
