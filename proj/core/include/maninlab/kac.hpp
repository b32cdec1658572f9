#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maninlab/abelian_group.hpp"
#include "maninlab/root_system.hpp"

namespace maninlab {

enum class Twist { inner, outer };
enum class KacVerdict { simply_connected, z2 };

std::string_view to_string(Twist t) noexcept;
std::string_view to_string(KacVerdict v) noexcept;
Twist parse_twist(std::string_view s);
KacVerdict parse_verdict(std::string_view s);

// Choice of an involution by a vertex of an affine diagram.
//
// Inner twists use the extended Dynkin diagram of rs with Bourbaki numbering
// (vertex 0 is the lowest root) unless labeling says otherwise; the chosen
// vertex must carry mark 2.
//
// Outer twists use the twisted diagrams X^(2) with the numbering below; the
// chosen vertex carries mark 1 there:
//   A_{2l}^(2)   : vertices 0..l, vertex l is the mark-1 end.
//   A_{2l-1}^(2) : vertices 0..l, 0 and 1 form the fork, l is the far end.
//   D_{l+1}^(2)  : vertices 0..l along the chain.
//   E_6^(2)      : vertices 0..4 along the chain, 0 and 4 are the ends.
// A_3 is numbered as A_3^(2) and D_3 as D_3^(2).
struct AffineDiagramChoice {
  RootSystemData rs;
  std::vector<Integer> marks;  // a_0..a_l for inner twists, empty for outer
  std::size_t vertex = 0;      // in the chosen labeling
  Twist twist = Twist::inner;
  Labeling labeling = Labeling::bourbaki;
};

AffineDiagramChoice make_choice(char type, int rank, std::size_t vertex, Twist twist,
                                Labeling labeling = Labeling::bourbaki);

std::vector<AffineDiagramChoice> inner_choices(char type, int rank);
std::vector<AffineDiagramChoice> outer_choices(char type, int rank);

// Cartan's name for the symmetric pair, normalized through the low-rank
// isomorphisms B2 = C2 and A3 = D3. p and q are the family parameters.
struct SymmetricFamily {
  std::string series;  // "A I", "A II", "BD I", "C II", "E II", ..., "G"
  int p = 0;
  int q = 0;

  std::string label() const;
  friend bool operator==(const SymmetricFamily&, const SymmetricFamily&) = default;
};

struct KacResult {
  KacVerdict verdict = KacVerdict::z2;
  SymmetricFamily family;
  std::string subgroup;  // type of H
  bool double_edge = false;
  bool short_vertex = false;
};

KacResult kac_classify(const AffineDiagramChoice& choice);

// Membership in the list of pairs whose fixed-point group is simply connected:
// A II (n >= 3), C II, BD I(2l,1) and BD I(2l-1,1) (l >= 3), E IV, F II.
bool in_simply_connected_list(const SymmetricFamily& family);

// Inner twists only: torsion of coker[coroots of H -> coroots of G], from
// explicit ambient coroot coordinates.
InvariantFactors kac_lattice_torsion(const AffineDiagramChoice& choice);

// Integer matrix whose columns are the coroots alpha_i^vee (i != vertex,
// i = 0..l) in the basis of simple coroots of G.
IntMatrix subdiagram_coroot_map(const AffineDiagramChoice& choice);

}  // namespace maninlab
