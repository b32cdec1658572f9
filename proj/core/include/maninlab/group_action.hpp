#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maninlab/abelian_group.hpp"

namespace maninlab {

// A small finite group acting on a presented abelian group, stored as the full
// list of its actors. Actors are compared through the maps they induce.
class GroupAction {
 public:
  GroupAction(FinAbGroup group, std::vector<IntMatrix> actors);

  const FinAbGroup& group() const noexcept { return group_; }
  const std::vector<IntMatrix>& actors() const noexcept { return actors_; }
  std::size_t size() const noexcept { return actors_.size(); }

  std::size_t identity_index() const noexcept { return identity_; }
  // Index of the actor inducing actor(i) after actor(j).
  std::size_t product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  // First listed actor inducing the same map as m.
  std::size_t find(const IntMatrix& m) const;

  // {g^0, g^1, ...}, sorted.
  std::vector<std::size_t> cyclic_subgroup(std::size_t g) const;
  // One entry per distinct cyclic subgroup, each paired with a generator.
  struct Cyclic {
    std::size_t generator;
    std::vector<std::size_t> elements;
  };
  std::vector<Cyclic> cyclic_subgroups() const;

 private:
  FinAbGroup group_;
  std::vector<IntMatrix> actors_;
  std::size_t identity_ = 0;
  std::vector<std::vector<std::size_t>> table_;
};

struct Coinvariants {
  FinAbGroup group;
  AbHom projection;
};

// Largest quotient on which the listed actors act trivially.
Coinvariants coinvariants(const GroupAction& act, std::span<const std::size_t> subgroup);

}  // namespace maninlab
