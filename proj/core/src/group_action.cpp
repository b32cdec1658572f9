#include "maninlab/group_action.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "maninlab/error.hpp"

namespace maninlab {

GroupAction::GroupAction(FinAbGroup group, std::vector<IntMatrix> actors)
    : group_(std::move(group)), actors_(std::move(actors)) {
  if (actors_.empty()) throw Error(ErrorKind::invalid_argument, "acting group needs at least the identity actor");
  const std::size_t n = group_.ambient_rank();
  for (std::size_t i = 0; i < actors_.size(); ++i) {
    const IntMatrix& a = actors_[i];
    if (a.rows() != n || a.cols() != n) {
      throw Error(ErrorKind::invalid_argument, "actor " + std::to_string(i) + " is not " +
                                                   std::to_string(n) + "x" + std::to_string(n));
    }
    if (!is_compatible(group_, group_, a)) {
      throw Error(ErrorKind::incompatible, "actor " + std::to_string(i) + " does not preserve the relations");
    }
    if (!is_isomorphism(AbHom(group_, group_, a))) {
      throw Error(ErrorKind::incompatible, "actor " + std::to_string(i) + " is not invertible on the group");
    }
  }
  const IntMatrix id = IntMatrix::identity(n);
  bool found = false;
  for (std::size_t i = 0; i < actors_.size() && !found; ++i)
    if (same_map(group_, group_, actors_[i], id)) {
      identity_ = i;
      found = true;
    }
  if (!found) throw Error(ErrorKind::invalid_argument, "acting group has no identity actor");

  table_.assign(actors_.size(), std::vector<std::size_t>(actors_.size()));
  for (std::size_t i = 0; i < actors_.size(); ++i)
    for (std::size_t j = 0; j < actors_.size(); ++j) {
      IntMatrix p = actors_[i] * actors_[j];
      std::size_t k = find(p);
      if (k == actors_.size()) {
        throw Error(ErrorKind::incompatible, "actors " + std::to_string(i) + " and " + std::to_string(j) +
                                                 " compose to an unlisted map");
      }
      table_[i][j] = k;
    }
}

std::size_t GroupAction::find(const IntMatrix& m) const {
  for (std::size_t k = 0; k < actors_.size(); ++k)
    if (same_map(group_, group_, actors_[k], m)) return k;
  return actors_.size();
}

std::vector<std::size_t> GroupAction::cyclic_subgroup(std::size_t g) const {
  if (g >= actors_.size()) throw Error(ErrorKind::not_found, "unknown actor index " + std::to_string(g));
  std::set<std::size_t> seen{identity_};
  std::size_t cur = g;
  while (seen.insert(cur).second) cur = table_[g][cur];
  return {seen.begin(), seen.end()};
}

std::vector<GroupAction::Cyclic> GroupAction::cyclic_subgroups() const {
  std::vector<Cyclic> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t g = 0; g < actors_.size(); ++g) {
    auto elems = cyclic_subgroup(g);
    if (seen.insert(elems).second) out.push_back({g, std::move(elems)});
  }
  return out;
}

Coinvariants coinvariants(const GroupAction& act, std::span<const std::size_t> subgroup) {
  const FinAbGroup& g = act.group();
  const std::size_t n = g.ambient_rank();
  IntMatrix rel = g.relations();
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t idx : subgroup) {
    if (idx >= act.size()) {
      throw Error(ErrorKind::not_found, "subgroup element " + std::to_string(idx) + " is not an actor (acting group has " +
                                            std::to_string(act.size()) + " elements)");
    }
    rel = hstack(rel, act.actors()[idx] - id);
  }
  FinAbGroup q(std::move(rel));
  AbHom proj(g, q, id);
  return Coinvariants{std::move(q), std::move(proj)};
}

}  // namespace maninlab
