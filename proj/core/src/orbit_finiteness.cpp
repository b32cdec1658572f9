#include "maninlab/orbit_finiteness.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <utility>

#include "maninlab/error.hpp"

namespace maninlab {
namespace {

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

GroupAction side_action(const PairDescriptor& pair, bool h_side) {
  std::vector<IntMatrix> actors;
  actors.reserve(pair.galois.size());
  for (const auto& g : pair.galois) actors.push_back(h_side ? g.on_H : g.on_G);
  return GroupAction(h_side ? pair.pi1_H : pair.pi1_G, std::move(actors));
}

struct CoinvariantMaps {
  Coinvariants h;
  Coinvariants g;
};

CoinvariantMaps coinvariant_pair(const PairDescriptor& pair, std::span<const std::size_t> subgroup) {
  return {coinvariants(side_action(pair, true), subgroup), coinvariants(side_action(pair, false), subgroup)};
}

}  // namespace

void validate(const PairDescriptor& pair) {
  const std::string who = pair.name.empty() ? std::string("pair") : "pair '" + pair.name + "'";
  if (pair.galois.empty()) throw Error(ErrorKind::invalid_argument, who + " has no Galois actors");
  try {
    AbHom emb(pair.pi1_H, pair.pi1_G, pair.embedding);
  } catch (const Error& e) {
    throw Error(e.kind(), who + ": embedding: " + e.what());
  }
  for (std::size_t i = 0; i < pair.galois.size(); ++i) {
    const auto& g = pair.galois[i];
    if (g.on_H.rows() != pair.pi1_H.ambient_rank() || g.on_H.cols() != pair.pi1_H.ambient_rank() ||
        g.on_G.rows() != pair.pi1_G.ambient_rank() || g.on_G.cols() != pair.pi1_G.ambient_rank()) {
      throw Error(ErrorKind::invalid_argument, who + ": actor " + std::to_string(i) + " has the wrong shape");
    }
    if (!same_map(pair.pi1_H, pair.pi1_G, pair.embedding * g.on_H, g.on_G * pair.embedding)) {
      throw Error(ErrorKind::incompatible, who + ": actor " + std::to_string(i) + " does not commute with the embedding");
    }
  }
  try {
    combined_action(pair);
  } catch (const Error& e) {
    throw Error(e.kind(), who + ": " + e.what());
  }
}

GroupAction combined_action(const PairDescriptor& pair) {
  FinAbGroup sum(block_diagonal(pair.pi1_H.relations(), pair.pi1_G.relations()));
  std::vector<IntMatrix> actors;
  for (const auto& g : pair.galois) actors.push_back(block_diagonal(g.on_H, g.on_G));
  return GroupAction(std::move(sum), std::move(actors));
}

AbHom coinvariant_torsion_map(const PairDescriptor& pair, std::span<const std::size_t> subgroup) {
  CoinvariantMaps c = coinvariant_pair(pair, subgroup);
  return induced_on_torsion(AbHom(c.h.group, c.g.group, pair.embedding));
}

Verdict check_condition_iv(const PairDescriptor& pair) {
  validate(pair);
  GroupAction act = combined_action(pair);
  for (const auto& cyc : act.cyclic_subgroups()) {
    CoinvariantMaps c = coinvariant_pair(pair, cyc.elements);
    AbHom t = induced_on_torsion(AbHom(c.h.group, c.g.group, pair.embedding));
    Subgroup k = kernel(t);
    if (k.group.is_trivial()) continue;
    const IntMatrix& gens = k.inclusion.matrix();
    const IntMatrix lift = c.h.group.torsion_generators();
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      IntVector in_torsion = gens.column(j);
      if (t.source().is_zero(in_torsion)) continue;
      Verdict v;
      v.finite = false;
      v.witness_generator = cyc.generator;
      v.witness_subgroup = cyc.elements;
      v.kernel_element = lift * in_torsion;
      return v;
    }
  }
  return Verdict{};
}

bool verify_witness(const PairDescriptor& pair, const Verdict& verdict) {
  if (verdict.finite) return !verdict.witness_generator && verdict.kernel_element.empty();
  if (!verdict.witness_generator) return false;
  GroupAction act = combined_action(pair);
  if (*verdict.witness_generator >= act.size()) return false;
  if (act.cyclic_subgroup(*verdict.witness_generator) != verdict.witness_subgroup) return false;
  if (verdict.kernel_element.size() != pair.pi1_H.ambient_rank()) return false;
  CoinvariantMaps c = coinvariant_pair(pair, verdict.witness_subgroup);
  const IntVector& x = verdict.kernel_element;
  if (c.h.group.is_zero(x)) return false;
  if (sgn(c.h.group.element_order(x)) == 0) return false;
  return c.g.group.is_zero(pair.embedding * x);
}

ImageCheck simply_connected_image_check(const IntMatrix& cochar_map) {
  if (matrix_rank(cochar_map) != cochar_map.cols()) {
    throw Error(ErrorKind::invalid_argument, "cocharacter map does not have full column rank (" +
                                                 std::to_string(matrix_rank(cochar_map)) + " < " +
                                                 std::to_string(cochar_map.cols()) + ")");
  }
  FinAbGroup coker(cochar_map);
  Subgroup t = torsion_subgroup(coker);
  ImageCheck out;
  out.torsion = t.group;
  out.torsion_free = t.group.is_trivial();
  return out;
}

CatalogReport catalog_verdicts(std::span<const PairDescriptor> catalog, unsigned threads) {
  CatalogReport report;
  report.entries.resize(catalog.size());
  auto work = [&](std::size_t i) {
    const PairDescriptor& p = catalog[i];
    CatalogEntryReport& e = report.entries[i];
    e.name = p.name;
    e.expected_finite = p.expected_finite;
    e.verdict = check_condition_iv(p);
    e.computed_finite = e.verdict.finite;
  };
  if (threads <= 1 || catalog.size() < 2) {
    for (std::size_t i = 0; i < catalog.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < catalog.size(); i = next++) work(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (const auto& e : report.entries)
    if (e.mismatch()) ++report.mismatches;
  return report;
}

}  // namespace maninlab
