#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maninlab/root_system.hpp"

namespace maninlab {

using OrbitPartition = std::vector<std::vector<std::size_t>>;

// div(sigma) = sum m_i D_i, -div(omega) = sum n_i D_i, and the partition of the
// boundary components into Galois orbits.
struct DivisorData {
  std::vector<Integer> m;
  std::vector<Integer> n;
  OrbitPartition orbits;  // empty means every index is its own orbit
};

struct ExponentPair {
  Rational a;
  std::size_t b = 1;

  friend bool operator==(const ExponentPair& x, const ExponentPair& y) { return x.a == y.a && x.b == y.b; }
};

std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& s);

OrbitPartition trivial_orbits(std::size_t count);
// Rejects partitions that miss or repeat an index.
void validate_orbits(const OrbitPartition& orbits, std::size_t count);

void validate(const DivisorData& d);

// a = max n_i / m_i, b = number of orbits attaining it.
ExponentPair ab_from_divisor_data(const DivisorData& d);

// a = max (m_alpha + 1) / n_alpha over simple roots, where 2 rho = sum m_alpha alpha
// and lambda = sum n_alpha alpha.
ExponentPair ab_group_variety(const RootSystemData& rs_of_L, const WeightInRootBasis& lambda,
                              const OrbitPartition& orbits = {});

// Same rule with user-supplied restricted coefficients m_alpha.
ExponentPair ab_wonderful_symmetric(const WeightInRootBasis& m_restricted, const WeightInRootBasis& lambda,
                                    const OrbitPartition& orbits = {});

// Divisor data encoding the same exponents: boundary multiplicities n_alpha of
// sigma and m_alpha + 1 of -omega.
DivisorData wonderful_divisor_data(const WeightInRootBasis& m, const WeightInRootBasis& lambda,
                                   const OrbitPartition& orbits = {});

}  // namespace maninlab
