#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "maninlab/abelian_group.hpp"
#include "maninlab/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace maninlab;
namespace mt = maninlab::testing;

namespace {

std::vector<std::vector<Integer>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<Integer>> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) r[i] = m.row(i);
  return r;
}

// x lies in R Z^n iff adj(R) x = 0 mod det R, for square nonsingular R.
bool in_lattice(const IntMatrix& r, const IntVector& x) {
  const std::size_t n = r.rows();
  const Integer det = mt::laplace_det(rows_of(r));
  for (std::size_t i = 0; i < n; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      // adj(R)_{ij} = (-1)^{i+j} minor_{ji}
      std::vector<std::vector<Integer>> minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == j) continue;
        std::vector<Integer> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != i) row.push_back(r(a, b));
        minor.push_back(row);
      }
      Integer c = mt::laplace_det(minor);
      if ((i + j) % 2) c = -c;
      acc += c * x[j];
    }
    if (acc % det != 0) return false;
  }
  return true;
}

Integer order_of(const FinAbGroup& g) {
  auto o = g.order();
  EXPECT_TRUE(o.has_value());
  return o.value_or(0);
}

IntMatrix nonsingular(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    auto r = mt::random_matrix(rng, n, n, 4);
    if (determinant(r) != 0) return r;
  }
}

}  // namespace

TEST(FinAbGroup, FromOrdersNormalizes) {
  auto g = FinAbGroup::from_orders(to_int_vector({2, 3}));
  EXPECT_EQ(g.invariants().factors, (std::vector<Integer>{6}));
  EXPECT_EQ(order_of(g), 6);
  auto h = FinAbGroup::from_orders(to_int_vector({4, 2, 0}));
  EXPECT_EQ(h.invariants().factors, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(h.free_rank(), 1u);
  EXPECT_FALSE(h.order().has_value());
  EXPECT_TRUE(FinAbGroup::trivial().is_trivial());
  EXPECT_TRUE(FinAbGroup::from_orders(to_int_vector({1, 1})).is_trivial());
  EXPECT_TRUE(isomorphic(FinAbGroup::from_orders(to_int_vector({4, 6})), FinAbGroup::from_orders(to_int_vector({2, 12}))));
  EXPECT_FALSE(isomorphic(FinAbGroup::cyclic(4), FinAbGroup::from_orders(to_int_vector({2, 2}))));
}

TEST(FinAbGroup, RandomPresentationsMatchLatticeOracle) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(mt::uniform(rng, 1, 3));
    auto r = nonsingular(rng, n);
    FinAbGroup g(r);
    const Integer det = determinant(r);
    EXPECT_EQ(order_of(g), det < 0 ? Integer(-det) : det);
    for (int k = 0; k < 10; ++k) {
      auto x = mt::random_vector(rng, n, 6);
      auto y = mt::random_vector(rng, n, 6);
      IntVector diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - y[i];
      EXPECT_EQ(g.equal(x, y), in_lattice(r, diff));
      Integer ord = 1;
      IntVector m(x);
      while (!in_lattice(r, m)) {
        ++ord;
        for (std::size_t i = 0; i < n; ++i) m[i] = ord * x[i];
      }
      EXPECT_EQ(g.element_order(x), ord);
    }
  }
}

TEST(FinAbGroup, TorsionGeneratorsHaveFactorOrders) {
  auto g = FinAbGroup(IntMatrix::from_rows({{2, 0, 0}, {0, 6, 0}, {0, 0, 0}}));
  auto gens = g.torsion_generators();
  ASSERT_EQ(gens.cols(), 2u);
  EXPECT_EQ(g.element_order(gens.column(0)), 2);
  EXPECT_EQ(g.element_order(gens.column(1)), 6);
  EXPECT_EQ(g.element_order(to_int_vector({0, 0, 1})), 0);
}

TEST(AbHom, RejectsIncompatibleMatrix) {
  EXPECT_THROW(AbHom(FinAbGroup::cyclic(3), FinAbGroup::cyclic(4), IntMatrix::from_rows({{1}})), Error);
  EXPECT_NO_THROW(AbHom(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4), IntMatrix::from_rows({{2}})));
}

TEST(AbHom, KernelImageCokernelSmallCases) {
  AbHom h(FinAbGroup::cyclic(6), FinAbGroup::cyclic(4), IntMatrix::from_rows({{2}}));
  EXPECT_EQ(order_of(kernel(h).group), 3);
  EXPECT_EQ(order_of(image(h).group), 2);
  EXPECT_EQ(order_of(cokernel(h)), 2);
  AbHom e(FinAbGroup::cyclic(4), FinAbGroup::cyclic(8), IntMatrix::from_rows({{2}}));
  EXPECT_TRUE(is_injective(e));
  EXPECT_FALSE(is_surjective(e));
  AbHom iso(FinAbGroup::cyclic(5), FinAbGroup::cyclic(5), IntMatrix::from_rows({{2}}));
  EXPECT_TRUE(is_isomorphism(iso));
}

TEST(AbHom, FirstIsomorphismTheoremOnRandomMaps) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = static_cast<std::size_t>(mt::uniform(rng, 1, 3));
    const auto b = static_cast<std::size_t>(mt::uniform(rng, 1, 3));
    IntVector so(a), to(b);
    for (auto& x : so) x = static_cast<long>(mt::uniform(rng, 1, 12));
    for (auto& x : to) x = static_cast<long>(mt::uniform(rng, 1, 12));
    IntMatrix m(b, a);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), to[i].get_mpz_t(), so[j].get_mpz_t());
        m(i, j) = (to[i] / g) * static_cast<long>(mt::uniform(rng, -3, 3));
      }
    AbHom h(FinAbGroup::from_orders(so), FinAbGroup::from_orders(to), m);
    const Integer src = order_of(h.source()), dst = order_of(h.target());
    const Integer k = order_of(kernel(h).group), im = order_of(image(h).group), ck = order_of(cokernel(h));
    EXPECT_EQ(k * im, src);
    EXPECT_EQ(im * ck, dst);
    auto inc = kernel(h).inclusion;
    for (std::size_t c = 0; c < inc.matrix().cols(); ++c) EXPECT_TRUE(h.target().is_zero(h.apply(inc.matrix().column(c))));
  }
}

TEST(AbHom, InducedOnTorsionDropsFreePart) {
  // Z + Z/2 -> Z/4 + Z, (x, y) -> (2y, x)
  FinAbGroup s(IntMatrix::from_rows({{0, 0}, {0, 2}}));
  FinAbGroup t(IntMatrix::from_rows({{4, 0}, {0, 0}}));
  AbHom h(s, t, IntMatrix::from_rows({{0, 2}, {1, 0}}));
  auto tor = induced_on_torsion(h);
  EXPECT_EQ(order_of(tor.source()), 2);
  EXPECT_EQ(order_of(tor.target()), 4);
  EXPECT_TRUE(is_injective(tor));
  EXPECT_EQ(order_of(cokernel(tor)), 2);
}

TEST(Subgroup, GeneratedAndTorsion) {
  auto g = FinAbGroup::from_orders(to_int_vector({4, 6}));
  auto sub = subgroup_generated(g, IntMatrix::from_rows({{2}, {3}}));
  EXPECT_EQ(order_of(sub.group), 2);
  auto mixed = FinAbGroup::from_orders(to_int_vector({0, 3}));
  EXPECT_EQ(order_of(torsion_subgroup(mixed).group), 3);
}
