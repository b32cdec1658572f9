#include <gtest/gtest.h>

#include <random>

#include "maninlab/smith.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace maninlab;
using maninlab::testing::invariant_factors_by_minors;

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void expect_valid_snf(const IntMatrix& a) {
  auto s = smith_normal_form(a);
  ASSERT_EQ(s.U * a * s.V, s.D) << a;
  EXPECT_EQ(abs_of(determinant(s.U)), 1);
  EXPECT_EQ(abs_of(determinant(s.V)), 1);
  EXPECT_EQ(s.U * s.U_inverse, IntMatrix::identity(a.rows()));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), 0);
  auto d = s.diagonal();
  ASSERT_EQ(d.size(), s.rank);
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GT(d[i], 0);
    if (i + 1 < d.size()) EXPECT_EQ(d[i + 1] % d[i], 0);
  }
  EXPECT_EQ(d, invariant_factors_by_minors(a)) << a;
}

}  // namespace

TEST(Smith, TextbookExample) {
  auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.diagonal(), (std::vector<Integer>{2, 6, 12}));
  expect_valid_snf(a);
}

TEST(Smith, ZeroAndEmptyShapes) {
  auto z = IntMatrix(3, 2);
  auto s = smith_normal_form(z);
  EXPECT_EQ(s.rank, 0u);
  EXPECT_EQ(s.U * z * s.V, s.D);
  EXPECT_EQ(integer_kernel(z).cols(), 2u);
  auto e = IntMatrix(2, 0);
  EXPECT_EQ(smith_normal_form(e).rank, 0u);
}

TEST(Smith, RandomMatricesAgreeWithMinorOracle) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = maninlab::testing::random_shaped_matrix(rng, 5, 9);
    expect_valid_snf(a);
  }
}

TEST(Smith, InvariantUnderUnimodularChange) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = maninlab::testing::random_matrix(rng, 4, 3, 6);
    auto p = maninlab::testing::random_unimodular(rng, 4);
    auto q = maninlab::testing::random_unimodular(rng, 3);
    EXPECT_EQ(smith_normal_form(p * a * q).diagonal(), smith_normal_form(a).diagonal());
  }
}

TEST(Smith, DeterminantMatchesDiagonalProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(maninlab::testing::uniform(rng, 1, 6));
    auto a = maninlab::testing::random_matrix(rng, n, n, 9);
    auto s = smith_normal_form(a);
    Integer prod = 1;
    for (const auto& d : s.diagonal()) prod *= d;
    if (s.rank == n) {
      EXPECT_EQ(prod, abs_of(determinant(a)));
    } else {
      EXPECT_EQ(determinant(a), 0);
    }
  }
}

TEST(Smith, KernelIsSaturatedBasis) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = maninlab::testing::random_shaped_matrix(rng, 5, 4);
    auto k = integer_kernel(a);
    ASSERT_EQ(k.rows(), a.cols());
    EXPECT_EQ(k.cols(), a.cols() - matrix_rank(a));
    if (k.cols() == 0) continue;
    EXPECT_TRUE((a * k).is_zero());
    // Z^n / kernel is torsion free exactly when the kernel basis is saturated.
    for (const auto& d : smith_normal_form(k).diagonal()) EXPECT_EQ(d, 1);
  }
}

TEST(Smith, DeterminantAgreesWithLaplace) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(maninlab::testing::uniform(rng, 1, 5));
    auto a = maninlab::testing::random_matrix(rng, n, n, 9);
    std::vector<std::vector<Integer>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = a.row(i);
    EXPECT_EQ(determinant(a), maninlab::testing::laplace_det(rows));
  }
}
