#include <gtest/gtest.h>

#include <set>

#include "maninlab/error.hpp"
#include "maninlab/kac.hpp"

using namespace maninlab;

namespace {

struct TypeRank {
  char type;
  int rank;
};

std::vector<TypeRank> all_types() {
  std::vector<TypeRank> out;
  for (int r = 1; r <= 8; ++r) out.push_back({'A', r});
  for (int r = 2; r <= 8; ++r) out.push_back({'B', r});
  for (int r = 2; r <= 8; ++r) out.push_back({'C', r});
  for (int r = 3; r <= 8; ++r) out.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) out.push_back({'E', r});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

}  // namespace

TEST(Kac, CIIIsSimplyConnected) {
  auto r = kac_classify(make_choice('C', 4, 2, Twist::inner));
  EXPECT_EQ(r.verdict, KacVerdict::simply_connected);
  EXPECT_EQ(r.family.series, "C II");
  EXPECT_EQ(r.family.label(), "C II(2,2)");
}

TEST(Kac, NamedFamilies) {
  EXPECT_EQ(kac_classify(make_choice('B', 3, 3, Twist::inner)).family.label(), "BD I(6,1)");
  EXPECT_EQ(kac_classify(make_choice('F', 4, 4, Twist::inner)).family.series, "F II");
  EXPECT_EQ(kac_classify(make_choice('F', 4, 1, Twist::inner)).family.series, "F I");
  EXPECT_EQ(kac_classify(make_choice('E', 6, 0, Twist::outer)).family.series, "E IV");
  EXPECT_EQ(kac_classify(make_choice('E', 8, 8, Twist::inner)).family.series, "E IX");
  EXPECT_EQ(kac_classify(make_choice('A', 5, 0, Twist::outer)).family.series, "A II");
  EXPECT_EQ(kac_classify(make_choice('G', 2, 2, Twist::inner)).verdict, KacVerdict::z2);
}

TEST(Kac, VerdictMatchesListForEveryChoice) {
  std::set<std::string> seen_sc;
  for (auto [t, r] : all_types()) {
    for (const auto& c : inner_choices(t, r)) {
      auto k = kac_classify(c);
      EXPECT_EQ(k.verdict == KacVerdict::simply_connected, in_simply_connected_list(k.family))
          << t << r << " v" << c.vertex << " " << k.family.label();
      if (k.verdict == KacVerdict::simply_connected) seen_sc.insert(k.family.series);
    }
    for (const auto& c : outer_choices(t, r)) {
      auto k = kac_classify(c);
      EXPECT_EQ(k.verdict == KacVerdict::simply_connected, in_simply_connected_list(k.family))
          << t << r << " outer v" << c.vertex << " " << k.family.label();
      if (k.verdict == KacVerdict::simply_connected) seen_sc.insert(k.family.series);
    }
  }
  EXPECT_EQ(seen_sc, (std::set<std::string>{"A II", "BD I", "C II", "E IV", "F II"}));
}

// Independent route: the torsion of the cokernel of the subdiagram coroots.
TEST(Kac, InnerVerdictAgreesWithCorootTorsion) {
  for (auto [t, r] : all_types())
    for (const auto& c : inner_choices(t, r)) {
      auto tor = kac_lattice_torsion(c);
      EXPECT_EQ(tor.free_rank, 0u);
      const bool trivial = tor.factors.empty();
      EXPECT_EQ(trivial, kac_classify(c).verdict == KacVerdict::simply_connected) << t << r << " v" << c.vertex;
      if (!trivial) EXPECT_EQ(tor.factors, (std::vector<Integer>{2})) << t << r << " v" << c.vertex;
    }
}

TEST(Kac, SmallCIIAndBDICrossValidation) {
  for (int n = 2; n <= 4; ++n)
    for (std::size_t v = 1; v < static_cast<std::size_t>(n); ++v) {
      auto c = make_choice('C', n, v, Twist::inner);
      EXPECT_TRUE(kac_lattice_torsion(c).factors.empty());
      EXPECT_EQ(kac_classify(c).family.series, "C II");
    }
  auto b = make_choice('B', 3, 3, Twist::inner);
  EXPECT_TRUE(kac_lattice_torsion(b).factors.empty());
  EXPECT_EQ(kac_classify(b).verdict, KacVerdict::simply_connected);
}

TEST(Kac, RejectsInvalidVertices) {
  EXPECT_THROW(make_choice('C', 4, 4, Twist::inner), Error);  // mark 1
  EXPECT_THROW(make_choice('C', 4, 9, Twist::inner), Error);
  EXPECT_THROW(make_choice('B', 3, 0, Twist::outer), Error);  // no outer form
  EXPECT_THROW(parse_twist("sideways"), Error);
}

TEST(Kac, ListMembership) {
  EXPECT_TRUE(in_simply_connected_list({"C II", 1, 3}));
  EXPECT_TRUE(in_simply_connected_list({"BD I", 6, 1}));
  EXPECT_TRUE(in_simply_connected_list({"BD I", 5, 1}));
  EXPECT_FALSE(in_simply_connected_list({"BD I", 4, 4}));
  EXPECT_FALSE(in_simply_connected_list({"E II", 0, 0}));
  EXPECT_TRUE(in_simply_connected_list({"A II", 3, 0}));
}
