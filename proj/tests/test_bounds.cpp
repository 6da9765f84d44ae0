#include <gtest/gtest.h>

#include "equipart/bounds.hpp"

using namespace equipart;

TEST(Bounds, FiveTwo) {
  const auto r = bounds_report(5, 2);
  EXPECT_EQ(r.lower, 8);
  EXPECT_EQ(r.upper(Provenance::dickson_minimal_d), 9);
  EXPECT_EQ(r.upper(Provenance::delta1_obstruction), 8);
  EXPECT_EQ(r.best, 8);
  EXPECT_TRUE(r.exact());
}

TEST(Bounds, FifteenThree) {
  const auto r = bounds_report(15, 3);
  EXPECT_EQ(r.lower, 35);
  EXPECT_EQ(r.upper(Provenance::index_formula), 39);
  EXPECT_FALSE(r.exact());
}

TEST(Bounds, ClosingTable) {
  const std::vector<std::tuple<int, int, std::int64_t, std::int64_t>> rows{
      {7, 3, 17, 19}, {6, 3, 14, 18}, {15, 3, 35, 39}, {14, 3, 33, 38},
      {7, 4, 27, 35}, {6, 4, 23, 34}, {15, 4, 57, 71}, {14, 4, 53, 70},
  };
  for (const auto& [j, k, lo, hi] : rows) {
    const auto r = bounds_report(j, k);
    EXPECT_EQ(r.lower, lo) << j << "," << k;
    EXPECT_EQ(r.best, hi) << j << "," << k;
  }
}

TEST(Bounds, MersenneFamilyIsExact) {
  for (int q = 0; q <= 3; ++q) {
    const int j = (2 << q) - 1;
    const auto r = bounds_report(j, 2);
    EXPECT_TRUE(r.exact()) << j;
    EXPECT_EQ(r.best, 3 * (1 << q) - 1) << j;
  }
  EXPECT_EQ(bounds_report(7, 2).upper(Provenance::corollary_closed_form), 11);
}

TEST(Bounds, EvenJUsesOrbitParity) {
  EXPECT_EQ(bounds_report(2, 2).upper(Provenance::delta0_parity), 3);
  EXPECT_EQ(bounds_report(4, 2).upper(Provenance::delta0_parity), 6);
  EXPECT_FALSE(bounds_report(6, 2).upper(Provenance::delta0_parity).has_value());
}

TEST(Bounds, HamSandwich) {
  for (int d = 1; d <= 10; ++d) {
    const auto r = bounds_report(d, 1);
    EXPECT_TRUE(r.exact());
    EXPECT_EQ(r.best, d);
  }
}

TEST(Bounds, UppersNeverBelowLower) {
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 12; ++j) {
      const auto r = bounds_report(j, k);
      for (const auto& u : r.uppers) EXPECT_GE(u.value, r.lower);
    }
}

TEST(Bounds, DicksonSkippedWhenCapped) {
  BoundsOptions opt;
  opt.product_cap = 10;
  const auto r = bounds_report(15, 4, opt);
  EXPECT_FALSE(r.upper(Provenance::dickson_minimal_d).has_value());
  EXPECT_EQ(r.best, 71);
  EXPECT_FALSE(r.notes.empty());
}
