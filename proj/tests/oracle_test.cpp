#include "lichao/oracle.hpp"

#include <gtest/gtest.h>

namespace lichao {
namespace {

TEST(NaiveSetTest, AddLines) {
  NaiveSet set;
  set.AddLine({1, 0});
  EXPECT_EQ(set.size(), 1u);
  set.AddLine({1, 0});
  EXPECT_EQ(set.size(), 2u);
  EXPECT_EQ(set.Query(7), 7);
  for (int i = 0; i < 998; ++i) set.AddLine({i, i});
  EXPECT_EQ(set.size(), 1000u);
}

TEST(NaiveSetTest, EmptyIsAbsent) {
  NaiveSet set;
  EXPECT_FALSE(set.Query(0));
}

TEST(NaiveSetTest, DirectEvaluation) {
  NaiveSet set;
  set.AddLine({2, 0});
  set.AddLine({-2, 20});
  EXPECT_EQ(set.Query(5), 10);
  set.AddLine({4, -8});
  set.AddLine({1, 4});
  EXPECT_EQ(set.Query(5), 9);
}

TEST(NaiveSetTest, SegmentsOnlyCoverTheirRange) {
  NaiveSet set;
  set.AddSegment({0, -100}, 10, 20);
  EXPECT_FALSE(set.Query(9));
  EXPECT_EQ(set.Query(10), -100);
  EXPECT_EQ(set.Query(20), -100);
  EXPECT_FALSE(set.Query(21));
  set.AddLine({0, 5});
  EXPECT_EQ(set.Query(21), 5);
  EXPECT_EQ(set.Query(15), -100);
  EXPECT_THROW(set.AddSegment({0, 0}, 3, 2), Error);
}

TEST(NaiveSetTest, WideSegmentEqualsLine) {
  NaiveSet a;
  NaiveSet b;
  a.AddLine({3, -2});
  b.AddSegment({3, -2}, -1000, 1000);
  for (Coord x = -1000; x <= 1000; x += 7) EXPECT_EQ(a.Query(x), b.Query(x));
}

TEST(NaiveSetTest, PrefixQuery) {
  NaiveSet set;
  set.AddLine({0, 10});
  set.AddLine({0, 3});
  set.AddLine({0, 7});
  EXPECT_FALSE(set.QueryPrefix(0, 1));
  EXPECT_EQ(set.QueryPrefix(1, 1), 10);
  EXPECT_EQ(set.QueryPrefix(2, 1), 3);
  EXPECT_EQ(set.QueryPrefix(99, 1), 3);
}

}  // namespace
}  // namespace lichao
