#include "lichao/core.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "lichao/oracle.hpp"
#include "lichao/workload.hpp"

namespace lichao {
namespace {

// Three lines over [0, 8]: x, 2x - 4 and x/2 + 2, with every coefficient
// doubled so all slopes are integral.
constexpr Line kF0{2, 0};
constexpr Line kF1{4, -8};
constexpr Line kF2{1, 4};
constexpr Line kFNew{-2, 20};

LiChaoTree SwapScenarioTree() {
  LiChaoTree tree(Domain::Make(0, 8));
  tree.set_routing_audit(true);
  tree.InsertLine(kF0);
  tree.InsertLine(kF1);
  tree.InsertLine(kF2);
  return tree;
}

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no lichao::Error thrown";
  return ErrorKind::kIo;
}

TEST(CoreTest, NewTreeIsEmpty) {
  LiChaoTree tree(Domain::Make(0, 8));
  EXPECT_EQ(tree.Stats().node_count, 0u);
  EXPECT_EQ(tree.Stats().max_depth_observed, 0);
  for (Coord x = 0; x <= 8; ++x) EXPECT_FALSE(tree.Query(x).has_value());
}

TEST(CoreTest, SinglePointDomain) {
  LiChaoTree tree(Domain::Make(5, 5));
  tree.InsertLine({3, 1});
  tree.InsertLine({-1, 30});
  EXPECT_EQ(tree.Query(5), 16);
  EXPECT_EQ(tree.Stats().node_count, 1u);
}

TEST(CoreTest, InvalidDomain) {
  EXPECT_EQ(KindOf([] { LiChaoTree t(Domain{3, 1}); }), ErrorKind::kInvalidDomain);
}

TEST(CoreTest, InsertIntoEmptyCreatesRoot) {
  LiChaoTree tree(Domain::Make(0, 8));
  tree.InsertLine({2, 0});
  EXPECT_EQ(tree.Stats().node_count, 1u);
  EXPECT_EQ(tree.last_insert_visits(), 1u);
  EXPECT_EQ(tree.Query(5), 10);
}

TEST(CoreTest, SwapScenarioInsertionSwapsAndDisplaces) {
  LiChaoTree tree = SwapScenarioTree();
  // f0 at the root, f1 left, f2 right: three nodes, one per insert.
  EXPECT_EQ(tree.Stats().node_count, 3u);
  EXPECT_EQ(tree.Stats().max_depth_observed, 1);

  // Root m = 4: f0(4) = 8 < fnew(4) = 12, so f0 stays and fnew goes right.
  // Right child [5, 8], m = 6: fnew(6) = 8 < f2(6) = 10, so fnew swaps in and
  // f2, lower at l = 5, is displaced into a new left grandchild.
  tree.InsertLine(kFNew);
  EXPECT_EQ(tree.Stats().node_count, 4u);
  EXPECT_EQ(tree.Stats().max_depth_observed, 2);
  EXPECT_EQ(tree.last_insert_visits(), 3u);
  EXPECT_EQ(tree.routing_violations(), 0u);
  EXPECT_EQ(tree.CountMidpointViolations(), 0u);
}

TEST(CoreTest, SwapScenarioQueryWalksThreeNodes) {
  LiChaoTree tree = SwapScenarioTree();
  tree.InsertLine(kFNew);
  std::size_t visited = 0;
  // f0(5) = 10, fnew(5) = 10, f2(5) = 9: the envelope value 4.5, doubled.
  EXPECT_EQ(tree.Query(5, &visited), 9);
  EXPECT_EQ(visited, 3u);

  NaiveSet oracle;
  for (const Line& l : {kF0, kF1, kF2, kFNew}) oracle.AddLine(l);
  for (Coord x = 0; x <= 8; ++x) EXPECT_EQ(tree.Query(x), oracle.Query(x)) << "x=" << x;
}

TEST(CoreTest, DuplicateLineKeepsAnswers) {
  LiChaoTree tree = SwapScenarioTree();
  std::vector<Answer> before;
  for (Coord x = 0; x <= 8; ++x) before.push_back(tree.Query(x));
  const std::size_t nodes = tree.Stats().node_count;
  tree.InsertLine(kF2);
  EXPECT_LE(tree.Stats().node_count, nodes + 1);
  for (Coord x = 0; x <= 8; ++x) EXPECT_EQ(tree.Query(x), before[static_cast<std::size_t>(x)]);
  tree.InsertLine(kF0);
  tree.InsertLine(kF0);
  for (Coord x = 0; x <= 8; ++x) EXPECT_EQ(tree.Query(x), before[static_cast<std::size_t>(x)]);
  EXPECT_EQ(tree.CountMidpointViolations(), 0u);
}

TEST(CoreTest, QueryOutOfDomain) {
  LiChaoTree tree(Domain::Make(0, 8));
  EXPECT_EQ(KindOf([&] { tree.Query(9); }), ErrorKind::kOutOfDomain);
  EXPECT_EQ(KindOf([&] { tree.Query(-1); }), ErrorKind::kOutOfDomain);
}

TEST(CoreTest, OverflowRejectedAtInsertion) {
  LiChaoTree tree(Domain::Make(0, 1'000'000'000));
  EXPECT_EQ(KindOf([&] { tree.InsertLine({std::int64_t{1} << 40, 0}); }), ErrorKind::kOverflow);
  EXPECT_EQ(tree.Stats().node_count, 0u);
  // Fits over the whole domain: fine.
  tree.InsertLine({std::int64_t{1} << 32, -(std::int64_t{1} << 62)});
  EXPECT_EQ(tree.Query(0), -(std::int64_t{1} << 62));
}

TEST(CoreSegmentTest, FullDomainSegmentEqualsLine) {
  LiChaoTree by_line(Domain::Make(0, 100));
  LiChaoTree by_segment(Domain::Make(0, 100));
  by_line.InsertLine({3, -7});
  by_segment.InsertSegment({3, -7}, 0, 100);
  by_line.InsertLine({-2, 150});
  by_segment.InsertSegment({-2, 150}, -50, 500);  // clamps to the domain
  EXPECT_EQ(by_line.Stats().node_count, by_segment.Stats().node_count);
  for (Coord x = 0; x <= 100; ++x) EXPECT_EQ(by_line.Query(x), by_segment.Query(x));
}

TEST(CoreSegmentTest, DisjointSegmentIsNoop) {
  LiChaoTree tree(Domain::Make(0, 100));
  tree.InsertSegment({1, 1}, -20, -1);
  tree.InsertSegment({1, 1}, 101, 200);
  EXPECT_EQ(tree.Stats().node_count, 0u);
  for (Coord x = 0; x <= 100; ++x) EXPECT_FALSE(tree.Query(x));
}

TEST(CoreSegmentTest, InvalidSegment) {
  LiChaoTree tree(Domain::Make(0, 100));
  EXPECT_EQ(KindOf([&] { tree.InsertSegment({1, 1}, 5, 4); }), ErrorKind::kInvalidSegment);
}

TEST(CoreSegmentTest, FlatSegmentCoversOnlyItsRange) {
  LiChaoTree tree(Domain::Make(0, 1023));
  NaiveSet oracle;
  tree.InsertSegment({0, 5}, 100, 899);
  oracle.AddSegment({0, 5}, 100, 899);
  for (Coord x : {50, 99, 100, 500, 899, 900}) EXPECT_EQ(tree.Query(x), oracle.Query(x)) << x;
  EXPECT_FALSE(tree.Query(50));
  EXPECT_EQ(tree.Query(500), 5);
  EXPECT_FALSE(tree.Query(900));
}

TEST(CoreSegmentTest, SegmentRepresentableOnlyWhereItLives) {
  // Overflows at x = 1e9 but not on [0, 10].
  LiChaoTree tree(Domain::Make(0, 1'000'000'000));
  const Line steep{std::int64_t{1} << 40, 0};
  tree.InsertSegment(steep, 0, 10);
  EXPECT_EQ(tree.Query(10), std::int64_t{10} << 40);
  EXPECT_FALSE(tree.Query(11));
  EXPECT_EQ(KindOf([&] { tree.InsertSegment(steep, 0, 1'000'000'000); }), ErrorKind::kOverflow);
}

TEST(CorePropertyTest, RandomLinesMatchNaiveMinimum) {
  SplitMix64 rng(2024);
  const Domain domain = Domain::Make(-1024, 1023);
  LiChaoTree tree(domain);
  NaiveSet oracle;
  for (int i = 0; i < 200; ++i) {
    const Line line{rng.Uniform(-1000, 1000), rng.Uniform(-1'000'000, 1'000'000)};
    tree.InsertLine(line);
    oracle.AddLine(line);
  }
  for (int i = 0; i < 200; ++i) {
    const Coord x = rng.Uniform(domain.lo, domain.hi);
    EXPECT_EQ(tree.Query(x), oracle.Query(x)) << "x=" << x;
  }
  EXPECT_LE(tree.Stats().node_count, 200u);
}

TEST(CorePropertyTest, StructuralBoundsUnderFuzz) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed);
    const Domain domain = Domain::Make(0, 1023);
    const std::size_t path = static_cast<std::size_t>(domain.Depth()) + 1;
    LiChaoTree tree(domain);
    tree.set_routing_audit(true);
    std::size_t inserts = 0;
    for (int i = 0; i < 2000; ++i) {
      tree.InsertLine({rng.Uniform(-100, 100), rng.Uniform(-100'000, 100'000)});
      ++inserts;
      EXPECT_LE(tree.last_insert_visits(), path);
      EXPECT_LE(tree.Stats().node_count, inserts);
      std::size_t visited = 0;
      tree.Query(rng.Uniform(0, 1023), &visited);
      EXPECT_LE(visited, path);
    }
    EXPECT_LE(tree.Stats().max_depth_observed, 10);
    EXPECT_EQ(tree.routing_violations(), 0u);
    EXPECT_EQ(tree.CountMidpointViolations(), 0u);
  }
}

TEST(CorePropertyTest, SegmentsMatchOracleAndKeepInvariants) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed * 7919);
    const Domain domain = Domain::Make(-300, 700);
    const std::size_t path = static_cast<std::size_t>(domain.Depth()) + 1;
    LiChaoTree tree(domain);
    tree.set_routing_audit(true);
    NaiveSet oracle;
    for (int i = 0; i < 600; ++i) {
      const Line line{rng.Uniform(-50, 50), rng.Uniform(-50'000, 50'000)};
      if (rng.Uniform(0, 2) == 0) {
        tree.InsertLine(line);
        oracle.AddLine(line);
      } else {
        Coord a = rng.Uniform(-400, 800);
        Coord b = rng.Uniform(-400, 800);
        if (a > b) std::swap(a, b);
        tree.InsertSegment(line, a, b);
        oracle.AddSegment(line, a, b);
        EXPECT_LE(tree.last_insert_visits(), 4 * path * path);
      }
    }
    for (Coord x = domain.lo; x <= domain.hi; ++x) {
      ASSERT_EQ(tree.Query(x), oracle.Query(x)) << "seed=" << seed << " x=" << x;
    }
    EXPECT_EQ(tree.routing_violations(), 0u);
    EXPECT_EQ(tree.CountMidpointViolations(), 0u);
  }
}

TEST(CorePropertyTest, TieOrderDoesNotChangeAnswers) {
  const Domain domain = Domain::Make(0, 64);
  // Pairs that tie at contested midpoints: identical lines, and lines that
  // cross exactly at a node midpoint (32, then 16 and 48).
  const std::vector<std::pair<Line, Line>> pairs = {
      {{3, 5}, {3, 5}}, {{1, 0}, {-1, 64}}, {{2, -32}, {-2, 32}}, {{1, 0}, {3, -96}}, {{0, 7}, {0, 7}}};
  for (const auto& [a, b] : pairs) {
    LiChaoTree ab(domain);
    LiChaoTree ba(domain);
    ab.InsertLine(a);
    ab.InsertLine(b);
    ba.InsertLine(b);
    ba.InsertLine(a);
    for (Coord x = domain.lo; x <= domain.hi; ++x) EXPECT_EQ(ab.Query(x), ba.Query(x));
  }
  // Random permutations of a tie-heavy set.
  SplitMix64 rng(99);
  std::vector<Line> lines;
  for (std::int64_t k = -4; k <= 4; ++k) lines.push_back({k, -k * 32});  // all meet at x = 32
  lines.push_back({0, 0});
  LiChaoTree reference(domain);
  for (const Line& l : lines) reference.InsertLine(l);
  for (int trial = 0; trial < 20; ++trial) {
    Shuffle(lines, rng);
    LiChaoTree tree(domain);
    for (const Line& l : lines) tree.InsertLine(l);
    for (Coord x = domain.lo; x <= domain.hi; ++x) ASSERT_EQ(tree.Query(x), reference.Query(x));
  }
}

TEST(CorePropertyTest, MaxTreeIsNegatedMinTree) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SplitMix64 rng(seed);
    const Domain domain = Domain::Make(-500, 500);
    LiChaoTree max_tree(domain, Orientation::kMax);
    LiChaoTree min_tree(domain, Orientation::kMin);
    EXPECT_EQ(max_tree.orientation(), Orientation::kMax);
    for (int i = 0; i < 300; ++i) {
      const Line line{rng.Uniform(-100, 100), rng.Uniform(-10'000, 10'000)};
      if (rng.Uniform(0, 3) == 0) {
        Coord a = rng.Uniform(-600, 600);
        Coord b = rng.Uniform(-600, 600);
        if (a > b) std::swap(a, b);
        max_tree.InsertSegment(line, a, b);
        min_tree.InsertSegment(Negate(line), a, b);
      } else {
        max_tree.InsertLine(line);
        min_tree.InsertLine(Negate(line));
      }
    }
    for (Coord x = domain.lo; x <= domain.hi; ++x) {
      const Answer hi = max_tree.Query(x);
      const Answer lo = min_tree.Query(x);
      ASSERT_EQ(hi.has_value(), lo.has_value());
      if (hi) {
        ASSERT_EQ(*hi, -*lo);
      }
    }
  }
}

TEST(CorePropertyTest, MaxTreeMatchesBruteMaximum) {
  SplitMix64 rng(5);
  const Domain domain = Domain::Make(0, 255);
  LiChaoTree tree(domain, Orientation::kMax);
  std::vector<Line> lines;
  for (int i = 0; i < 100; ++i) {
    lines.push_back({rng.Uniform(-50, 50), rng.Uniform(-5000, 5000)});
    tree.InsertLine(lines.back());
  }
  for (Coord x = 0; x <= 255; ++x) {
    Value best = Eval(lines[0], x);
    for (const Line& l : lines) best = std::max(best, Eval(l, x));
    ASSERT_EQ(tree.Query(x), best);
  }
}

TEST(CorePropertyTest, ExtremeDomainUsesExactMidpoints) {
  constexpr Coord kLo = std::numeric_limits<Coord>::min() / 2;
  constexpr Coord kHi = std::numeric_limits<Coord>::max() / 2;
  LiChaoTree tree(Domain::Make(kLo, kHi));
  NaiveSet oracle;
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Line line{rng.Uniform(-1, 1), rng.Uniform(-1000, 1000)};
    tree.InsertLine(line);
    oracle.AddLine(line);
  }
  for (int i = 0; i < 500; ++i) {
    const Coord x = rng.Uniform(kLo, kHi);
    ASSERT_EQ(tree.Query(x), oracle.Query(x));
  }
  EXPECT_LE(tree.Stats().max_depth_observed, 63);
  EXPECT_EQ(tree.CountMidpointViolations(), 0u);
}

}  // namespace
}  // namespace lichao
