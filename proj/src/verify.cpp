#include "lichao/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "lichao/core.hpp"
#include "lichao/hull.hpp"
#include "lichao/oracle.hpp"
#include "lichao/persistent.hpp"
#include "lichao/zkw.hpp"

namespace lichao {
namespace {

constexpr std::int64_t kMaxFuzzUniverse = std::int64_t{1} << 40;
constexpr std::int64_t kFuzzSlopeBound = 1000;

// Off-path children of the fresh path must be the base version's handles, and
// the fresh path must be exactly the nodes appended by the insert.
bool SharesOffPath(const PersistentLiChao& forest, VersionId base, VersionId next,
                   std::size_t first_new) {
  using Handle = PersistentLiChao::Handle;
  constexpr Handle kNil = PersistentLiChao::kNil;
  Handle fresh = forest.root(next);
  Handle old = forest.root(base);
  std::size_t seen = 0;
  while (fresh != kNil) {
    if (fresh < first_new) return false;
    ++seen;
    const auto& n = forest.node(fresh);
    const Handle old_left = old == kNil ? kNil : forest.node(old).left;
    const Handle old_right = old == kNil ? kNil : forest.node(old).right;
    const bool left_fresh = n.left != kNil && n.left >= first_new;
    const bool right_fresh = n.right != kNil && n.right >= first_new;
    if (left_fresh && right_fresh) return false;
    if (left_fresh) {
      if (n.right != old_right) return false;
      fresh = n.left;
      old = old_left;
    } else if (right_fresh) {
      if (n.left != old_left) return false;
      fresh = n.right;
      old = old_right;
    } else {
      if (n.left != old_left || n.right != old_right) return false;
      break;
    }
  }
  return seen == forest.arena_size() - first_new;
}

}  // namespace

Workload GenFuzzWorkload(const VerifyOptions& options) {
  if (options.universe < 1 || options.universe > kMaxFuzzUniverse) {
    throw Error(ErrorKind::kInvalidSize,
                "fuzz universe must be in [1, 2^40], got " + std::to_string(options.universe));
  }
  const std::int64_t c = options.universe;
  Workload w;
  w.domain = Domain::Make(0, c - 1);
  w.label = options.segments ? "fuzz-segments" : "fuzz";
  w.seed = options.seed;
  SplitMix64 rng(options.seed);
  const std::int64_t b_bound = kFuzzSlopeBound * c;
  const std::int64_t margin = c / 8 + 1;
  w.ops.reserve(options.ops);
  for (std::size_t i = 0; i < options.ops; ++i) {
    const std::int64_t roll = rng.Uniform(0, 99);
    const bool add_line = options.segments ? roll < 35 : roll < 50;
    const bool add_segment = options.segments && roll >= 35 && roll < 50;
    if (add_line || add_segment) {
      const Line line{rng.Uniform(-kFuzzSlopeBound, kFuzzSlopeBound),
                      rng.Uniform(-b_bound, b_bound)};
      if (add_line) {
        w.ops.push_back(Op::AddLine(line));
      } else {
        Coord a = rng.Uniform(-margin, c - 1 + margin);
        Coord b = rng.Uniform(-margin, c - 1 + margin);
        if (a > b) std::swap(a, b);
        w.ops.push_back(Op::AddSegment(line, a, b));
      }
    } else {
      w.ops.push_back(Op::Query(rng.Uniform(0, c - 1)));
    }
  }
  return w;
}

std::vector<Op> VerifyReport::FailingPrefix() const {
  if (!divergence) return {};
  const auto end = workload.ops.begin() + static_cast<std::ptrdiff_t>(divergence->op_index + 1);
  return std::vector<Op>(workload.ops.begin(), end);
}

VerifyReport RunVerify(const VerifyOptions& options) {
  VerifyReport report;
  report.workload = GenFuzzWorkload(options);
  const Workload& w = report.workload;
  const Domain domain = w.domain;
  const bool full_lines_only = !w.has_segments();
  const auto path_bound = static_cast<std::size_t>(domain.Depth()) + 1;
  const std::size_t segment_bound = 4 * path_bound * path_bound;

  LiChaoTree tree(domain);
  tree.set_routing_audit(true);
  NaiveSet oracle;

  std::optional<ZkwTree> zkw;
  std::optional<HullContainer> hull;
  std::size_t zkw_bound = 0;
  if (full_lines_only) {
    zkw.emplace(domain.lo, options.universe);
    zkw_bound = static_cast<std::size_t>(std::countr_zero(zkw->padded_size())) + 1;
    hull.emplace(domain);
  }

  std::optional<PersistentLiChao> forest;
  NaiveSet line_oracle;
  std::map<std::uint32_t, std::vector<std::uint8_t>> snapshots;
  if (options.persistent) forest.emplace(domain);
  SplitMix64 probe_rng(options.seed ^ 0x7065727369737431ull);

  std::size_t line_inserts = 0;
  auto diverge = [&](std::size_t i, const char* algo, Answer expected, Answer actual) {
    report.divergence = Divergence{i, algo, expected, actual};
  };

  for (std::size_t i = 0; i < w.ops.size() && !report.divergence; ++i) {
    const Op& op = w.ops[i];
    switch (op.kind) {
      case OpKind::kAddLine: {
        ++line_inserts;
        tree.InsertLine(op.line);
        oracle.AddLine(op.line);
        report.max_line_insert_visits =
            std::max(report.max_line_insert_visits, tree.last_insert_visits());
        if (tree.last_insert_visits() > path_bound) ++report.visit_bound_violations;
        if (full_lines_only && tree.Stats().node_count > line_inserts) {
          ++report.node_count_violations;
        }
        if (zkw) {
          zkw->Insert(op.line);
          if (zkw->last_insert_steps() > zkw_bound) ++report.visit_bound_violations;
        }
        if (hull) hull->Insert(op.line);
        if (forest) {
          const VersionId base{static_cast<std::uint32_t>(forest->version_count() - 1)};
          const std::size_t before = forest->arena_size();
          const VersionId next = forest->Insert(base, op.line);
          line_oracle.AddLine(op.line);
          if (forest->arena_size() - before > path_bound) ++report.persistence_violations;
          if (!SharesOffPath(*forest, base, next, before)) ++report.persistence_violations;
          if (std::has_single_bit(next.value)) snapshots[next.value] = forest->Serialize(next);
        }
        break;
      }
      case OpKind::kAddSegment: {
        tree.InsertSegment(op.line, op.xl, op.xr);
        oracle.AddSegment(op.line, op.xl, op.xr);
        report.max_segment_insert_visits =
            std::max(report.max_segment_insert_visits, tree.last_insert_visits());
        if (tree.last_insert_visits() > segment_bound) ++report.visit_bound_violations;
        break;
      }
      case OpKind::kQuery: {
        ++report.queries_checked;
        const Answer expected = oracle.Query(op.xl);
        std::size_t visited = 0;
        const Answer got = tree.Query(op.xl, &visited);
        report.max_query_visits = std::max(report.max_query_visits, visited);
        if (visited > path_bound) ++report.visit_bound_violations;
        if (got != expected) {
          diverge(i, "lict", expected, got);
          break;
        }
        if (zkw && zkw->Query(op.xl) != expected) {
          diverge(i, "zkw", expected, zkw->Query(op.xl));
          break;
        }
        if (hull && hull->Query(op.xl) != expected) {
          diverge(i, "cht", expected, hull->Query(op.xl));
          break;
        }
        if (forest) {
          const VersionId latest{static_cast<std::uint32_t>(forest->version_count() - 1)};
          const Answer want = line_oracle.Query(op.xl);
          if (forest->Query(latest, op.xl) != want) {
            diverge(i, "persistent", want, forest->Query(latest, op.xl));
            break;
          }
          // An older version must still answer for its own line prefix.
          const auto old = static_cast<std::uint32_t>(
              probe_rng.Uniform(0, static_cast<std::int64_t>(latest.value)));
          const Answer old_want = line_oracle.QueryPrefix(old, op.xl);
          if (forest->Query(VersionId{old}, op.xl) != old_want) {
            diverge(i, "persistent", old_want, forest->Query(VersionId{old}, op.xl));
            break;
          }
        }
        break;
      }
    }
  }

  report.routing_violations = tree.routing_violations();
  report.midpoint_violations = tree.CountMidpointViolations();
  if (forest) {
    for (const auto& [version, bytes] : snapshots) {
      if (forest->Serialize(VersionId{version}) != bytes) ++report.persistence_violations;
    }
  }
  return report;
}

}  // namespace lichao
