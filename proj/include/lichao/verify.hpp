#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lichao/line.hpp"
#include "lichao/workload.hpp"

namespace lichao {

struct VerifyOptions {
  std::size_t ops = 10'000;
  // Universe size C; the fuzz domain is [0, C - 1].
  std::int64_t universe = 4096;
  std::uint64_t seed = 1;
  bool segments = false;
  bool persistent = false;
};

// Random interleaved op sequence over [0, universe - 1]. Without segments,
// half the ops add lines and half query; with segments, 35% lines, 15%
// segments, 50% queries. Slopes lie in [-1000, 1000] and intercepts in
// [-1000 C, 1000 C], so most crossings fall inside the domain.
Workload GenFuzzWorkload(const VerifyOptions& options);

struct Divergence {
  // Index of the divergent query in the op list.
  std::size_t op_index = 0;
  std::string algo;
  Answer expected;
  Answer actual;
};

struct VerifyReport {
  Workload workload;
  std::size_t queries_checked = 0;
  std::optional<Divergence> divergence;

  // Structural audits, all expected to stay zero.
  std::size_t node_count_violations = 0;
  std::size_t visit_bound_violations = 0;
  std::size_t routing_violations = 0;
  std::size_t midpoint_violations = 0;
  std::size_t persistence_violations = 0;

  std::size_t max_line_insert_visits = 0;
  std::size_t max_segment_insert_visits = 0;
  std::size_t max_query_visits = 0;

  bool ok() const noexcept {
    return !divergence && node_count_violations == 0 && visit_bound_violations == 0 &&
           routing_violations == 0 && midpoint_violations == 0 &&
           persistence_violations == 0;
  }

  // Ops up to and including the divergent query: the shortest prefix that
  // still reproduces the failure. Empty when there is no divergence.
  std::vector<Op> FailingPrefix() const;
};

// Replays a fuzz workload through the core tree and the brute-force oracle,
// plus the zkw tree and hull container when the workload has no segments and
// the persistent tree when requested. Stops at the first divergent answer.
//
// Audits along the way: per-op visit bounds (ceil(log2 C) + 1 for line inserts
// and queries, 4 (ceil(log2 C) + 1)^2 for segments), node_count <= line inserts
// for segment-free runs, routing dominance at every step, a full midpoint
// audit at the end, and for persistent runs per-insert node growth plus byte
// stability of earlier versions.
VerifyReport RunVerify(const VerifyOptions& options);

}  // namespace lichao
