#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lichao/line.hpp"

namespace lichao {

enum class Orientation { kMin, kMax };

struct TreeStats {
  std::size_t node_count = 0;
  // Depth of the deepest allocated node, root at depth 0; 0 for an empty tree.
  int max_depth_observed = 0;
};

// Dynamic Li-Chao tree over an inclusive integer domain.
//
// Each node owns an implicit interval [l, r] with midpoint m = floor((l+r)/2);
// its children cover [l, m] and [m+1, r], and a node with l == r is a leaf.
// A node stores at most one line: the one with the lowest value at m among the
// lines routed through it. Nodes are allocated lazily in a flat arena, so a
// tree that only ever sees full lines holds at most one node per insertion.
//
// A kMax tree stores negated lines and negates answers; all routing is done on
// the min side.
//
// Not thread-safe for writers. Const member functions may run concurrently.
class LiChaoTree {
 public:
  explicit LiChaoTree(Domain domain, Orientation orientation = Orientation::kMin);

  const Domain& domain() const noexcept { return domain_; }
  Orientation orientation() const noexcept { return orientation_; }

  // Throws kOverflow if the line is not representable over the whole domain.
  void InsertLine(const Line& line);

  // Inserts the line restricted to [xl, xr] clamped to the domain. A segment
  // that misses the domain is a no-op. Throws kInvalidSegment if xl > xr.
  void InsertSegment(const Line& line, Coord xl, Coord xr);

  // Envelope value at x (min or max by orientation); absent when no stored line
  // covers x. Throws kOutOfDomain. When `visited` is non-null it receives the
  // number of nodes walked.
  Answer Query(Coord x, std::size_t* visited = nullptr) const;

  TreeStats Stats() const noexcept;

  // Nodes visited by the most recent insertion (line or segment).
  std::size_t last_insert_visits() const noexcept { return last_visits_; }

  // When enabled, every routing step checks that the winner is <= the loser
  // at both endpoints of the child the loser is not sent to.
  void set_routing_audit(bool enabled) noexcept { routing_audit_ = enabled; }
  std::size_t routing_violations() const noexcept { return routing_violations_; }

  // Full traversal: counts (node, line) pairs where a line stored below a node
  // and routed through it beats that node's line at the node's midpoint.
  // Zero for any correctly maintained tree.
  std::size_t CountMidpointViolations() const;

  void Reserve(std::size_t nodes) { nodes_.reserve(nodes); }

 private:
  using Handle = std::uint32_t;
  static constexpr Handle kNil = 0xffffffffu;

  struct Node {
    Line line;
    Handle left = kNil;
    Handle right = kNil;
    bool has_line = false;
    // Depth at which this line entered the tree: 0 for full lines, the depth
    // of the canonical node for segment pieces.
    std::uint8_t entry_depth = 0;
  };

  Handle Allocate(int depth);
  Handle AllocateWithLine(const Line& line, int depth, int entry_depth);
  void InsertFrom(Handle node, Coord l, Coord r, int depth, Line line,
                  int entry_depth);
  Handle InsertSegmentAt(Handle node, Coord l, Coord r, int depth,
                         const Line& line, Coord xl, Coord xr);
  void AuditRouting(const Line& winner, const Line& loser, Coord lo, Coord hi);

  Domain domain_;
  Orientation orientation_;
  std::vector<Node> nodes_;
  Handle root_ = kNil;
  int max_depth_ = 0;
  std::size_t last_visits_ = 0;
  bool routing_audit_ = false;
  std::size_t routing_violations_ = 0;
};

}  // namespace lichao
