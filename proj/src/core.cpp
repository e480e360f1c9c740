#include "lichao/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lichao {

LiChaoTree::LiChaoTree(Domain domain, Orientation orientation)
    : domain_(Domain::Make(domain.lo, domain.hi)), orientation_(orientation) {}

LiChaoTree::Handle LiChaoTree::Allocate(int depth) {
  if (nodes_.size() >= kNil) {
    throw std::length_error("LiChaoTree: node arena exhausted");
  }
  nodes_.emplace_back();
  max_depth_ = std::max(max_depth_, depth);
  return static_cast<Handle>(nodes_.size() - 1);
}

LiChaoTree::Handle LiChaoTree::AllocateWithLine(const Line& line, int depth,
                                                int entry_depth) {
  const Handle h = Allocate(depth);
  Node& node = nodes_[h];
  node.line = line;
  node.has_line = true;
  node.entry_depth = static_cast<std::uint8_t>(entry_depth);
  return h;
}

void LiChaoTree::AuditRouting(const Line& winner, const Line& loser, Coord lo,
                              Coord hi) {
  if (EvalWide(winner, lo) > EvalWide(loser, lo) ||
      EvalWide(winner, hi) > EvalWide(loser, hi)) {
    ++routing_violations_;
  }
}

void LiChaoTree::InsertFrom(Handle node, Coord l, Coord r, int depth, Line line,
                            int entry_depth) {
  for (;;) {
    ++last_visits_;
    Node& n = nodes_[node];
    if (!n.has_line) {
      n.line = line;
      n.has_line = true;
      n.entry_depth = static_cast<std::uint8_t>(entry_depth);
      return;
    }
    const Coord m = Midpoint(l, r);
    const bool lef = EvalUnchecked(line, l) < EvalUnchecked(n.line, l);
    const bool midf = EvalUnchecked(line, m) < EvalUnchecked(n.line, m);
    if (midf) {
      std::swap(n.line, line);
      const auto resident_entry = n.entry_depth;
      n.entry_depth = static_cast<std::uint8_t>(entry_depth);
      entry_depth = resident_entry;
    }
    if (l == r) {
      if (routing_audit_) AuditRouting(n.line, line, l, r);
      return;
    }
    if (lef != midf) {
      if (routing_audit_) AuditRouting(n.line, line, m + 1, r);
      r = m;
      ++depth;
      if (n.left == kNil) {
        ++last_visits_;
        const Handle child = AllocateWithLine(line, depth, entry_depth);
        nodes_[node].left = child;
        return;
      }
      node = n.left;
    } else {
      if (routing_audit_) AuditRouting(n.line, line, l, m);
      l = m + 1;
      ++depth;
      if (n.right == kNil) {
        ++last_visits_;
        const Handle child = AllocateWithLine(line, depth, entry_depth);
        nodes_[node].right = child;
        return;
      }
      node = n.right;
    }
  }
}

void LiChaoTree::InsertLine(const Line& input) {
  const Line line =
      orientation_ == Orientation::kMax ? Negate(input) : input;
  CheckRepresentable(line, domain_.lo, domain_.hi);
  last_visits_ = 0;
  if (root_ == kNil) {
    last_visits_ = 1;
    root_ = AllocateWithLine(line, 0, 0);
    return;
  }
  InsertFrom(root_, domain_.lo, domain_.hi, 0, line, 0);
}

LiChaoTree::Handle LiChaoTree::InsertSegmentAt(Handle node, Coord l, Coord r,
                                               int depth, const Line& line,
                                               Coord xl, Coord xr) {
  if (xl <= l && r <= xr) {
    if (node == kNil) {
      ++last_visits_;
      return AllocateWithLine(line, depth, depth);
    }
    InsertFrom(node, l, r, depth, line, depth);
    return node;
  }
  ++last_visits_;
  if (node == kNil) node = Allocate(depth);
  const Coord m = Midpoint(l, r);
  if (xl <= m) {
    const Handle child =
        InsertSegmentAt(nodes_[node].left, l, m, depth + 1, line, xl, xr);
    nodes_[node].left = child;
  }
  if (xr > m) {
    const Handle child =
        InsertSegmentAt(nodes_[node].right, m + 1, r, depth + 1, line, xl, xr);
    nodes_[node].right = child;
  }
  return node;
}

void LiChaoTree::InsertSegment(const Line& input, Coord xl, Coord xr) {
  if (xl > xr) {
    throw Error(ErrorKind::kInvalidSegment,
                "segment [" + std::to_string(xl) + ", " + std::to_string(xr) +
                    "] has xl > xr");
  }
  last_visits_ = 0;
  if (xr < domain_.lo || domain_.hi < xl) return;
  xl = std::max(xl, domain_.lo);
  xr = std::min(xr, domain_.hi);
  const Line line =
      orientation_ == Orientation::kMax ? Negate(input) : input;
  CheckRepresentable(line, xl, xr);
  root_ = InsertSegmentAt(root_, domain_.lo, domain_.hi, 0, line, xl, xr);
}

Answer LiChaoTree::Query(Coord x, std::size_t* visited) const {
  if (!domain_.Contains(x)) {
    throw Error(ErrorKind::kOutOfDomain,
                "query x = " + std::to_string(x) + " outside domain [" +
                    std::to_string(domain_.lo) + ", " +
                    std::to_string(domain_.hi) + "]");
  }
  std::size_t steps = 0;
  bool found = false;
  Value best = 0;
  Coord l = domain_.lo;
  Coord r = domain_.hi;
  Handle node = root_;
  while (node != kNil) {
    ++steps;
    const Node& n = nodes_[node];
    if (n.has_line) {
      const Value v = EvalUnchecked(n.line, x);
      if (!found || v < best) best = v;
      found = true;
    }
    if (l == r) break;
    const Coord m = Midpoint(l, r);
    if (x <= m) {
      r = m;
      node = n.left;
    } else {
      l = m + 1;
      node = n.right;
    }
  }
  if (visited != nullptr) *visited = steps;
  if (!found) return std::nullopt;
  return orientation_ == Orientation::kMax ? -best : best;
}

TreeStats LiChaoTree::Stats() const noexcept {
  return TreeStats{nodes_.size(), max_depth_};
}

std::size_t LiChaoTree::CountMidpointViolations() const {
  struct Ancestor {
    Coord m;
    Line line;
    int depth;
    bool has_line;
  };
  struct Frame {
    Handle node;
    Coord l, r;
    int depth;
  };
  std::size_t violations = 0;
  if (root_ == kNil) return 0;
  std::vector<Ancestor> path;
  std::vector<Frame> stack{{root_, domain_.lo, domain_.hi, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Node& n = nodes_[f.node];
    path.resize(static_cast<std::size_t>(f.depth));
    if (n.has_line) {
      for (const Ancestor& a : path) {
        if (!a.has_line || a.depth < n.entry_depth) continue;
        if (EvalWide(a.line, a.m) > EvalWide(n.line, a.m)) ++violations;
      }
    }
    const Coord m = Midpoint(f.l, f.r);
    path.push_back(Ancestor{m, n.line, f.depth, n.has_line});
    if (f.l == f.r) continue;
    if (n.right != kNil) stack.push_back({n.right, m + 1, f.r, f.depth + 1});
    if (n.left != kNil) stack.push_back({n.left, f.l, m, f.depth + 1});
  }
  return violations;
}

}  // namespace lichao
