#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lichao/line.hpp"

namespace lichao {

// One hull line in min orientation. `p` is the last integer x at which this
// line is still <= its successor on the hull (INT64_MAX for the last line).
struct HullLine {
  std::int64_t k = 0;
  std::int64_t b = 0;
  std::int64_t p = 0;
};

// Dynamic convex hull trick: the lower envelope kept explicitly as a
// slope-ordered set of lines with integer breakpoints, in the style of the
// KACTL LineContainer.
//
// Breakpoints are exact floor/ceil divisions of 128-bit numerators; there is
// no floating point. A line is kept only if it is strictly below every other
// stored line at some integer x, so at most one line per slope survives and
// ties never leave redundant lines behind.
class HullContainer {
 public:
  HullContainer() = default;
  // Lines must be representable over `contract`; Insert enforces it.
  explicit HullContainer(Domain contract) : contract_(contract) {}

  // Throws kOverflow when the line violates the representability contract.
  void Insert(const Line& line);

  // Minimum at x; absent on an empty hull. Throws kOverflow if the winning
  // line is not representable at x.
  Answer Query(Coord x) const;

  std::size_t size() const noexcept { return lines_.size(); }
  bool empty() const noexcept { return lines_.empty(); }

  // Hull lines in the order they appear along the envelope (increasing x).
  std::vector<HullLine> Lines() const;

 private:
  // Internally max-oriented on negated lines.
  // p: last integer x where this line is >= its successor, floor(t).
  // q: last integer x where this line is strictly > its successor, ceil(t)-1.
  struct Entry {
    std::int64_t k;
    std::int64_t b;
    mutable std::int64_t p = 0;
    mutable std::int64_t q = 0;

    bool operator<(const Entry& o) const { return k < o.k; }
    bool operator<(std::int64_t x) const { return p < x; }
  };
  using Set = std::multiset<Entry, std::less<>>;
  using Iter = Set::iterator;

  // Sets x's breakpoints against its successor y and reports whether y is
  // never strictly best once x precedes it.
  bool Intersect(Iter x, Iter y);

  Set lines_;
  std::optional<Domain> contract_;
};

}  // namespace lichao
