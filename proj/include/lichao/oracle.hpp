#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lichao/line.hpp"

namespace lichao {

// Brute-force reference: every inserted line or segment, answered by a linear
// scan with exact arithmetic.
class NaiveSet {
 public:
  struct Entry {
    Line line;
    // Inclusive bounds for segments; absent for full lines.
    std::optional<std::pair<Coord, Coord>> bounds;
  };

  void AddLine(const Line& line) { entries_.push_back(Entry{line, std::nullopt}); }

  // Throws kInvalidSegment if xl > xr.
  void AddSegment(const Line& line, Coord xl, Coord xr);

  // Minimum over entries covering x; absent if none does. Throws kOverflow if
  // a covering entry is not representable at x.
  Answer Query(Coord x) const { return QueryPrefix(entries_.size(), x); }

  // Same, over the first `count` entries only.
  Answer QueryPrefix(std::size_t count, Coord x) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace lichao
