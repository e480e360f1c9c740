#include "lichao/zkw.hpp"

#include <bit>
#include <limits>
#include <utility>

namespace lichao {

ZkwTree::ZkwTree(Coord lo, std::int64_t size) : lo_(lo), size_(size) {
  if (size < 1) {
    throw Error(ErrorKind::kInvalidSize,
                "zkw universe size must be >= 1, got " + std::to_string(size));
  }
  if (static_cast<std::uint64_t>(size) > (std::uint64_t{1} << 40)) {
    throw Error(ErrorKind::kInvalidSize, "zkw universe too large for a flat array");
  }
  padded_ = std::bit_ceil(static_cast<std::size_t>(size));
  // Padded coordinates are evaluated during routing, so they must exist too.
  if (lo > std::numeric_limits<Coord>::max() -
               static_cast<std::int64_t>(padded_ - 1)) {
    throw Error(ErrorKind::kInvalidDomain, "zkw universe exceeds int64 range");
  }
  lines_.resize(2 * padded_);
  occupied_.resize(2 * padded_);
}

void ZkwTree::Insert(const Line& input) {
  CheckRepresentable(input, lo(), hi());
  Line line = input;
  // Internal coordinates are offsets from lo_; cell 1 covers [0, padded_ - 1].
  std::size_t cell = 1;
  std::int64_t l = 0;
  std::int64_t r = static_cast<std::int64_t>(padded_) - 1;
  std::size_t steps = 0;
  for (;;) {
    ++steps;
    if (!Occupied(cell)) {
      lines_[cell] = line;
      occupied_[cell] = 1;
      break;
    }
    Line& resident = lines_[cell];
    const std::int64_t m = l + (r - l) / 2;
    const Coord xl = lo_ + l;
    const Coord xm = lo_ + m;
    const bool lef = EvalWide(line, xl) < EvalWide(resident, xl);
    const bool midf = EvalWide(line, xm) < EvalWide(resident, xm);
    if (midf) std::swap(resident, line);
    if (cell >= padded_) break;
    if (lef != midf) {
      cell = 2 * cell;
      r = m;
    } else {
      cell = 2 * cell + 1;
      l = m + 1;
    }
  }
  last_steps_ = steps;
}

Answer ZkwTree::Query(Coord x) const {
  if (x < lo() || x > hi()) {
    throw Error(ErrorKind::kOutOfDomain,
                "query x = " + std::to_string(x) + " outside zkw universe [" +
                    std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
  }
  // Leaf for internal coordinate t is padded_ + t; its ancestors are the
  // successive right shifts.
  bool found = false;
  Value best = 0;
  for (std::size_t cell = padded_ + static_cast<std::size_t>(x - lo_); cell >= 1;
       cell >>= 1) {
    if (!Occupied(cell)) continue;
    const Value v = EvalUnchecked(lines_[cell], x);
    if (!found || v < best) best = v;
    found = true;
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace lichao
