#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lichao/line.hpp"

namespace lichao {

// Array-backed Li-Chao tree over the static universe [lo, lo + size - 1].
//
// The universe is padded to P = bit_ceil(size) and laid out as a 1-indexed
// heap: cell i covers an implicit interval and has children 2i and 2i + 1.
// Insertion and query are plain loops from cell 1 down to a leaf. All storage
// is allocated in the constructor.
//
// Routing compares lines with 128-bit values, so padded coordinates past the
// external range never overflow; they are not reachable through the API.
class ZkwTree {
 public:
  ZkwTree(Coord lo, std::int64_t size);

  Coord lo() const noexcept { return lo_; }
  Coord hi() const noexcept { return lo_ + (size_ - 1); }
  std::int64_t size() const noexcept { return size_; }
  std::size_t padded_size() const noexcept { return padded_; }
  std::size_t cell_count() const noexcept { return lines_.size(); }

  // Throws kOverflow if the line is not representable over [lo(), hi()].
  void Insert(const Line& line);

  // Throws kOutOfDomain outside [lo(), hi()].
  Answer Query(Coord x) const;

  // Loop iterations of the most recent Insert.
  std::size_t last_insert_steps() const noexcept { return last_steps_; }

 private:
  bool Occupied(std::size_t cell) const noexcept { return occupied_[cell] != 0; }

  Coord lo_;
  std::int64_t size_;
  std::size_t padded_;
  std::vector<Line> lines_;
  std::vector<std::uint8_t> occupied_;
  std::size_t last_steps_ = 0;
};

}  // namespace lichao
