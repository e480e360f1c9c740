#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "lichao/line.hpp"

namespace lichao {

// Append-only storage with stable element addresses. Elements live in fixed
// size chunks reached through a preallocated chunk table, so appending never
// moves existing elements and never reallocates the table.
//
// One writer may Append while readers access indices below a size they
// observed through size() (acquire).
template <typename T>
class ChunkedArena {
 public:
  static constexpr std::size_t kChunkBits = 14;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 16;

  ChunkedArena() : chunks_(std::make_unique<std::unique_ptr<T[]>[]>(kMaxChunks)) {}

  std::size_t size() const noexcept { return size_.load(std::memory_order_acquire); }

  const T& operator[](std::size_t i) const noexcept {
    return chunks_[i >> kChunkBits][i & (kChunkSize - 1)];
  }

  std::size_t Append(const T& value) {
    const std::size_t i = size_.load(std::memory_order_relaxed);
    const std::size_t chunk = i >> kChunkBits;
    if (chunk >= kMaxChunks) throw std::length_error("ChunkedArena: full");
    if (!chunks_[chunk]) chunks_[chunk] = std::make_unique<T[]>(kChunkSize);
    chunks_[chunk][i & (kChunkSize - 1)] = value;
    size_.store(i + 1, std::memory_order_release);
    return i;
  }

 private:
  std::unique_ptr<std::unique_ptr<T[]>[]> chunks_;
  std::atomic<std::size_t> size_{0};
};

struct VersionId {
  std::uint32_t value = 0;
  friend bool operator==(VersionId, VersionId) = default;
};

// Fully persistent min-oriented Li-Chao tree by path copying.
//
// Version 0 is empty. Insert(base, line) copies the single root-to-leaf path
// the line is routed along and returns a new version; every node off that path
// is shared with `base`. Nodes are written once and never modified, so every
// version keeps answering exactly as it did when it was created.
//
// Insert calls must be serialized. Query on a version returned by a completed
// Insert is safe concurrently with other queries and with one Insert in
// flight: a version is published only after all its nodes are stored.
class PersistentLiChao {
 public:
  using Handle = std::uint32_t;
  static constexpr Handle kNil = 0xffffffffu;

  struct Node {
    Line line;
    Handle left = kNil;
    Handle right = kNil;
  };

  explicit PersistentLiChao(Domain domain);

  const Domain& domain() const noexcept { return domain_; }

  static constexpr VersionId Empty() noexcept { return VersionId{0}; }

  // Throws kUnknownVersion or kOverflow.
  VersionId Insert(VersionId base, const Line& line);

  // Throws kUnknownVersion or kOutOfDomain.
  Answer Query(VersionId version, Coord x) const;

  std::size_t version_count() const noexcept { return roots_.size(); }
  std::size_t arena_size() const noexcept { return nodes_.size(); }

  // Structural access for audits.
  Handle root(VersionId version) const;
  const Node& node(Handle h) const noexcept { return nodes_[h]; }

  // Preorder dump of every node reachable from `version` (coefficients and
  // child handles, little-endian). Identical bytes mean an identical tree.
  std::vector<std::uint8_t> Serialize(VersionId version) const;

 private:
  void CheckVersion(VersionId version) const;

  Domain domain_;
  ChunkedArena<Node> nodes_;
  ChunkedArena<Handle> roots_;
};

}  // namespace lichao
