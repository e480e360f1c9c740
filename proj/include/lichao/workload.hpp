#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lichao/line.hpp"

namespace lichao {

// SplitMix64 (Steele, Lea, Flood 2014). The output stream for a given seed is
// fixed by this code alone, so workloads regenerate identically across
// compilers and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t Next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform integer on [lo, hi] by Lemire's multiply-and-reject method.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) noexcept;

  // Independent stream derived from this one.
  SplitMix64 Split() noexcept { return SplitMix64(Next()); }

 private:
  std::uint64_t state_;
};

// Fisher-Yates with SplitMix64, so the permutation is reproducible.
template <typename T>
void Shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.Uniform(0, static_cast<std::int64_t>(i - 1)));
    std::swap(items[i - 1], items[j]);
  }
}

enum class OpKind : std::uint8_t { kAddLine, kAddSegment, kQuery };

struct Op {
  OpKind kind = OpKind::kQuery;
  Line line;
  // Query coordinate in xl; segment bounds in [xl, xr].
  Coord xl = 0;
  Coord xr = 0;

  static Op AddLine(Line line) { return Op{OpKind::kAddLine, line, 0, 0}; }
  static Op AddSegment(Line line, Coord xl, Coord xr) {
    return Op{OpKind::kAddSegment, line, xl, xr};
  }
  static Op Query(Coord x) { return Op{OpKind::kQuery, {}, x, 0}; }

  bool is_insert() const noexcept { return kind != OpKind::kQuery; }

  friend bool operator==(const Op&, const Op&) = default;
};

enum class Distribution { kRandom, kHull };

std::string_view ToString(Distribution d);
// Accepts "random" and "hull". Throws kParse otherwise.
Distribution ParseDistribution(std::string_view name);

struct Workload {
  Domain domain;
  std::vector<Op> ops;
  std::string label;
  std::uint64_t seed = 0;
  // Universe sized to the op count (N = C); the only kind a ZkwTree accepts.
  bool static_universe = false;

  std::size_t insert_count() const;
  std::size_t query_count() const { return ops.size() - insert_count(); }
  bool has_segments() const;
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::int64_t kCoordBound = 1'000'000'000;

struct RandomWorkloadRange {
  // Query coordinates and the tree domain.
  Coord lo = -kCoordBound;
  Coord hi = kCoordBound;
  // Slopes and intercepts drawn from [-coef_bound, coef_bound].
  std::int64_t coef_bound = kCoordBound;
};

// n/2 uniform random lines, then n - n/2 uniform random queries.
Workload GenRandomWorkload(std::size_t n, std::uint64_t seed,
                           const RandomWorkloadRange& range = {});

// Lines y = -(i+1)x + (i+1)^2 for i < n/2, strictly alternating with uniform
// queries on [-1e9, 1e9]; leftover ops are queries. Throws kOverflow when the
// largest line is not representable over the domain.
Workload GenHullWorkload(std::size_t n, std::uint64_t seed);

// Static universe with C = n: n/2 insertions followed by n - n/2 queries.
//   random: domain [-n/2, n/2], k, b and x uniform on it.
//   hull:   domain [0, n], the hull family in shuffled order, x uniform on it.
Workload GenNcWorkload(std::size_t n, Distribution distribution, std::uint64_t seed);

}  // namespace lichao
