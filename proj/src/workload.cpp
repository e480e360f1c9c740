#include "lichao/workload.hpp"

#include <algorithm>
#include <string>

namespace lichao {

std::int64_t SplitMix64::Uniform(std::int64_t lo, std::int64_t hi) noexcept {
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(Next());
  const std::uint64_t range = span + 1;
  unsigned __int128 m = static_cast<unsigned __int128>(Next()) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(Next()) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   static_cast<std::uint64_t>(m >> 64));
}

std::string_view ToString(Distribution d) {
  return d == Distribution::kRandom ? "random" : "hull";
}

Distribution ParseDistribution(std::string_view name) {
  if (name == "random") return Distribution::kRandom;
  if (name == "hull") return Distribution::kHull;
  throw Error(ErrorKind::kParse, "unknown distribution '" + std::string(name) + "'");
}

std::size_t Workload::insert_count() const {
  return static_cast<std::size_t>(
      std::count_if(ops.begin(), ops.end(), [](const Op& op) { return op.is_insert(); }));
}

bool Workload::has_segments() const {
  return std::any_of(ops.begin(), ops.end(),
                     [](const Op& op) { return op.kind == OpKind::kAddSegment; });
}

Workload GenRandomWorkload(std::size_t n, std::uint64_t seed,
                           const RandomWorkloadRange& range) {
  Workload w;
  w.domain = Domain::Make(range.lo, range.hi);
  w.label = "random";
  w.seed = seed;
  SplitMix64 rng(seed);
  const std::size_t inserts = n / 2;
  w.ops.reserve(n);
  for (std::size_t i = 0; i < inserts; ++i) {
    const std::int64_t k = rng.Uniform(-range.coef_bound, range.coef_bound);
    const std::int64_t b = rng.Uniform(-range.coef_bound, range.coef_bound);
    w.ops.push_back(Op::AddLine({k, b}));
  }
  for (std::size_t i = inserts; i < n; ++i) {
    w.ops.push_back(Op::Query(rng.Uniform(range.lo, range.hi)));
  }
  return w;
}

Workload GenHullWorkload(std::size_t n, std::uint64_t seed) {
  Workload w;
  w.domain = Domain::Make(-kCoordBound, kCoordBound);
  w.label = "hull";
  w.seed = seed;
  const auto lines = static_cast<std::int64_t>(n / 2);
  if (lines > 0) {
    const __int128 last = static_cast<__int128>(lines) * lines;
    if (last > std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorKind::kOverflow, "hull workload intercepts exceed int64");
    }
    CheckRepresentable(Line{-lines, static_cast<std::int64_t>(last)}, w.domain.lo,
                       w.domain.hi);
  }
  SplitMix64 rng(seed);
  w.ops.reserve(n);
  for (std::int64_t i = 0; i < lines; ++i) {
    w.ops.push_back(Op::AddLine({-(i + 1), (i + 1) * (i + 1)}));
    w.ops.push_back(Op::Query(rng.Uniform(w.domain.lo, w.domain.hi)));
  }
  while (w.ops.size() < n) w.ops.push_back(Op::Query(rng.Uniform(w.domain.lo, w.domain.hi)));
  return w;
}

Workload GenNcWorkload(std::size_t n, Distribution distribution, std::uint64_t seed) {
  Workload w;
  w.label = std::string(ToString(distribution));
  w.seed = seed;
  w.static_universe = true;
  SplitMix64 rng(seed);
  const auto half = static_cast<std::int64_t>(n / 2);
  const std::size_t inserts = n / 2;
  w.ops.reserve(n);
  if (distribution == Distribution::kRandom) {
    w.domain = Domain::Make(-half, half);
    for (std::size_t i = 0; i < inserts; ++i) {
      const std::int64_t k = rng.Uniform(-half, half);
      const std::int64_t b = rng.Uniform(-half, half);
      w.ops.push_back(Op::AddLine({k, b}));
    }
  } else {
    w.domain = Domain::Make(0, static_cast<Coord>(n));
    const Line last{-half, half * half};
    if (half > 0) CheckRepresentable(last, w.domain.lo, w.domain.hi);
    for (std::int64_t i = 0; i < half; ++i) {
      w.ops.push_back(Op::AddLine({-(i + 1), (i + 1) * (i + 1)}));
    }
    Shuffle(w.ops, rng);
  }
  for (std::size_t i = inserts; i < n; ++i) {
    w.ops.push_back(Op::Query(rng.Uniform(w.domain.lo, w.domain.hi)));
  }
  return w;
}

}  // namespace lichao
