#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lichao/line.hpp"
#include "lichao/workload.hpp"

namespace lichao {

enum class Algo { kLict, kZkw, kCht };

std::string_view ToString(Algo algo);
// Accepts "lict", "zkw" and "cht". Throws kParse otherwise.
Algo ParseAlgo(std::string_view name);

// Throws kAlgoMismatch unless `algo` can run every op of `workload`: zkw needs
// a static-universe workload without segments, cht needs no segments.
void CheckSupports(Algo algo, const Workload& workload);

struct BenchResult {
  std::string algo;
  std::size_t n = 0;
  std::string distribution;
  double insert_ms = 0;
  double query_ms = 0;
  double total_ms = 0;
  // Population coefficient of variation of total_ms across reps.
  double cv = 0;
  // Fold of every query answer in op order.
  std::uint64_t checksum = 0;

  friend bool operator==(const BenchResult&, const BenchResult&) = default;
};

inline constexpr std::uint64_t kChecksumSeed = 0x6c696368616f0001ull;

std::uint64_t FoldAnswer(std::uint64_t h, const Answer& answer) noexcept;

// Untimed single pass; the checksum `algo` produces on `workload`.
std::uint64_t ComputeChecksum(const Workload& workload, Algo algo);

// Runs the op list `reps` times, each on a freshly built structure. Building
// the structure and insert ops count toward insert_ms, query ops toward
// query_ms. Throws kChecksumDivergence if the reps disagree with each other or
// with `expected_checksum`.
BenchResult RunBenchmark(const Workload& workload, Algo algo, int reps,
                         std::optional<std::uint64_t> expected_checksum = std::nullopt);

inline constexpr std::string_view kCsvHeader =
    "n,distribution,algo,insert_ms,query_ms,total_ms,cv,checksum";

std::string FormatCsvRow(const BenchResult& result);
// Inverse of FormatCsvRow. Throws kParse.
BenchResult ParseCsvRow(std::string_view row);

// Header plus one row per result. Throws kIo.
void WriteCsv(std::span<const BenchResult> results, const std::string& path);
// Appends one row, writing the header first if the file is new or empty.
void AppendCsv(const BenchResult& result, const std::string& path);
// Reads a file written by WriteCsv/AppendCsv. Throws kIo or kParse.
std::vector<BenchResult> ReadCsv(const std::string& path);

}  // namespace lichao
