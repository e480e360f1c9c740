#include "lichao/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lichao/core.hpp"
#include "lichao/hull.hpp"
#include "lichao/zkw.hpp"

namespace lichao {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t Mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct LictRunner {
  LiChaoTree tree;
  explicit LictRunner(const Workload& w) : tree(w.domain) {}
  void Insert(const Op& op) {
    if (op.kind == OpKind::kAddSegment) {
      tree.InsertSegment(op.line, op.xl, op.xr);
    } else {
      tree.InsertLine(op.line);
    }
  }
  Answer Query(Coord x) const { return tree.Query(x); }
};

struct ZkwRunner {
  ZkwTree tree;
  explicit ZkwRunner(const Workload& w)
      : tree(w.domain.lo, static_cast<std::int64_t>(w.domain.Size())) {}
  void Insert(const Op& op) { tree.Insert(op.line); }
  Answer Query(Coord x) const { return tree.Query(x); }
};

struct ChtRunner {
  HullContainer hull;
  Domain domain;
  explicit ChtRunner(const Workload& w) : hull(w.domain), domain(w.domain) {}
  void Insert(const Op& op) { hull.Insert(op.line); }
  Answer Query(Coord x) const {
    if (!domain.Contains(x)) {
      throw Error(ErrorKind::kOutOfDomain, "query x = " + std::to_string(x) + " outside domain");
    }
    return hull.Query(x);
  }
};

struct RepTiming {
  double insert_ms = 0;
  double query_ms = 0;
  std::uint64_t checksum = kChecksumSeed;
};

double Ms(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

template <typename Runner>
RepTiming RunOnce(const Workload& w) {
  RepTiming out;
  Clock::duration insert_time{};
  Clock::duration query_time{};
  const auto build_start = Clock::now();
  Runner runner(w);
  insert_time += Clock::now() - build_start;

  const std::vector<Op>& ops = w.ops;
  std::size_t i = 0;
  while (i < ops.size()) {
    const bool inserting = ops[i].is_insert();
    std::size_t end = i;
    while (end < ops.size() && ops[end].is_insert() == inserting) ++end;
    const auto start = Clock::now();
    if (inserting) {
      for (std::size_t j = i; j < end; ++j) runner.Insert(ops[j]);
      insert_time += Clock::now() - start;
    } else {
      std::uint64_t h = out.checksum;
      for (std::size_t j = i; j < end; ++j) h = FoldAnswer(h, runner.Query(ops[j].xl));
      out.checksum = h;
      query_time += Clock::now() - start;
    }
    i = end;
  }
  out.insert_ms = Ms(insert_time);
  out.query_ms = Ms(query_time);
  return out;
}

RepTiming RunOnce(const Workload& w, Algo algo) {
  switch (algo) {
    case Algo::kLict:
      return RunOnce<LictRunner>(w);
    case Algo::kZkw:
      return RunOnce<ZkwRunner>(w);
    case Algo::kCht:
      return RunOnce<ChtRunner>(w);
  }
  return {};
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename T>
T ParseField(std::string_view field, const char* name) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kParse, std::string("bad CSV field ") + name + ": '" +
                                       std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string_view ToString(Algo algo) {
  switch (algo) {
    case Algo::kLict:
      return "lict";
    case Algo::kZkw:
      return "zkw";
    case Algo::kCht:
      return "cht";
  }
  return "unknown";
}

Algo ParseAlgo(std::string_view name) {
  if (name == "lict") return Algo::kLict;
  if (name == "zkw") return Algo::kZkw;
  if (name == "cht") return Algo::kCht;
  throw Error(ErrorKind::kParse, "unknown algorithm '" + std::string(name) + "'");
}

void CheckSupports(Algo algo, const Workload& workload) {
  if (algo == Algo::kZkw && !workload.static_universe) {
    throw Error(ErrorKind::kAlgoMismatch, "zkw requires a static-universe (N = C) workload");
  }
  if (algo != Algo::kLict && workload.has_segments()) {
    throw Error(ErrorKind::kAlgoMismatch,
                std::string(ToString(algo)) + " does not support segment insertion");
  }
}

std::uint64_t FoldAnswer(std::uint64_t h, const Answer& answer) noexcept {
  if (!answer) return Mix(h + 0x9e3779b97f4a7c15ull);
  return Mix((h + 0x632be59bd9b4e019ull) ^ static_cast<std::uint64_t>(*answer));
}

std::uint64_t ComputeChecksum(const Workload& workload, Algo algo) {
  CheckSupports(algo, workload);
  return RunOnce(workload, algo).checksum;
}

BenchResult RunBenchmark(const Workload& workload, Algo algo, int reps,
                         std::optional<std::uint64_t> expected_checksum) {
  CheckSupports(algo, workload);
  if (reps < 1) throw Error(ErrorKind::kInvalidSize, "reps must be >= 1");
  std::vector<RepTiming> runs;
  runs.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) runs.push_back(RunOnce(workload, algo));

  BenchResult result;
  result.algo = std::string(ToString(algo));
  result.n = workload.ops.size();
  result.distribution = workload.label;
  result.checksum = runs.front().checksum;
  for (const RepTiming& run : runs) {
    if (run.checksum != result.checksum) {
      throw Error(ErrorKind::kChecksumDivergence, "checksum differs between repetitions");
    }
    result.insert_ms += run.insert_ms;
    result.query_ms += run.query_ms;
  }
  if (expected_checksum && *expected_checksum != result.checksum) {
    throw Error(ErrorKind::kChecksumDivergence,
                std::string(ToString(algo)) + " checksum " + std::to_string(result.checksum) +
                    " != reference " + std::to_string(*expected_checksum));
  }
  const double count = static_cast<double>(reps);
  result.insert_ms /= count;
  result.query_ms /= count;
  result.total_ms = result.insert_ms + result.query_ms;
  double var = 0;
  for (const RepTiming& run : runs) {
    const double d = run.insert_ms + run.query_ms - result.total_ms;
    var += d * d;
  }
  var /= count;
  result.cv = result.total_ms > 0 ? std::sqrt(var) / result.total_ms : 0.0;
  return result;
}

std::string FormatCsvRow(const BenchResult& r) {
  std::string row;
  row += std::to_string(r.n);
  row += ',';
  row += r.distribution;
  row += ',';
  row += r.algo;
  row += ',';
  row += FormatDouble(r.insert_ms);
  row += ',';
  row += FormatDouble(r.query_ms);
  row += ',';
  row += FormatDouble(r.total_ms);
  row += ',';
  row += FormatDouble(r.cv);
  row += ',';
  row += std::to_string(r.checksum);
  return row;
}

BenchResult ParseCsvRow(std::string_view row) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = row.find(',', start);
    fields.push_back(row.substr(start, comma == std::string_view::npos ? row.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8) {
    throw Error(ErrorKind::kParse, "expected 8 CSV fields, got " + std::to_string(fields.size()));
  }
  BenchResult r;
  r.n = ParseField<std::size_t>(fields[0], "n");
  r.distribution = std::string(fields[1]);
  r.algo = std::string(fields[2]);
  r.insert_ms = ParseField<double>(fields[3], "insert_ms");
  r.query_ms = ParseField<double>(fields[4], "query_ms");
  r.total_ms = ParseField<double>(fields[5], "total_ms");
  r.cv = ParseField<double>(fields[6], "cv");
  r.checksum = ParseField<std::uint64_t>(fields[7], "checksum");
  return r;
}

void WriteCsv(std::span<const BenchResult> results, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path + " for writing");
  out << kCsvHeader << '\n';
  for (const BenchResult& r : results) out << FormatCsvRow(r) << '\n';
  if (!out) throw Error(ErrorKind::kIo, "write to " + path + " failed");
}

void AppendCsv(const BenchResult& result, const std::string& path) {
  bool needs_header = true;
  {
    std::ifstream in(path);
    needs_header = !in || in.peek() == std::ifstream::traits_type::eof();
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path + " for appending");
  if (needs_header) out << kCsvHeader << '\n';
  out << FormatCsvRow(result) << '\n';
  if (!out) throw Error(ErrorKind::kIo, "write to " + path + " failed");
}

std::vector<BenchResult> ReadCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorKind::kParse, path + ": missing CSV header");
  }
  std::vector<BenchResult> out;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(ParseCsvRow(line));
  }
  return out;
}

}  // namespace lichao
