// lichao: verification fuzzing, benchmarks and op-file replay.
//
// Exit codes: 0 success, 1 verification failure or checksum divergence,
// 2 usage, parse or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lichao/bench.hpp"
#include "lichao/ops_file.hpp"
#include "lichao/verify.hpp"
#include "lichao/workload.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string AnswerText(const lichao::Answer& a) {
  return a ? std::to_string(*a) : std::string(lichao::kInfLiteral);
}

struct BenchFlags {
  std::size_t n = 100'000;
  std::string dist = "random";
  std::string algo = "lict";
  bool nc = false;
  std::uint64_t seed = lichao::kDefaultSeed;
  int reps = 10;
  std::string csv;
};

int CmdBench(const BenchFlags& f) {
  const lichao::Algo algo = lichao::ParseAlgo(f.algo);
  const lichao::Distribution dist = lichao::ParseDistribution(f.dist);
  if (algo == lichao::Algo::kZkw && !f.nc) {
    std::cerr << "error: --algo zkw requires --nc\n";
    return kExitUsage;
  }
  if (f.n < 2) {
    std::cerr << "error: --n must be >= 2\n";
    return kExitUsage;
  }
  lichao::Workload w;
  if (f.nc) {
    w = lichao::GenNcWorkload(f.n, dist, f.seed);
  } else if (dist == lichao::Distribution::kRandom) {
    w = lichao::GenRandomWorkload(f.n, f.seed);
  } else {
    w = lichao::GenHullWorkload(f.n, f.seed);
  }
  // Every run is checked against an independent algorithm's answers.
  const lichao::Algo reference = algo == lichao::Algo::kCht ? lichao::Algo::kLict : lichao::Algo::kCht;
  const std::uint64_t expected = lichao::ComputeChecksum(w, reference);
  const lichao::BenchResult r = lichao::RunBenchmark(w, algo, f.reps, expected);
  if (!f.csv.empty()) lichao::AppendCsv(r, f.csv);
  std::cout << "n=" << r.n << " dist=" << r.distribution << (f.nc ? " (N=C)" : "")
            << " algo=" << r.algo << " insert_ms=" << r.insert_ms << " query_ms=" << r.query_ms
            << " total_ms=" << r.total_ms << " cv=" << r.cv << " checksum=" << r.checksum << '\n';
  return kExitOk;
}

int CmdVerify(const lichao::VerifyOptions& options) {
  const lichao::VerifyReport report = lichao::RunVerify(options);
  if (report.divergence) {
    const auto& d = *report.divergence;
    std::cout << "MISMATCH at op " << d.op_index << " (" << d.algo
              << "): expected " << AnswerText(d.expected) << ", got " << AnswerText(d.actual)
              << "\n# minimal failing prefix, domain [" << report.workload.domain.lo << ", "
              << report.workload.domain.hi << "]\n";
    for (const lichao::Op& op : report.FailingPrefix()) std::cout << lichao::FormatOp(op) << '\n';
    return kExitFailure;
  }
  std::cout << "verified " << report.queries_checked << " queries over " << report.workload.ops.size()
            << " ops (C=" << options.universe << ", seed=" << options.seed
            << (options.segments ? ", segments" : "") << (options.persistent ? ", persistent" : "")
            << ")\n"
            << "max visits: line insert " << report.max_line_insert_visits << ", segment insert "
            << report.max_segment_insert_visits << ", query " << report.max_query_visits << '\n';
  if (!report.ok()) {
    std::cout << "STRUCTURAL VIOLATIONS: node_count=" << report.node_count_violations
              << " visit_bound=" << report.visit_bound_violations
              << " routing=" << report.routing_violations
              << " midpoint=" << report.midpoint_violations
              << " persistence=" << report.persistence_violations << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

struct ReplayFlags {
  std::string file;
  std::string algo = "lict";
  std::vector<std::int64_t> domain;
};

int CmdReplay(const ReplayFlags& f) {
  std::ifstream in(f.file);
  if (!in) {
    std::cerr << "error: cannot open " << f.file << '\n';
    return kExitUsage;
  }
  const std::vector<lichao::Op> ops = lichao::ParseOps(in);
  const lichao::Domain domain = lichao::Domain::Make(f.domain.at(0), f.domain.at(1));
  lichao::Replay(ops, lichao::ParseAlgo(f.algo), domain, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Li-Chao tree verification, benchmark and replay harness"};
  app.require_subcommand(1);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time one algorithm on a generated workload");
  bench_cmd->add_option("--n", bench.n, "Operation count")->capture_default_str();
  bench_cmd->add_option("--dist", bench.dist, "Distribution: random | hull")
      ->check(CLI::IsMember({"random", "hull"}))
      ->capture_default_str();
  bench_cmd->add_option("--algo", bench.algo, "Algorithm: lict | zkw | cht")
      ->check(CLI::IsMember({"lict", "zkw", "cht"}))
      ->capture_default_str();
  bench_cmd->add_flag("--nc", bench.nc, "N = C static-universe workload");
  bench_cmd->add_option("--seed", bench.seed, "Workload seed")->capture_default_str();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "Append a result row to this CSV file");

  lichao::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Differential fuzzing against the brute-force oracle");
  verify_cmd->add_option("--ops", verify.ops, "Operation count")->capture_default_str();
  verify_cmd->add_option("--c", verify.universe, "Universe size C (domain [0, C-1])")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Fuzz seed")->capture_default_str();
  verify_cmd->add_flag("--segments", verify.segments, "Mix in segment insertions");
  verify_cmd->add_flag("--persistent", verify.persistent, "Also check the persistent tree");

  ReplayFlags replay;
  auto* replay_cmd = app.add_subcommand(
      "replay",
      "Run an op file (A k b | S k b xl xr | Q x; '#' comments) and print one answer per "
      "query, INF when no line covers the point");
  replay_cmd->add_option("--file", replay.file, "Op file")->required();
  replay_cmd->add_option("--algo", replay.algo, "Algorithm: lict | zkw | cht")
      ->check(CLI::IsMember({"lict", "zkw", "cht"}))
      ->capture_default_str();
  replay_cmd->add_option("--domain", replay.domain, "Domain bounds: LO HI")->expected(2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bench_cmd) return CmdBench(bench);
    if (*verify_cmd) return CmdVerify(verify);
    if (*replay_cmd) return CmdReplay(replay);
  } catch (const lichao::Error& e) {
    std::cerr << "error (" << lichao::ToString(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == lichao::ErrorKind::kChecksumDivergence ? kExitFailure : kExitUsage;
  }
  return kExitUsage;
}
