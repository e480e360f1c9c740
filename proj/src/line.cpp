#include "lichao/line.hpp"

#include <bit>

namespace lichao {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDomain:
      return "invalid-domain";
    case ErrorKind::kInvalidSegment:
      return "invalid-segment";
    case ErrorKind::kInvalidSize:
      return "invalid-size";
    case ErrorKind::kOutOfDomain:
      return "out-of-domain";
    case ErrorKind::kOverflow:
      return "overflow";
    case ErrorKind::kUnknownVersion:
      return "unknown-version";
    case ErrorKind::kAlgoMismatch:
      return "algo-workload-mismatch";
    case ErrorKind::kChecksumDivergence:
      return "checksum-divergence";
    case ErrorKind::kParse:
      return "parse-error";
    case ErrorKind::kIo:
      return "io-error";
  }
  return "unknown";
}

Value Eval(const Line& line, Coord x) {
  const __int128 wide = EvalWide(line, x);
  if (wide < std::numeric_limits<Value>::min() ||
      wide > std::numeric_limits<Value>::max()) {
    throw Error(ErrorKind::kOverflow,
                "line (" + std::to_string(line.k) + ", " +
                    std::to_string(line.b) + ") overflows at x = " +
                    std::to_string(x));
  }
  return static_cast<Value>(wide);
}

Domain Domain::Make(Coord lo, Coord hi) {
  if (lo > hi) {
    throw Error(ErrorKind::kInvalidDomain,
                "domain [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] has lo > hi");
  }
  return Domain{lo, hi};
}

int Domain::Depth() const noexcept {
  const std::uint64_t size = Size();
  if (size <= 1) return 0;
  return std::bit_width(size - 1);
}

void CheckRepresentable(const Line& line, Coord lo, Coord hi) {
  Eval(line, lo);
  Eval(line, hi);
}

Line Negate(const Line& line) {
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (line.k == kMin || line.b == kMin) {
    throw Error(ErrorKind::kOverflow, "cannot negate line with INT64_MIN term");
  }
  return Line{-line.k, -line.b};
}

}  // namespace lichao
