#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace lichao {

using Coord = std::int64_t;
using Value = std::int64_t;

// Absent means "no line covers this coordinate" (the +infinity of a min
// envelope).
using Answer = std::optional<Value>;

enum class ErrorKind {
  kInvalidDomain,
  kInvalidSegment,
  kInvalidSize,
  kOutOfDomain,
  kOverflow,
  kUnknownVersion,
  kAlgoMismatch,
  kChecksumDivergence,
  kParse,
  kIo,
};

const char* ToString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Line {
  std::int64_t k = 0;
  std::int64_t b = 0;

  friend bool operator==(const Line&, const Line&) = default;
};

// Exact k*x + b. Throws kOverflow when the result does not fit in int64.
Value Eval(const Line& line, Coord x);

// k*x + b when the caller already knows the result is representable. Wrapping
// arithmetic is exact modulo 2^64, so a representable result comes out right
// even if k*x alone would overflow.
inline Value EvalUnchecked(const Line& line, Coord x) noexcept {
  return static_cast<Value>(static_cast<std::uint64_t>(line.k) *
                                static_cast<std::uint64_t>(x) +
                            static_cast<std::uint64_t>(line.b));
}

// Full-precision value, never overflows for int64 inputs.
inline __int128 EvalWide(const Line& line, Coord x) noexcept {
  return static_cast<__int128>(line.k) * x + line.b;
}

// Inclusive integer coordinate range [lo, hi].
struct Domain {
  Coord lo = 0;
  Coord hi = 0;

  // Throws kInvalidDomain when lo > hi.
  static Domain Make(Coord lo, Coord hi);

  bool Contains(Coord x) const noexcept { return lo <= x && x <= hi; }

  // Number of coordinates; saturates at 2^64 - 1 for the full int64 range.
  std::uint64_t Size() const noexcept {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    return span == std::numeric_limits<std::uint64_t>::max() ? span : span + 1;
  }

  // ceil(log2(Size())).
  int Depth() const noexcept;

  friend bool operator==(const Domain&, const Domain&) = default;
};

// floor((l + r) / 2) for l <= r without intermediate overflow.
inline Coord Midpoint(Coord l, Coord r) noexcept {
  return l + static_cast<Coord>(
                 (static_cast<std::uint64_t>(r) - static_cast<std::uint64_t>(l)) /
                 2);
}

// Throws kOverflow unless the line is representable at every x in [lo, hi].
// A line is monotone in x, so checking the endpoints is enough.
void CheckRepresentable(const Line& line, Coord lo, Coord hi);

// Throws kOverflow if -k or -b does not fit.
Line Negate(const Line& line);

}  // namespace lichao
