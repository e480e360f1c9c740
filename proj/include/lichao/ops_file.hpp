#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lichao/bench.hpp"
#include "lichao/workload.hpp"

namespace lichao {

// Text op format, one op per line:
//   A k b          add line y = kx + b
//   S k b xl xr    add segment on [xl, xr]
//   Q x            query
// '#' starts a comment; blank lines are ignored. All numbers are int64.
//
// Throws kParse naming the 1-based line number of the first bad line.
std::vector<Op> ParseOps(std::istream& in);

std::string FormatOp(const Op& op);

// Absent answers print as this literal.
inline constexpr const char* kInfLiteral = "INF";

// Executes `ops` on `algo` over `domain`, writing one line per query: the
// answer or INF. Throws kAlgoMismatch, kOutOfDomain, kOverflow, kInvalidSegment.
void Replay(const std::vector<Op>& ops, Algo algo, Domain domain, std::ostream& out);

}  // namespace lichao
