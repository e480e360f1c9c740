#include "lichao/ops_file.hpp"

#include <charconv>
#include <sstream>
#include <string_view>
#include <system_error>

#include "lichao/core.hpp"
#include "lichao/hull.hpp"
#include "lichao/zkw.hpp"

namespace lichao {
namespace {

std::vector<std::string_view> Tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

[[noreturn]] void Fail(std::size_t line_no, const std::string& message) {
  throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + message);
}

std::int64_t ParseInt(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec == std::errc::result_out_of_range) {
    Fail(line_no, "integer out of int64 range: '" + std::string(token) + "'");
  }
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    Fail(line_no, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::vector<Op> ParseOps(std::istream& in) {
  std::vector<Op> ops;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != text.npos) text = text.substr(0, hash);
    const auto tokens = Tokenize(text);
    if (tokens.empty()) continue;
    const std::string_view tag = tokens[0];
    auto expect = [&](std::size_t args) {
      if (tokens.size() != args + 1) {
        Fail(line_no, "'" + std::string(tag) + "' takes " + std::to_string(args) +
                          " integers, got " + std::to_string(tokens.size() - 1));
      }
    };
    if (tag == "A") {
      expect(2);
      ops.push_back(Op::AddLine({ParseInt(tokens[1], line_no), ParseInt(tokens[2], line_no)}));
    } else if (tag == "S") {
      expect(4);
      const Line line{ParseInt(tokens[1], line_no), ParseInt(tokens[2], line_no)};
      const Coord xl = ParseInt(tokens[3], line_no);
      const Coord xr = ParseInt(tokens[4], line_no);
      if (xl > xr) Fail(line_no, "segment has xl > xr");
      ops.push_back(Op::AddSegment(line, xl, xr));
    } else if (tag == "Q") {
      expect(1);
      ops.push_back(Op::Query(ParseInt(tokens[1], line_no)));
    } else {
      Fail(line_no, "unknown op '" + std::string(tag) + "'");
    }
  }
  return ops;
}

std::string FormatOp(const Op& op) {
  std::ostringstream s;
  switch (op.kind) {
    case OpKind::kAddLine:
      s << "A " << op.line.k << ' ' << op.line.b;
      break;
    case OpKind::kAddSegment:
      s << "S " << op.line.k << ' ' << op.line.b << ' ' << op.xl << ' ' << op.xr;
      break;
    case OpKind::kQuery:
      s << "Q " << op.xl;
      break;
  }
  return s.str();
}

namespace {

void PrintAnswer(std::ostream& out, const Answer& answer) {
  if (answer) {
    out << *answer << '\n';
  } else {
    out << kInfLiteral << '\n';
  }
}

void CheckQuery(const Domain& domain, Coord x) {
  if (!domain.Contains(x)) {
    throw Error(ErrorKind::kOutOfDomain, "query x = " + std::to_string(x) + " outside domain [" +
                                             std::to_string(domain.lo) + ", " +
                                             std::to_string(domain.hi) + "]");
  }
}

}  // namespace

void Replay(const std::vector<Op>& ops, Algo algo, Domain domain, std::ostream& out) {
  domain = Domain::Make(domain.lo, domain.hi);
  Workload shape;
  shape.domain = domain;
  shape.ops = ops;
  shape.static_universe = true;
  CheckSupports(algo, shape);

  switch (algo) {
    case Algo::kLict: {
      LiChaoTree tree(domain);
      for (const Op& op : ops) {
        if (op.kind == OpKind::kAddLine) {
          tree.InsertLine(op.line);
        } else if (op.kind == OpKind::kAddSegment) {
          tree.InsertSegment(op.line, op.xl, op.xr);
        } else {
          PrintAnswer(out, tree.Query(op.xl));
        }
      }
      break;
    }
    case Algo::kZkw: {
      if (domain.Size() > (std::uint64_t{1} << 30)) {
        throw Error(ErrorKind::kAlgoMismatch, "domain too large for zkw");
      }
      ZkwTree tree(domain.lo, static_cast<std::int64_t>(domain.Size()));
      for (const Op& op : ops) {
        if (op.is_insert()) {
          tree.Insert(op.line);
        } else {
          PrintAnswer(out, tree.Query(op.xl));
        }
      }
      break;
    }
    case Algo::kCht: {
      HullContainer hull(domain);
      for (const Op& op : ops) {
        if (op.is_insert()) {
          hull.Insert(op.line);
        } else {
          CheckQuery(domain, op.xl);
          PrintAnswer(out, hull.Query(op.xl));
        }
      }
      break;
    }
  }
}

}  // namespace lichao
