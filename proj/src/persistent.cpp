#include "lichao/persistent.hpp"

#include <utility>

namespace lichao {

PersistentLiChao::PersistentLiChao(Domain domain)
    : domain_(Domain::Make(domain.lo, domain.hi)) {
  roots_.Append(kNil);
}

void PersistentLiChao::CheckVersion(VersionId version) const {
  if (version.value >= roots_.size()) {
    throw Error(ErrorKind::kUnknownVersion,
                "unknown version " + std::to_string(version.value));
  }
}

PersistentLiChao::Handle PersistentLiChao::root(VersionId version) const {
  CheckVersion(version);
  return roots_[version.value];
}

VersionId PersistentLiChao::Insert(VersionId base, const Line& input) {
  CheckVersion(base);
  CheckRepresentable(input, domain_.lo, domain_.hi);
  if (roots_.size() >= kNil) throw std::length_error("PersistentLiChao: too many versions");

  // The copied path is assembled locally with its final handles, then
  // appended in order, so each node is written exactly once.
  const std::size_t start = nodes_.size();
  std::vector<Node> path;
  Line line = input;
  Coord l = domain_.lo;
  Coord r = domain_.hi;
  Handle cur = roots_[base.value];
  for (;;) {
    if (cur == kNil) {
      path.push_back(Node{line, kNil, kNil});
      break;
    }
    Node copy = nodes_[cur];
    const Coord m = Midpoint(l, r);
    const bool lef = EvalUnchecked(line, l) < EvalUnchecked(copy.line, l);
    const bool midf = EvalUnchecked(line, m) < EvalUnchecked(copy.line, m);
    if (midf) std::swap(copy.line, line);
    if (l == r) {
      path.push_back(copy);
      break;
    }
    const auto next_handle = static_cast<Handle>(start + path.size() + 1);
    if (lef != midf) {
      cur = copy.left;
      copy.left = next_handle;
      r = m;
    } else {
      cur = copy.right;
      copy.right = next_handle;
      l = m + 1;
    }
    path.push_back(copy);
  }
  if (start + path.size() >= kNil) throw std::length_error("PersistentLiChao: arena full");
  for (const Node& n : path) nodes_.Append(n);
  return VersionId{static_cast<std::uint32_t>(roots_.Append(static_cast<Handle>(start)))};
}

Answer PersistentLiChao::Query(VersionId version, Coord x) const {
  CheckVersion(version);
  if (!domain_.Contains(x)) {
    throw Error(ErrorKind::kOutOfDomain,
                "query x = " + std::to_string(x) + " outside domain");
  }
  bool found = false;
  Value best = 0;
  Coord l = domain_.lo;
  Coord r = domain_.hi;
  for (Handle h = roots_[version.value]; h != kNil;) {
    const Node& n = nodes_[h];
    const Value v = EvalUnchecked(n.line, x);
    if (!found || v < best) best = v;
    found = true;
    if (l == r) break;
    const Coord m = Midpoint(l, r);
    if (x <= m) {
      r = m;
      h = n.left;
    } else {
      l = m + 1;
      h = n.right;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

std::vector<std::uint8_t> PersistentLiChao::Serialize(VersionId version) const {
  std::vector<std::uint8_t> out;
  auto put = [&out](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  };
  std::vector<Handle> stack{root(version)};
  while (!stack.empty()) {
    const Handle h = stack.back();
    stack.pop_back();
    put(h);
    if (h == kNil) continue;
    const Node& n = nodes_[h];
    put(static_cast<std::uint64_t>(n.line.k));
    put(static_cast<std::uint64_t>(n.line.b));
    stack.push_back(n.right);
    stack.push_back(n.left);
  }
  return out;
}

}  // namespace lichao
