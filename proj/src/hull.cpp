#include "lichao/hull.hpp"

#include <limits>

namespace lichao {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

std::int64_t Clamp(__int128 v) {
  if (v > kInf) return kInf;
  if (v < kNegInf) return kNegInf;
  return static_cast<std::int64_t>(v);
}

__int128 FloorDiv(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

__int128 CeilDiv(__int128 a, __int128 b) { return -FloorDiv(-a, b); }

}  // namespace

bool HullContainer::Intersect(Iter x, Iter y) {
  if (y == lines_.end()) {
    x->p = x->q = kInf;
    return false;
  }
  if (x->k == y->k) {
    x->p = x->q = x->b > y->b ? kInf : kNegInf;
  } else {
    // Crossing at t = (b_x - b_y) / (k_y - k_x), with k_y > k_x.
    const __int128 num = static_cast<__int128>(x->b) - y->b;
    const __int128 den = static_cast<__int128>(y->k) - x->k;
    x->p = Clamp(FloorDiv(num, den));
    x->q = Clamp(CeilDiv(num, den) - 1);
  }
  return x->p >= y->q;
}

void HullContainer::Insert(const Line& input) {
  const Line line = Negate(input);
  if (contract_) CheckRepresentable(line, contract_->lo, contract_->hi);

  auto z = lines_.insert(Entry{line.k, line.b});
  auto y = z++;
  auto x = y;
  while (Intersect(y, z)) z = lines_.erase(z);
  if (x != lines_.begin() && Intersect(--x, y)) Intersect(x, y = lines_.erase(y));
  while ((y = x) != lines_.begin() && (--x)->p >= y->q) Intersect(x, lines_.erase(y));
  // A leading line with no strict range (equal slope, lower intercept) has no
  // predecessor to catch it above.
  while (lines_.size() > 1 && lines_.begin()->q == kNegInf) lines_.erase(lines_.begin());
}

Answer HullContainer::Query(Coord x) const {
  if (lines_.empty()) return std::nullopt;
  const Entry& best = *lines_.lower_bound(x);
  return -Eval(Line{best.k, best.b}, x);
}

std::vector<HullLine> HullContainer::Lines() const {
  std::vector<HullLine> out;
  out.reserve(lines_.size());
  for (const Entry& e : lines_) out.push_back(HullLine{-e.k, -e.b, e.p});
  return out;
}

}  // namespace lichao
