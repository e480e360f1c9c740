#include "lichao/oracle.hpp"

#include <algorithm>
#include <string>

namespace lichao {

void NaiveSet::AddSegment(const Line& line, Coord xl, Coord xr) {
  if (xl > xr) {
    throw Error(ErrorKind::kInvalidSegment,
                "segment [" + std::to_string(xl) + ", " + std::to_string(xr) +
                    "] has xl > xr");
  }
  entries_.push_back(Entry{line, std::make_pair(xl, xr)});
}

Answer NaiveSet::QueryPrefix(std::size_t count, Coord x) const {
  Answer best;
  count = std::min(count, entries_.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Entry& e = entries_[i];
    if (e.bounds && (x < e.bounds->first || x > e.bounds->second)) continue;
    const Value v = Eval(e.line, x);
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace lichao
