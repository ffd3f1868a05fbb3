#include "catalan/maxseq.hpp"

#include "catalan/kauffman.hpp"

#include <algorithm>
#include <stdexcept>

namespace catalan {

namespace {

struct SideArc {
  int lo, hi;  // coordinates of the ends, lo < hi
};

std::vector<SideArc> arcs_off_bottom(const Connection& c) {
  if (!c.is_catalan()) throw std::invalid_argument("needs a Catalan state");
  if (has_bottom_returns(c)) throw std::invalid_argument("needs a state with no bottom returns");
  if (!is_realizable(c)) throw std::invalid_argument("needs a realizable state");
  std::vector<SideArc> out;
  for (const Arc& a : c.arcs()) {
    if (has_end_on(c, a, Side::Bottom)) continue;
    int u = coordinate(c, c.point(a.p)), v = coordinate(c, c.point(a.q));
    out.push_back({std::min(u, v), std::max(u, v)});
  }
  return out;
}

}  // namespace

long long beta(const Connection& c) {
  const long long m = c.height(), n = c.width();
  long long total = m * n + m * (m - 1) / 2;
  for (const SideArc& a : arcs_off_bottom(c)) total += std::min(a.lo, 1 - a.hi);
  return total;
}

std::vector<int> max_sequence(const Connection& c) {
  const int m = c.height(), n = c.width();
  std::vector<int> b(m, -1);
  std::vector<int> low_ends;  // lower coordinates of the arcs with lo + hi <= 0
  for (const SideArc& a : arcs_off_bottom(c)) {
    if (a.lo + a.hi >= 1) {
      if (a.hi < 1 || a.hi > m) throw std::logic_error("max_sequence: arc end off the right side");
      b[a.hi - 1] = n;
    } else {
      low_ends.push_back(a.lo);
    }
  }
  std::sort(low_ends.rbegin(), low_ends.rend());
  std::size_t j = 0;
  for (int i = 1; i <= m; ++i) {
    if (b[i - 1] != -1) continue;
    if (j >= low_ends.size()) throw std::logic_error("max_sequence: row count mismatch");
    b[i - 1] = n + (i - 1) + low_ends[j++];
  }
  return b;
}

Connection sequence_realizes(const std::vector<int>& b, int n) {
  const int m = static_cast<int>(b.size());
  MarkerGrid grid(m, n);
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0 || b[i] > n) throw std::invalid_argument("sequence entries must lie in 0..n");
    for (int j = 0; j < n; ++j) grid.set(i, j, j < b[i] ? 1 : -1);
  }
  Resolution r = smooth(grid);
  if (r.loops != 0) throw std::logic_error("row-sorted grid closed a loop");
  return r.state;
}

}  // namespace catalan
