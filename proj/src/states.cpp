#include "catalan/states.hpp"

#include "catalan/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace catalan {

namespace {

char side_letter(Side s) {
  switch (s) {
    case Side::Top: return 'T';
    case Side::Right: return 'R';
    case Side::Bottom: return 'B';
    case Side::Left: return 'L';
  }
  return '?';
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

std::string to_string(BoundaryPoint p) { return side_letter(p.side) + std::to_string(p.index); }

Connection::Connection(int m, int n_top, int n_bottom,
                       const std::vector<std::pair<BoundaryPoint, BoundaryPoint>>& pairs)
    : m_(m), nt_(n_top), nb_(n_bottom) {
  if (m < 0 || n_top < 0 || n_bottom < 0) throw std::invalid_argument("negative dimension");
  partner_.assign(static_cast<std::size_t>(n_top + n_bottom + 2 * m), -1);
  auto place = [&](BoundaryPoint p) {
    int pos = position(p);
    if (partner_[pos] != -1) throw std::invalid_argument("duplicate point " + catalan::to_string(p));
    return pos;
  };
  for (const auto& [a, b] : pairs) {
    int pa = place(a);
    partner_[pa] = pa;  // reserve, so a-a is reported as a duplicate
    int pb = place(b);
    partner_[pa] = pb;
    partner_[pb] = pa;
  }
  validate();
}

Connection Connection::from_partners(int m, int n_top, int n_bottom, std::vector<int> partner) {
  Connection c;
  c.m_ = m;
  c.nt_ = n_top;
  c.nb_ = n_bottom;
  if (m < 0 || n_top < 0 || n_bottom < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(partner.size()) != n_top + n_bottom + 2 * m)
    throw std::invalid_argument("partner vector has the wrong length");
  c.partner_ = std::move(partner);
  c.validate();
  return c;
}

void Connection::validate() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    int j = partner_[i];
    if (j < 0) throw std::invalid_argument("unmatched point " + catalan::to_string(point(i)));
    if (j >= n || j == i || partner_[j] != i)
      throw std::invalid_argument("duplicate point " + catalan::to_string(point(i)));
  }
  std::vector<int> open;
  for (int i = 0; i < n; ++i) {
    if (partner_[i] > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != partner_[i])
        throw std::invalid_argument("crossing pair at " + catalan::to_string(point(i)));
      open.pop_back();
    }
  }
}

int Connection::position(BoundaryPoint p) const {
  auto check = [&](int count) {
    if (p.index < 1 || p.index > count)
      throw std::invalid_argument("point out of range " + catalan::to_string(p));
  };
  switch (p.side) {
    case Side::Top: check(nt_); return p.index - 1;
    case Side::Right: check(m_); return nt_ + p.index - 1;
    case Side::Bottom: check(nb_); return nt_ + m_ + nb_ - p.index;
    case Side::Left: check(m_); return size() - p.index;
  }
  throw std::invalid_argument("bad side");
}

BoundaryPoint Connection::point(int pos) const {
  if (pos < 0 || pos >= size()) throw std::out_of_range("boundary position");
  if (pos < nt_) return {Side::Top, pos + 1};
  if (pos < nt_ + m_) return {Side::Right, pos - nt_ + 1};
  if (pos < nt_ + m_ + nb_) return {Side::Bottom, nt_ + m_ + nb_ - pos};
  return {Side::Left, size() - pos};
}

std::vector<Arc> Connection::arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < size(); ++i)
    if (partner_[i] > i) out.push_back({i, partner_[i]});
  return out;
}

Arc Connection::arc_at(int pos) const {
  int q = partner_.at(pos);
  return {std::min(pos, q), std::max(pos, q)};
}

Arc Connection::arc_between(BoundaryPoint a, BoundaryPoint b) const {
  int pa = position(a), pb = position(b);
  if (partner_[pa] != pb)
    throw std::invalid_argument(catalan::to_string(a) + "-" + catalan::to_string(b) + " is not an arc");
  return arc_at(pa);
}

std::string Connection::to_string() const {
  std::string out = is_catalan()
                        ? "cat(" + std::to_string(m_) + "," + std::to_string(nt_) + "):"
                        : "conn(" + std::to_string(m_) + "," + std::to_string(nt_) + "," +
                              std::to_string(nb_) + "):";
  bool first = true;
  for (const Arc& a : arcs()) {
    out += first ? " " : ", ";
    first = false;
    out += catalan::to_string(point(a.p)) + "-" + catalan::to_string(point(a.q));
  }
  return out;
}

Connection Connection::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("state: " + what + " at offset " + std::to_string(pos));
  };
  auto expect = [&](char ch) {
    skip();
    if (pos >= text.size() || text[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto number = [&] {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip();
  bool general = false;
  if (text.substr(pos, 3) == "cat") {
    pos += 3;
  } else if (text.substr(pos, 4) == "conn") {
    pos += 4;
    general = true;
  } else {
    fail("expected 'cat' or 'conn'");
  }
  expect('(');
  int m = number();
  expect(',');
  int nt = number();
  int nb = nt;
  if (general) {
    expect(',');
    nb = number();
  }
  expect(')');
  expect(':');
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;
  auto boundary_point = [&] {
    skip();
    if (pos >= text.size()) fail("expected a point");
    Side s{};
    switch (text[pos]) {
      case 'T': s = Side::Top; break;
      case 'B': s = Side::Bottom; break;
      case 'L': s = Side::Left; break;
      case 'R': s = Side::Right; break;
      default: fail("expected one of T, B, L, R");
    }
    ++pos;
    return BoundaryPoint{s, number()};
  };
  skip();
  while (pos < text.size()) {
    BoundaryPoint a = boundary_point();
    expect('-');
    BoundaryPoint b = boundary_point();
    pairs.emplace_back(a, b);
    skip();
    if (pos < text.size()) expect(',');
  }
  return Connection(m, nt, nb, pairs);
}

std::vector<Connection> enumerate_catalan(int m, int n) {
  const int size = 2 * (m + n);
  std::vector<std::vector<int>> all;
  std::vector<int> partner(size, -1);
  // matchings of the half-open interval [lo, hi), continued by `next`
  std::function<void(int, int, const std::function<void()>&)> match =
      [&](int lo, int hi, const std::function<void()>& next) {
        if (lo >= hi) {
          next();
          return;
        }
        for (int j = lo + 1; j < hi; j += 2) {
          partner[lo] = j;
          partner[j] = lo;
          match(lo + 1, j, [&] { match(j + 1, hi, next); });
        }
      };
  match(0, size, [&] { all.push_back(partner); });
  std::sort(all.begin(), all.end());
  std::vector<Connection> out;
  out.reserve(all.size());
  for (auto& p : all) out.push_back(Connection::from_partners(m, n, n, std::move(p)));
  return out;
}

Connection identity_state(int n) {
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;
  for (int i = 1; i <= n; ++i) pairs.push_back({{Side::Top, i}, {Side::Bottom, i}});
  return Connection(0, n, n, pairs);
}

int line_intersections(const Connection& c, Orientation o, int index) {
  if (!c.is_catalan()) throw std::invalid_argument("line_intersections needs a Catalan state");
  const int limit = o == Orientation::Horizontal ? c.height() : c.width();
  if (index < 0 || index > limit) throw std::out_of_range("line index out of range");
  auto inside = [&](int pos) {
    BoundaryPoint p = c.point(pos);
    if (o == Orientation::Horizontal)
      return p.side == Side::Top || ((p.side == Side::Left || p.side == Side::Right) && p.index <= index);
    return p.side == Side::Left || ((p.side == Side::Top || p.side == Side::Bottom) && p.index <= index);
  };
  int count = 0;
  for (const Arc& a : c.arcs()) count += inside(a.p) != inside(a.q);
  return count;
}

bool is_realizable(const Connection& c) {
  for (int i = 1; i < c.height(); ++i)
    if (line_intersections(c, Orientation::Horizontal, i) > c.width()) return false;
  for (int j = 1; j < c.width(); ++j)
    if (line_intersections(c, Orientation::Vertical, j) > c.height()) return false;
  return true;
}

MaybeConnection vertical_product(const Connection& upper, const Connection& lower) {
  if (upper.n_bottom() != lower.n_top()) return K0;
  const int m1 = upper.height();
  const int offset = upper.size();
  // nodes 0..offset-1 are upper points, the rest lower points
  auto point_of = [&](int node) {
    return node < offset ? upper.point(node) : lower.point(node - offset);
  };
  auto glued = [&](int node) -> int {
    BoundaryPoint p = point_of(node);
    if (node < offset)
      return p.side == Side::Bottom ? offset + lower.position({Side::Top, p.index}) : -1;
    return p.side == Side::Top ? upper.position({Side::Bottom, p.index}) : -1;
  };
  auto arc_partner = [&](int node) {
    return node < offset ? upper.partner(node) : offset + lower.partner(node - offset);
  };
  auto outer_point = [&](int node) {
    BoundaryPoint p = point_of(node);
    if (node >= offset && (p.side == Side::Left || p.side == Side::Right)) p.index += m1;
    return p;
  };
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;
  int glue_seen = 0;
  const int total = offset + lower.size();
  for (int s = 0; s < total; ++s) {
    if (glued(s) != -1) continue;
    int cur = arc_partner(s);
    while (glued(cur) != -1) {
      glue_seen += 2;
      cur = arc_partner(glued(cur));
    }
    if (s < cur) pairs.emplace_back(outer_point(s), outer_point(cur));
  }
  // every glued pair is walked twice, once from each direction
  if (glue_seen / 2 < 2 * upper.n_bottom()) return K0;
  return Connection(m1 + lower.height(), upper.n_top(), lower.n_bottom(), pairs);
}

MaybeConnection vertical_product(const MaybeConnection& upper, const MaybeConnection& lower) {
  if (!upper || !lower) return K0;
  return vertical_product(*upper, *lower);
}

namespace {

/// Same points relabelled: new position = old position + shift.
Connection cyclic_relabel(const Connection& c, int shift, int m, int nt, int nb) {
  const int n = c.size();
  std::vector<int> partner(n);
  for (int i = 0; i < n; ++i) partner[mod(i + shift, n)] = mod(c.partner(i) + shift, n);
  return Connection::from_partners(m, nt, nb, std::move(partner));
}

Connection delete_positions(const Connection& c, Arc a, int m, int nt, int nb) {
  std::vector<int> index(c.size(), -1);
  int next = 0;
  for (int i = 0; i < c.size(); ++i)
    if (i != a.p && i != a.q) index[i] = next++;
  std::vector<int> partner(next);
  for (int i = 0; i < c.size(); ++i)
    if (index[i] >= 0) partner[index[i]] = index[c.partner(i)];
  return Connection::from_partners(m, nt, nb, std::move(partner));
}

}  // namespace

Connection tau_shift(const Connection& c, int t) {
  if (t > c.height() || t < -(c.n_top() / 2)) throw std::out_of_range("tau shift out of range");
  return cyclic_relabel(c, t, c.height() - t, c.n_top() + 2 * t, c.n_bottom());
}

Connection rotate_pi(const Connection& c) {
  return cyclic_relabel(c, -(c.n_top() + c.height()), c.height(), c.n_bottom(), c.n_top());
}

Connection rotate_quarter(const Connection& c) {
  if (!c.is_catalan()) throw std::invalid_argument("rotate_quarter needs a Catalan state");
  return cyclic_relabel(c, c.height(), c.width(), c.height(), c.height());
}

Connection reflect(const Connection& c) {
  auto mirror = [&](BoundaryPoint p) -> BoundaryPoint {
    switch (p.side) {
      case Side::Top: return {Side::Top, c.n_top() + 1 - p.index};
      case Side::Bottom: return {Side::Bottom, c.n_bottom() + 1 - p.index};
      case Side::Left: return {Side::Right, p.index};
      case Side::Right: return {Side::Left, p.index};
    }
    return p;
  };
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;
  for (const Arc& a : c.arcs()) pairs.emplace_back(mirror(c.point(a.p)), mirror(c.point(a.q)));
  return Connection(c.height(), c.n_top(), c.n_bottom(), pairs);
}

int coordinate(const Connection& c, BoundaryPoint p) {
  const int n = c.n_top();
  switch (p.side) {
    case Side::Top: return p.index - n;
    case Side::Right: return p.index;
    case Side::Left: return 1 - n - p.index;
    case Side::Bottom: break;
  }
  throw std::invalid_argument("bottom points have no coordinate");
}

ArcKind arc_kind(const Connection& c, Arc a) {
  Side s = c.side(a.p), t = c.side(a.q);
  if (s == t) {
    switch (s) {
      case Side::Top: return ArcKind::TopReturn;
      case Side::Bottom: return ArcKind::BottomReturn;
      case Side::Left: return ArcKind::LeftReturn;
      case Side::Right: return ArcKind::RightReturn;
    }
  }
  if ((s == Side::Top && t == Side::Bottom) || (s == Side::Bottom && t == Side::Top))
    return ArcKind::TopBottom;
  return ArcKind::Other;
}

bool has_end_on(const Connection& c, Arc a, Side s) { return c.side(a.p) == s || c.side(a.q) == s; }

StateClass classify(const Connection& c) {
  StateClass k;
  for (const Arc& a : c.arcs()) {
    switch (arc_kind(c, a)) {
      case ArcKind::TopReturn: k.has_top_returns = true; break;
      case ArcKind::BottomReturn: k.has_bottom_returns = true; break;
      case ArcKind::LeftReturn: k.has_left_returns = true; break;
      case ArcKind::RightReturn: k.has_right_returns = true; break;
      default: break;
    }
  }
  return k;
}

bool has_top_returns(const Connection& c) { return classify(c).has_top_returns; }
bool has_bottom_returns(const Connection& c) { return classify(c).has_bottom_returns; }

bool is_proper(const Connection& c, Arc a) {
  ArcKind k = arc_kind(c, a);
  return k != ArcKind::TopBottom && k != ArcKind::LeftReturn && k != ArcKind::RightReturn;
}

namespace {

// Labels along the left chain x_n..x_1, y_1..y_m, x'_1..x'_n and the right
// chain x_1..x_n, y'_1..y'_m, x'_n..x'_1.
std::optional<int> left_label(const Connection& c, BoundaryPoint p) {
  switch (p.side) {
    case Side::Left: return p.index;
    case Side::Top: return 1 - p.index;
    case Side::Bottom: return c.height() + p.index;
    case Side::Right: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<int> right_label(const Connection& c, BoundaryPoint p) {
  switch (p.side) {
    case Side::Right: return p.index;
    case Side::Top: return p.index - c.n_top();
    case Side::Bottom: return c.height() + c.n_bottom() - p.index + 1;
    case Side::Left: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::pair<int, int> extended_labels(const Connection& c, Arc a) {
  if (!is_proper(c, a)) throw std::invalid_argument("extended labels need a proper arc");
  BoundaryPoint u = c.point(a.p), v = c.point(a.q);
  // Decide which end is read on the left chain.
  auto left_first = [&] {
    if (u.side == Side::Left) return true;
    if (v.side == Side::Left) return false;
    if (u.side == Side::Right) return false;
    if (v.side == Side::Right) return true;
    if (u.side == v.side) return u.index < v.index;
    // a top end meets a bottom end only in improper arcs
    return true;
  };
  if (!left_first()) std::swap(u, v);
  return {*left_label(c, u), *right_label(c, v)};
}

Connection remove_arc(const Connection& c, Arc a) {
  if (!c.is_catalan()) throw std::invalid_argument("remove_arc needs a Catalan state");
  if (!is_proper(c, a)) throw std::invalid_argument("remove_arc needs a proper arc");
  const int m = c.height();
  if (m < 1) throw std::invalid_argument("remove_arc needs height at least 1");
  if (has_end_on(c, a, Side::Bottom)) {
    Connection r = rotate_pi(c);
    const int shift = -(c.n_top() + m);
    Arc image{mod(a.p + shift, c.size()), mod(a.q + shift, c.size())};
    if (image.p > image.q) std::swap(image.p, image.q);
    return rotate_pi(remove_arc(r, image));
  }
  Connection shifted = tau_shift(c, m);
  Arc moved{mod(a.p + m, c.size()), mod(a.q + m, c.size())};
  if (moved.p > moved.q) std::swap(moved.p, moved.q);
  Connection reduced = delete_positions(shifted, moved, 0, shifted.n_top() - 2, shifted.n_bottom());
  return tau_shift(reduced, 1 - m);
}

namespace {

/// For a proper arc, whether each position lies in the region touching the
/// top boundary (A1) rather than the one touching the bottom (A2).
std::vector<bool> upper_region(const Connection& c, Arc a) {
  const int n = c.size();
  const int nt = c.n_top(), m = c.height(), nb = c.n_bottom();
  auto in_first = [&](int pos) { return a.p < pos && pos < a.q; };
  auto gap_in_first = [&](int gap) { return a.p < gap && gap <= a.q; };
  struct Touch {
    bool top = false, bottom = false;
  } touch[2];
  for (int pos = 0; pos < n; ++pos) {
    if (pos == a.p || pos == a.q) continue;
    Side s = c.side(pos);
    Touch& t = touch[in_first(pos) ? 0 : 1];
    if (s == Side::Top) t.top = true;
    if (s == Side::Bottom) t.bottom = true;
  }
  for (int gap : {0, nt}) touch[gap_in_first(gap) ? 0 : 1].top = true;
  for (int gap : {nt + m, nt + m + nb}) touch[gap_in_first(mod(gap, n)) ? 0 : 1].bottom = true;
  for (Touch& t : touch) {
    if (has_end_on(c, a, Side::Top)) t.top = true;
    if (has_end_on(c, a, Side::Bottom)) t.bottom = true;
  }
  int upper;
  if (touch[0].top && !touch[0].bottom)
    upper = 0;
  else if (touch[1].top && !touch[1].bottom)
    upper = 1;
  else if (!touch[0].top && touch[0].bottom)
    upper = 1;
  else if (!touch[1].top && touch[1].bottom)
    upper = 0;
  else
    throw std::invalid_argument("arc does not separate top from bottom");
  std::vector<bool> result(n);
  for (int pos = 0; pos < n; ++pos) result[pos] = (in_first(pos) ? 0 : 1) == upper;
  return result;
}

}  // namespace

bool is_removable(const Connection& c, Arc a) {
  if (!c.is_catalan() || c.height() < 1 || !is_proper(c, a)) return false;
  const std::vector<bool> upper = upper_region(c, a);
  const int m = c.height();
  int lo = 0, hi = m - 1;
  for (const Arc& d : c.arcs()) {
    if (d == a) continue;
    BoundaryPoint u = c.point(d.p), v = c.point(d.q);
    for (auto label : {left_label, right_label}) {
      auto lu = label(c, u), lv = label(c, v);
      if (!lu || !lv || std::abs(*lu - *lv) != 1) continue;
      int j = std::min(*lu, *lv);
      if (upper[d.p])
        lo = std::max(lo, j);
      else
        hi = std::min(hi, j - 1);
    }
  }
  return lo <= hi;
}

std::vector<Arc> find_removable_arcs(const Connection& c) {
  std::vector<Arc> out;
  for (const Arc& a : c.arcs())
    if (is_removable(c, a)) out.push_back(a);
  return out;
}

std::vector<int> saturated_lines(const Connection& c) {
  std::vector<int> out;
  for (int i = 0; i <= c.height(); ++i)
    if (line_intersections(c, Orientation::Horizontal, i) == c.width()) out.push_back(i);
  return out;
}

std::optional<int> is_vertically_decomposable(const Connection& c) {
  auto lines = saturated_lines(c);
  if (lines.empty()) return std::nullopt;
  return lines.front();
}

std::pair<Connection, Connection> split_at(const Connection& c, int i) {
  const int m = c.height(), n = c.width(), size = c.size();
  if (i < 0 || i > m || line_intersections(c, Orientation::Horizontal, i) != n)
    throw std::invalid_argument("split_at needs a line met by exactly n arcs");
  auto above = [&](int pos) {
    BoundaryPoint p = c.point(pos);
    return p.side == Side::Top || ((p.side == Side::Left || p.side == Side::Right) && p.index <= i);
  };
  // order of upper ends from y_i round to y'_i, and of lower ends from y_{i+1} round to y'_{i+1}
  auto upper_key = [&](int pos) { return mod(pos - (size - i), size); };
  auto lower_key = [&](int pos) { return mod(size - i - 1 - pos, size); };

  struct Cut {
    int up, down;
  };
  std::vector<Cut> cuts;
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> top_pairs, bottom_pairs;
  auto lower_point = [&](BoundaryPoint p) {
    if (p.side == Side::Left || p.side == Side::Right) p.index -= i;
    return p;
  };
  for (const Arc& a : c.arcs()) {
    bool ap = above(a.p), aq = above(a.q);
    if (ap && aq)
      top_pairs.emplace_back(c.point(a.p), c.point(a.q));
    else if (!ap && !aq)
      bottom_pairs.emplace_back(lower_point(c.point(a.p)), lower_point(c.point(a.q)));
    else
      cuts.push_back(ap ? Cut{a.p, a.q} : Cut{a.q, a.p});
  }
  std::sort(cuts.begin(), cuts.end(),
            [&](const Cut& x, const Cut& y) { return upper_key(x.up) < upper_key(y.up); });
  for (std::size_t k = 1; k < cuts.size(); ++k)
    if (lower_key(cuts[k - 1].down) > lower_key(cuts[k].down))
      throw std::logic_error("split_at: cut arcs out of order");
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const int index = static_cast<int>(k) + 1;
    top_pairs.emplace_back(c.point(cuts[k].up), BoundaryPoint{Side::Bottom, index});
    bottom_pairs.emplace_back(BoundaryPoint{Side::Top, index}, lower_point(c.point(cuts[k].down)));
  }
  return {Connection(i, n, n, top_pairs), Connection(m - i, n, n, bottom_pairs)};
}

std::vector<Connection> vertical_decompose(const Connection& c) {
  std::vector<Connection> factors;
  Connection rest = c;
  int consumed = 0;
  for (int line : saturated_lines(c)) {
    if (line == 0 || line == c.height()) continue;
    auto [top, bottom] = split_at(rest, line - consumed);
    factors.push_back(std::move(top));
    rest = std::move(bottom);
    consumed = line;
  }
  factors.push_back(std::move(rest));
  return factors;
}

}  // namespace catalan
