#include "catalan/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace catalan {

PlaneTree::PlaneTree() : nodes_{{-1, 1, {}}} {}

int PlaneTree::add_child(int parent, int delay) {
  if (parent < 0 || parent >= vertex_count()) throw std::out_of_range("no such vertex");
  if (delay < 1) throw std::invalid_argument("delays must be positive");
  const int id = vertex_count();
  nodes_.push_back({parent, delay, {}});
  nodes_[parent].children.push_back(id);
  nodes_[parent].delay = 1;
  return id;
}

void PlaneTree::set_delay(int leaf, int delay) {
  if (!is_leaf(leaf)) throw std::invalid_argument("delays sit on leaves only");
  if (delay < 1) throw std::invalid_argument("delays must be positive");
  nodes_[leaf].delay = delay;
}

int PlaneTree::subtree_size(int v) const {
  int size = 1;
  for (int c : nodes_[v].children) size += subtree_size(c);
  return size;
}

std::vector<int> PlaneTree::leaves() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    if (is_leaf(v)) out.push_back(v);
    for (int c : nodes_[v].children) walk(c);
  };
  walk(0);
  return out;
}

std::string PlaneTree::to_string() const {
  std::string out;
  std::function<void(int)> walk = [&](int v) {
    out += '(';
    for (int c : nodes_[v].children) walk(c);
    out += ')';
    if (is_leaf(v) && nodes_[v].delay != 1) out += ':' + std::to_string(nodes_[v].delay);
  };
  walk(0);
  return out;
}

PlaneTree PlaneTree::parse(std::string_view text) {
  PlaneTree t;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("tree: " + what + " at offset " + std::to_string(pos));
  };
  std::function<void(int)> body = [&](int v) {
    // the opening parenthesis of v is already consumed
    for (;;) {
      skip();
      if (pos >= text.size()) fail("unbalanced parentheses");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != '(') fail("expected '(' or ')'");
      ++pos;
      body(t.add_child(v));
    }
    skip();
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a delay");
      if (!t.is_leaf(v)) fail("delay on a vertex that is not a leaf");
      int d = std::stoi(std::string(text.substr(start, pos - start)));
      if (d < 1) fail("delays must be positive");
      t.set_delay(v, d);
    }
  };
  skip();
  if (pos >= text.size() || text[pos] != '(') fail("expected '('");
  ++pos;
  body(0);
  skip();
  if (pos != text.size()) fail("trailing characters");
  return t;
}

namespace {

/// Copies the subtree of `from` under vertex `v` of t as children of `to`.
void copy_below(const PlaneTree& t, int v, PlaneTree& out, int to) {
  for (int c : t.children(v)) {
    int id = out.add_child(to, t.delay(c));
    copy_below(t, c, out, id);
  }
}

}  // namespace

PlaneTree path_tree(int k, int leaf_delay) {
  PlaneTree t;
  int v = t.root();
  for (int i = 0; i < k; ++i) v = t.add_child(v);
  if (k > 0) t.set_delay(v, leaf_delay);
  return t;
}

PlaneTree ordered_rooted_sum(const PlaneTree& a, const PlaneTree& b) {
  PlaneTree out;
  copy_below(a, a.root(), out, out.root());
  copy_below(b, b.root(), out, out.root());
  return out;
}

PlaneTree mirror(const PlaneTree& t) {
  PlaneTree out;
  std::function<void(int, int)> walk = [&](int v, int to) {
    const auto& ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) walk(*it, out.add_child(to, t.delay(*it)));
  };
  walk(t.root(), out.root());
  return out;
}

std::vector<int> pluckable_leaves(const PlaneTree& t) {
  std::vector<int> out;
  for (int v : t.leaves())
    if (t.delay(v) == 1) out.push_back(v);
  return out;
}

int right_count(const PlaneTree& t, int v) {
  int count = 0;
  for (int u = v; u != t.root(); u = t.parent(u)) {
    const auto& siblings = t.children(t.parent(u));
    auto it = std::find(siblings.begin(), siblings.end(), u);
    for (++it; it != siblings.end(); ++it) count += t.subtree_size(*it);
  }
  return count;
}

PlaneTree pluck(const PlaneTree& t, int v) {
  if (!t.is_leaf(v) || t.delay(v) != 1) throw std::invalid_argument("only leaves of delay 1 can be plucked");
  PlaneTree out;
  std::function<void(int, int)> walk = [&](int u, int to) {
    for (int c : t.children(u)) {
      if (c == v) continue;
      int d = t.is_leaf(c) ? std::max(1, t.delay(c) - 1) : 1;
      walk(c, out.add_child(to, d));
    }
  };
  walk(t.root(), out.root());
  return out;
}

namespace {

class PluckingMemo {
 public:
  Laurent operator()(const PlaneTree& t) {
    if (t.vertex_count() == 1) return 1;
    std::string key = t.to_string();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Laurent sum;
    for (int v : pluckable_leaves(t)) sum += monomial_shift((*this)(pluck(t, v)), right_count(t, v));
    memo_.emplace(std::move(key), sum);
    return sum;
  }

 private:
  std::unordered_map<std::string, Laurent> memo_;
};

}  // namespace

Laurent plucking(const PlaneTree& t) { return PluckingMemo{}(t); }

namespace {

std::vector<int> leaves_below(const PlaneTree& t, const SplitChoice& s) {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    if (t.is_leaf(v)) out.push_back(v);
    for (int c : t.children(v)) walk(c);
  };
  const auto& ch = t.children(s.vertex);
  for (int i = s.first; i <= s.last; ++i) walk(ch[i]);
  return out;
}

void check_choice(const PlaneTree& t, const SplitChoice& s) {
  if (s.vertex < 0 || s.vertex >= t.vertex_count()) throw std::out_of_range("no such vertex");
  const int k = static_cast<int>(t.children(s.vertex).size());
  if (s.first < 0 || s.last >= k || s.first > s.last) throw std::out_of_range("bad child interval");
}

}  // namespace

PlaneTree splitting_subtree(const PlaneTree& t, const SplitChoice& s) {
  check_choice(t, s);
  PlaneTree out;
  const auto& ch = t.children(s.vertex);
  for (int i = s.first; i <= s.last; ++i) copy_below(t, ch[i], out, out.add_child(out.root(), t.delay(ch[i])));
  return out;
}

PlaneTree complementary_tree(const PlaneTree& t, const SplitChoice& s) {
  check_choice(t, s);
  int edges = 0;
  const auto& chosen = t.children(s.vertex);
  for (int i = s.first; i <= s.last; ++i) edges += t.subtree_size(chosen[i]);
  PlaneTree out;
  std::function<void(int, int)> walk = [&](int v, int to) {
    const auto& ch = t.children(v);
    for (int i = 0; i < static_cast<int>(ch.size()); ++i) {
      if (v == s.vertex && i == s.first) {
        int w = to;
        for (int e = 0; e < edges; ++e) w = out.add_child(w);
      }
      if (v == s.vertex && i >= s.first && i <= s.last) continue;
      walk(ch[i], out.add_child(to, t.delay(ch[i])));
    }
  };
  walk(t.root(), out.root());
  return out;
}

bool is_splitting(const PlaneTree& t, const SplitChoice& s) {
  check_choice(t, s);
  std::vector<int> inside = leaves_below(t, s);
  int worst_inside = 0;
  for (int v : inside) worst_inside = std::max(worst_inside, t.delay(v));
  for (int v : t.leaves())
    if (std::find(inside.begin(), inside.end(), v) == inside.end() && t.delay(v) < worst_inside)
      return false;
  return true;
}

std::optional<SplitChoice> find_splitting_subtree(const PlaneTree& t) {
  std::vector<int> level{t.root()};
  while (!level.empty()) {
    std::vector<int> next;
    for (int v : level) {
      const int k = static_cast<int>(t.children(v).size());
      for (int width = k; width >= 1; --width) {
        for (int first = 0; first + width <= k; ++first) {
          SplitChoice s{v, first, first + width - 1};
          if (v == t.root() && width == k) continue;  // T' would be all of T
          if (leaves_below(t, s).size() < 2) continue;  // a path gains nothing
          if (is_splitting(t, s)) return s;
        }
      }
      next.insert(next.end(), t.children(v).begin(), t.children(v).end());
    }
    level = std::move(next);
  }
  return std::nullopt;
}

Laurent plucking_factored(const PlaneTree& t) {
  auto s = find_splitting_subtree(t);
  if (!s) return plucking(t);
  return plucking_factored(splitting_subtree(t, *s)) * plucking_factored(complementary_tree(t, *s));
}

namespace {

struct Interval {
  int lo, hi;  // positions in some linear order
  int delay;
};

/// Laminar intervals as a plane forest under a common root.
PlaneTree nest_intervals(std::vector<Interval> intervals, TreeOrder order) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  PlaneTree t;
  std::vector<std::pair<int, int>> open;  // (hi, vertex)
  std::vector<int> vertex_delay;
  std::vector<int> ids;
  for (const Interval& iv : intervals) {
    while (!open.empty() && open.back().first < iv.lo) open.pop_back();
    if (!open.empty() && open.back().first < iv.hi) throw std::logic_error("arcs are not nested");
    int parent = open.empty() ? t.root() : open.back().second;
    int v = t.add_child(parent);
    ids.push_back(v);
    open.emplace_back(iv.hi, v);
  }
  for (std::size_t i = 0; i < intervals.size(); ++i)
    if (t.is_leaf(ids[i])) t.set_delay(ids[i], intervals[i].delay);
  return order == TreeOrder::Clockwise ? t : mirror(t);
}

}  // namespace

PlaneTree tree_from_state(const Connection& c, TreeOrder order) {
  if (!c.is_catalan()) throw std::invalid_argument("tree_from_state needs a Catalan state");
  if (has_bottom_returns(c)) throw std::invalid_argument("tree_from_state needs a state with no bottom returns");
  std::vector<Interval> intervals;
  for (const Arc& a : c.arcs()) {
    if (has_end_on(c, a, Side::Bottom)) continue;
    BoundaryPoint u = c.point(a.p), v = c.point(a.q);
    int iu = coordinate(c, u), iv = coordinate(c, v);
    int delay = 1;
    ArcKind kind = arc_kind(c, a);
    if (kind == ArcKind::LeftReturn || kind == ArcKind::RightReturn) delay = std::max(u.index, v.index);
    intervals.push_back({std::min(iu, iv), std::max(iu, iv), delay});
  }
  return nest_intervals(std::move(intervals), order);
}

PlaneTree tree_from_arcs(const Connection& c, const std::vector<int>& ends, TreeOrder order) {
  std::vector<int> rank(c.size(), -1);
  for (std::size_t i = 0; i < ends.size(); ++i) rank.at(ends[i]) = static_cast<int>(i);
  std::vector<Interval> intervals;
  for (int pos : ends) {
    int other = c.partner(pos);
    if (rank[other] < 0) throw std::invalid_argument("ends are not closed under the matching");
    if (rank[pos] < rank[other]) intervals.push_back({rank[pos], rank[other], 1});
  }
  return nest_intervals(std::move(intervals), order);
}

}  // namespace catalan
