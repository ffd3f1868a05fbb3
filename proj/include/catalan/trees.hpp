#pragma once

#include "catalan/laurent.hpp"
#include "catalan/states.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

/**
 * Plane rooted tree with a delay on every leaf.
 *
 * Vertex 0 is the root; children are kept left to right. Delays are only
 * meaningful on leaves and are reset to 1 on vertices with children.
 * Text form: tree = '(' tree* ')' [':' delay], e.g. "(()():2)".
 */
class PlaneTree {
 public:
  PlaneTree();
  static PlaneTree parse(std::string_view text);

  int root() const { return 0; }
  int add_child(int parent, int delay = 1);
  void set_delay(int leaf, int delay);

  int vertex_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int parent(int v) const { return nodes_[v].parent; }
  const std::vector<int>& children(int v) const { return nodes_[v].children; }
  bool is_leaf(int v) const { return v != 0 && nodes_[v].children.empty(); }
  int delay(int v) const { return nodes_[v].delay; }
  int subtree_size(int v) const;
  /// Leaves in left-to-right order.
  std::vector<int> leaves() const;

  std::string to_string() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.to_string() == b.to_string();
  }

 private:
  struct Node {
    int parent;
    int delay;
    std::vector<int> children;
  };
  std::vector<Node> nodes_;
};

/// Path with k edges hanging from the root; the leaf has delay 1.
PlaneTree path_tree(int k, int leaf_delay = 1);
/// Roots identified, children of a to the left of children of b.
PlaneTree ordered_rooted_sum(const PlaneTree& a, const PlaneTree& b);
/// Left-right mirror image, delays kept.
PlaneTree mirror(const PlaneTree& t);

std::vector<int> pluckable_leaves(const PlaneTree& t);
/// Vertices strictly to the right of the path from the root to v.
int right_count(const PlaneTree& t, int v);
/// Removes leaf v; other old leaves lose one delay (never below 1).
PlaneTree pluck(const PlaneTree& t, int v);

/// Plucking polynomial Q(T) in q.
Laurent plucking(const PlaneTree& t);

/// T' = children first..last of `vertex` with their subtrees.
struct SplitChoice {
  int vertex;
  int first;
  int last;
};

PlaneTree splitting_subtree(const PlaneTree& t, const SplitChoice& s);
/// T with T' replaced by a path on the same number of edges.
PlaneTree complementary_tree(const PlaneTree& t, const SplitChoice& s);
/// Whether every leaf of T' is delayed no more than every other leaf.
bool is_splitting(const PlaneTree& t, const SplitChoice& s);
/// First nontrivial splitting subtree, shallowest vertex and widest run first.
std::optional<SplitChoice> find_splitting_subtree(const PlaneTree& t);
/// Plucking polynomial via repeated splitting.
Laurent plucking_factored(const PlaneTree& t);

enum class TreeOrder {
  Clockwise,         // children follow the boundary clockwise from the bottom-left corner
  CounterClockwise,  // the opposite order
};
inline constexpr TreeOrder kTreeOrder = TreeOrder::Clockwise;

/// Dual tree of the arcs with no bottom end, rooted at the region on the
/// bottom side. Needs a Catalan state with no bottom returns.
PlaneTree tree_from_state(const Connection& c, TreeOrder order = kTreeOrder);
/// Dual tree of a set of arcs, rooted at the region holding the boundary
/// points outside `ends`, a clockwise run of consecutive positions.
PlaneTree tree_from_arcs(const Connection& c, const std::vector<int>& ends, TreeOrder order = kTreeOrder);

}  // namespace catalan
