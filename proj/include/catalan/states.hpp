#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

enum class Side { Top, Right, Bottom, Left };

/// A marked point on the boundary of the rectangle. Indices start at 1:
/// top and bottom points count from the left, side points from the top.
struct BoundaryPoint {
  Side side;
  int index;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

std::string to_string(BoundaryPoint p);

/// An arc given by the cyclic positions of its ends, with p < q.
struct Arc {
  int p;
  int q;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/**
 * Crossingless connection in a rectangle with m points on each side, n_t on
 * top and n_b on the bottom. When n_t == n_b it is a Catalan state.
 *
 * Points are addressed by their position in the clockwise cyclic order
 *   x_1..x_{n_t}, y'_1..y'_m, x'_{n_b}..x'_1, y_m..y_1
 * where x are top points, y' right, x' bottom and y left.
 */
class Connection {
 public:
  Connection() = default;
  Connection(int m, int n_top, int n_bottom,
             const std::vector<std::pair<BoundaryPoint, BoundaryPoint>>& pairs);
  static Connection from_partners(int m, int n_top, int n_bottom, std::vector<int> partner);
  /// Parses "cat(m,n): T1-T2, L1-B1" or "conn(m,nt,nb): ...".
  static Connection parse(std::string_view text);

  int height() const { return m_; }
  int n_top() const { return nt_; }
  int n_bottom() const { return nb_; }
  /// Width of a Catalan state.
  int width() const { return nt_; }
  bool is_catalan() const { return nt_ == nb_; }
  int size() const { return static_cast<int>(partner_.size()); }
  int arc_count() const { return size() / 2; }

  int position(BoundaryPoint p) const;
  BoundaryPoint point(int position) const;
  Side side(int position) const { return point(position).side; }
  int partner(int position) const { return partner_[position]; }
  const std::vector<int>& partners() const { return partner_; }

  /// Arcs sorted by their first end.
  std::vector<Arc> arcs() const;
  Arc arc_at(int position) const;
  Arc arc_between(BoundaryPoint a, BoundaryPoint b) const;

  std::string to_string() const;

  friend bool operator==(const Connection&, const Connection&) = default;
  friend auto operator<=>(const Connection&, const Connection&) = default;

 private:
  void validate() const;

  int m_ = 0;
  int nt_ = 0;
  int nb_ = 0;
  std::vector<int> partner_;
};

/// A vertical stack that closed a loop or whose sides did not match.
using MaybeConnection = std::optional<Connection>;
inline constexpr std::nullopt_t K0 = std::nullopt;

enum class Orientation { Horizontal, Vertical };

/// Every Catalan state of Cat(m,n), ordered by partner vector.
std::vector<Connection> enumerate_catalan(int m, int n);
/// The state of n vertical strands in Cat(0,n).
Connection identity_state(int n);

/// Number of arcs crossing l^h_i (0 <= i <= m) or l^v_j (0 <= j <= n).
int line_intersections(const Connection& c, Orientation o, int index);
bool is_realizable(const Connection& c);

/// C1 on top of C2. K0 when the widths disagree or a loop closes.
MaybeConnection vertical_product(const Connection& upper, const Connection& lower);
MaybeConnection vertical_product(const MaybeConnection& upper, const MaybeConnection& lower);

/// Moves both top corners down t units (up when t < 0).
Connection tau_shift(const Connection& c, int t);
Connection rotate_pi(const Connection& c);
/// Mirror image in a vertical line.
Connection reflect(const Connection& c);
/// Clockwise quarter turn, Cat(m,n) -> Cat(n,m).
Connection rotate_quarter(const Connection& c);

/// Coordinate of a non-bottom point: x_i -> i-n, y'_i -> i, y_i -> 1-n-i.
int coordinate(const Connection& c, BoundaryPoint p);

enum class ArcKind { TopReturn, BottomReturn, LeftReturn, RightReturn, TopBottom, Other };
ArcKind arc_kind(const Connection& c, Arc a);

/// Which sides carry returns.
struct StateClass {
  bool has_top_returns = false;
  bool has_bottom_returns = false;
  bool has_left_returns = false;
  bool has_right_returns = false;
  friend bool operator==(const StateClass&, const StateClass&) = default;
};
StateClass classify(const Connection& c);
bool has_top_returns(const Connection& c);
bool has_bottom_returns(const Connection& c);
bool has_end_on(const Connection& c, Arc a, Side s);

/// Neither a top-bottom arc nor a return on the left or right side.
bool is_proper(const Connection& c, Arc a);
/// Labels (a,b) of a proper arc read as y_a -> y'_b, using
/// x_i = y_{1-i} = y'_{i-n} and x'_i = y_{m+i} = y'_{m+n-i+1}.
std::pair<int, int> extended_labels(const Connection& c, Arc a);

/// C with arc a removed; the height drops by one.
Connection remove_arc(const Connection& c, Arc a);
bool is_removable(const Connection& c, Arc a);
std::vector<Arc> find_removable_arcs(const Connection& c);

/// Lines l^h_i, 0 <= i <= m, met by exactly n arcs.
std::vector<int> saturated_lines(const Connection& c);
/// First saturated line, if any.
std::optional<int> is_vertically_decomposable(const Connection& c);
/// Cuts along l^h_i into Cat(i,n) over Cat(m-i,n). Line must be saturated.
std::pair<Connection, Connection> split_at(const Connection& c, int i);
/// Cuts along every saturated interior line, top factor first.
std::vector<Connection> vertical_decompose(const Connection& c);

}  // namespace catalan
