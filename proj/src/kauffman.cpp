#include "catalan/kauffman.hpp"

#include <cstdlib>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catalan {

MarkerGrid::MarkerGrid(int m, int n) : m_(m), n_(n), signs_(static_cast<std::size_t>(m * n), -1) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative grid size");
}

MarkerGrid MarkerGrid::from_bits(int m, int n, std::uint64_t bits) {
  MarkerGrid g(m, n);
  for (int k = 0; k < m * n; ++k) g.signs_[k] = (bits >> k) & 1u ? 1 : -1;
  return g;
}

void MarkerGrid::set(int row, int column, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("markers are +1 or -1");
  signs_.at(static_cast<std::size_t>(row * n_ + column)) = sign;
}

int MarkerGrid::balance() const {
  int b = 0;
  for (int s : signs_) b += s;
  return b;
}

namespace {

/// Smooths grids of a fixed size, reusing its buffers between calls.
///
/// Nodes are the edges of the grid: H(i,j), j = 0..n, are the horizontal
/// strand pieces of row i and V(i,j), i = 0..m, the vertical ones of
/// column j. Each tile joins its four nodes in two pairs.
class Smoother {
 public:
  Smoother(int m, int n, SmoothingConvention convention)
      : m_(m), n_(n), convention_(convention),
        size_(2 * (m + n)),
        nodes_(m * (n + 1) + (m + 1) * n),
        adj_(static_cast<std::size_t>(2 * nodes_)),
        seen_(static_cast<std::size_t>(nodes_)),
        node_position_(static_cast<std::size_t>(nodes_), -1),
        position_node_(static_cast<std::size_t>(size_)),
        partner_(static_cast<std::size_t>(size_)) {
    if (m == 0 || n == 0) {
      // no crossings: straight strands, and each strand is a single node
      for (int j = 1; j <= n; ++j) join(j - 1, 2 * n - j);
      for (int i = 1; i <= m; ++i) join(2 * m - i, i - 1);
      trivial_ = true;
      return;
    }
    for (int i = 1; i <= m; ++i) {
      attach(h(i - 1, 0), size_ - i);       // y_i
      attach(h(i - 1, n), n + i - 1);       // y'_i
    }
    for (int j = 1; j <= n; ++j) {
      attach(v(0, j - 1), j - 1);           // x_j
      attach(v(m, j - 1), 2 * n + m - j);   // x'_j
    }
  }

  /// Fills partner() for the grid given by `sign(i, j)` and returns the loop count.
  template <class Sign>
  int run(Sign sign) {
    if (trivial_) return 0;
    std::fill(adj_.begin(), adj_.end(), -1);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        int north = v(i, j), south = v(i + 1, j), west = h(i, j), east = h(i, j + 1);
        bool north_east = (sign(i, j) > 0) == (convention_ == SmoothingConvention::NorthEast);
        if (north_east) {
          link(north, east);
          link(south, west);
        } else {
          link(north, west);
          link(south, east);
        }
      }
    }
    std::fill(seen_.begin(), seen_.end(), 0);
    for (int pos = 0; pos < size_; ++pos) {
      int start = position_node_[pos];
      if (seen_[start]) continue;
      int prev = -1, cur = start;
      for (;;) {
        seen_[cur] = 1;
        int next = adj_[2 * cur] != prev ? adj_[2 * cur] : adj_[2 * cur + 1];
        if (next == -1) break;
        prev = cur;
        cur = next;
      }
      partner_[pos] = node_position_[cur];
      partner_[node_position_[cur]] = pos;
    }
    int loops = 0;
    for (int start = 0; start < nodes_; ++start) {
      if (seen_[start]) continue;
      ++loops;
      int prev = -1, cur = start;
      while (!seen_[cur]) {
        seen_[cur] = 1;
        int next = adj_[2 * cur] != prev ? adj_[2 * cur] : adj_[2 * cur + 1];
        prev = cur;
        cur = next;
      }
    }
    return loops;
  }

  const std::vector<int>& partner() const { return partner_; }

  std::string key() const { return std::string(partner_.begin(), partner_.end()); }

 private:
  int h(int i, int j) const { return i * (n_ + 1) + j; }
  int v(int i, int j) const { return m_ * (n_ + 1) + i * n_ + j; }
  void attach(int node, int pos) {
    node_position_[node] = pos;
    position_node_[pos] = node;
  }
  void join(int p, int q) {
    partner_[p] = q;
    partner_[q] = p;
  }
  void link(int a, int b) {
    adj_[2 * a + (adj_[2 * a] == -1 ? 0 : 1)] = b;
    adj_[2 * b + (adj_[2 * b] == -1 ? 0 : 1)] = a;
  }

  int m_, n_;
  SmoothingConvention convention_;
  int size_, nodes_;
  std::vector<int> adj_;
  std::vector<char> seen_;
  std::vector<int> node_position_;
  std::vector<int> position_node_;
  std::vector<int> partner_;
  bool trivial_ = false;
};

/// counts[(balance, loops)] for one resolved state
using Tally = std::map<std::pair<int, int>, std::uint64_t>;
using PartialTable = std::unordered_map<std::string, Tally>;

void check_budget(int m, int n, const OracleOptions& options) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative lattice size");
  if (m * n > options.budget_bits || m * n > 62)
    throw BudgetExceeded("unreachable within budget: L(" + std::to_string(m) + "," + std::to_string(n) +
                         ") has " + std::to_string(m * n) + " crossings, budget is " +
                         std::to_string(options.budget_bits));
}

void tally_range(int m, int n, SmoothingConvention convention, std::uint64_t begin, std::uint64_t end,
                 std::uint64_t stride, PartialTable& out) {
  Smoother s(m, n, convention);
  for (std::uint64_t bits = begin; bits < end; bits += stride) {
    int loops = s.run([&](int i, int j) { return (bits >> (i * n + j)) & 1u ? 1 : -1; });
    int balance = 2 * __builtin_popcountll(bits) - m * n;
    ++out[s.key()][{balance, loops}];
  }
}

BracketTable finish(int m, int n, const PartialTable& merged) {
  std::map<int, Laurent> loop_powers;
  BracketTable table;
  for (const auto& [key, tally] : merged) {
    Laurent sum;
    for (const auto& [bl, count] : tally) {
      auto [it, fresh] = loop_powers.try_emplace(bl.second);
      if (fresh) it->second = loop_factor(bl.second);
      sum += Laurent::monomial(Integer(count), bl.first) * it->second;
    }
    if (sum.is_zero()) continue;
    std::vector<int> partner(key.begin(), key.end());
    table.emplace(Connection::from_partners(m, n, n, std::move(partner)), std::move(sum));
  }
  return table;
}

void merge_into(PartialTable& into, const PartialTable& from) {
  for (const auto& [key, tally] : from) {
    Tally& t = into[key];
    for (const auto& [bl, count] : tally) t[bl] += count;
  }
}

}  // namespace

Resolution smooth(const MarkerGrid& grid, SmoothingConvention convention) {
  const int m = grid.rows(), n = grid.columns();
  Smoother s(m, n, convention);
  int loops = s.run([&](int i, int j) { return grid.get(i, j); });
  return {Connection::from_partners(m, n, n, s.partner()), loops};
}

Laurent loop_factor(int k) {
  Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  return pow(delta, static_cast<unsigned>(k));
}

int default_budget_bits() {
  if (const char* env = std::getenv("ORACLE_BUDGET_BITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 20;
}

BracketTable bracket_table_serial(int m, int n, const OracleOptions& options) {
  check_budget(m, n, options);
  PartialTable partial;
  tally_range(m, n, options.convention, 0, std::uint64_t{1} << (m * n), 1, partial);
  return finish(m, n, partial);
}

BracketTable bracket_table(int m, int n, const OracleOptions& options) {
  check_budget(m, n, options);
  const std::uint64_t total = std::uint64_t{1} << (m * n);
#ifdef _OPENMP
  int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  std::vector<PartialTable> partials(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    const int count = omp_get_num_threads();
    tally_range(m, n, options.convention, static_cast<std::uint64_t>(t), total, static_cast<std::uint64_t>(count),
                partials[t]);
  }
  // merge in thread order so the result never depends on scheduling
  PartialTable merged;
  for (const PartialTable& p : partials) merge_into(merged, p);
  return finish(m, n, merged);
#else
  (void)total;
  return bracket_table_serial(m, n, options);
#endif
}

Laurent oracle_coefficient(const Connection& c, const OracleOptions& options) {
  if (!c.is_catalan()) throw std::invalid_argument("the oracle needs a Catalan state");
  BracketTable table = bracket_table(c.height(), c.width(), options);
  auto it = table.find(c);
  return it == table.end() ? Laurent() : it->second;
}

const BracketTable& BracketCache::table(int m, int n) {
  std::lock_guard lock(mutex_);
  auto it = tables_.find({m, n});
  if (it == tables_.end()) it = tables_.emplace(std::pair{m, n}, bracket_table(m, n, options_)).first;
  return it->second;
}

Laurent BracketCache::coefficient(const Connection& c) {
  if (!c.is_catalan()) throw std::invalid_argument("the oracle needs a Catalan state");
  const BracketTable& t = table(c.height(), c.width());
  auto it = t.find(c);
  return it == t.end() ? Laurent() : it->second;
}

}  // namespace catalan
