#pragma once

#include "catalan/laurent.hpp"
#include "catalan/states.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace catalan {

/// Which smoothing a positive marker picks at a lattice crossing.
enum class SmoothingConvention {
  NorthEast,  // positive joins N-E and S-W
  NorthWest,  // positive joins N-W and S-E
};
inline constexpr SmoothingConvention kSmoothingConvention = SmoothingConvention::NorthEast;

/// Raised when an enumeration would exceed the configured number of markers.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Kauffman state of L(m,n): one marker, +1 or -1, per crossing.
class MarkerGrid {
 public:
  MarkerGrid(int m, int n);
  /// Bit i*n+j set means a positive marker in row i, column j.
  static MarkerGrid from_bits(int m, int n, std::uint64_t bits);

  int rows() const { return m_; }
  int columns() const { return n_; }
  int get(int row, int column) const { return signs_[row * n_ + column]; }
  void set(int row, int column, int sign);
  /// Positive markers minus negative ones.
  int balance() const;

 private:
  int m_, n_;
  std::vector<int> signs_;
};

struct Resolution {
  Connection state;
  int loops;
};

Resolution smooth(const MarkerGrid& grid, SmoothingConvention convention = kSmoothingConvention);

/// (-A^2 - A^-2)^k
Laurent loop_factor(int k);

/// 20, or ORACLE_BUDGET_BITS when set.
int default_budget_bits();

struct OracleOptions {
  int budget_bits = default_budget_bits();
  SmoothingConvention convention = kSmoothingConvention;
  int threads = 0;  // 0 keeps the OpenMP default
};

/// Coefficient of every realizable state of Cat(m,n) in the bracket of L(m,n).
using BracketTable = std::map<Connection, Laurent>;

BracketTable bracket_table(int m, int n, const OracleOptions& options = {});
/// Single-threaded reference for bracket_table.
BracketTable bracket_table_serial(int m, int n, const OracleOptions& options = {});

Laurent oracle_coefficient(const Connection& c, const OracleOptions& options = {});

/// Bracket tables computed once per (m,n) and shared across threads.
class BracketCache {
 public:
  explicit BracketCache(OracleOptions options = {}) : options_(options) {}
  const OracleOptions& options() const { return options_; }
  bool within_budget(int m, int n) const { return m * n <= options_.budget_bits; }
  const BracketTable& table(int m, int n);
  Laurent coefficient(const Connection& c);

 private:
  OracleOptions options_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, BracketTable> tables_;
};

}  // namespace catalan
