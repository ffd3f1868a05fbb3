#include "doctest.h"
#include "support/oracles.hpp"

#include "catalan/kauffman.hpp"
#include "catalan/maxseq.hpp"
#include "catalan/selftest.hpp"

#include <functional>
#include <numeric>

using namespace catalan;

namespace {

std::vector<Connection> roof_states(int max_side) {
  std::vector<Connection> out;
  for (int m = 0; m <= max_side; ++m)
    for (int n = 0; n <= max_side; ++n)
      for (const auto& c : enumerate_catalan(m, n))
        if (!has_bottom_returns(c) && is_realizable(c)) out.push_back(c);
  return out;
}

std::uint64_t row_sorted_bits(const std::vector<int>& b, int n) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j < b[i]; ++j) bits |= std::uint64_t{1} << (i * n + j);
  return bits;
}

}  // namespace

TEST_SUITE("maxseq") {

TEST_CASE("beta of the paired-returns family") {
  for (int k = 1; k <= 5; ++k) CHECK(beta(paired_returns_state(k)) == 7 * k + 5);
  for (int n = 0; n <= 4; ++n) CHECK(beta(identity_state(n)) == 0);
}

TEST_CASE("maximal sequence of the paired-returns family") {
  for (int k = 1; k <= 5; ++k) {
    auto b = max_sequence(paired_returns_state(k));
    REQUIRE(b.size() == static_cast<std::size_t>(2 * k + 2));
    for (int j = 1; j <= k; ++j) CHECK(b[2 * j - 1] == 4);
    for (int j = 1; j <= k + 1; ++j) CHECK(b[2 * j - 2] == 3);
    CHECK(b[2 * k + 1] == 2);
  }
}

TEST_CASE("a single corner arc gives a full row") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs{{{Side::Top, n}, {Side::Right, 1}},
                                                               {{Side::Left, 1}, {Side::Bottom, 1}}};
    for (int k = 1; k < n; ++k) pairs.push_back({{Side::Top, k}, {Side::Bottom, k + 1}});
    Connection c(1, n, n, pairs);
    CHECK(max_sequence(c) == std::vector<int>{n});
    CHECK(beta(c) == oracle::beta_by_enumeration(c));
  }
}

TEST_CASE("sequence_realizes") {
  // all positive: each row pushes strands one column right
  CHECK(sequence_realizes({2, 2}, 2) == Connection::parse("cat(2,2): T1-R2, T2-R1, L1-B2, L2-B1"));
  // all negative: each row pushes strands one column left
  CHECK(sequence_realizes({0, 0}, 2) == Connection::parse("cat(2,2): T1-L1, T2-L2, R1-B1, R2-B2"));
  CHECK_THROWS(sequence_realizes({3}, 2));
}

TEST_CASE("beta is the largest positive count over realizing grids") {
  for (const auto& c : roof_states(3)) {
    CAPTURE(c.to_string());
    const int m = c.height(), n = c.width();
    auto b = max_sequence(c);
    CHECK(beta(c) == std::accumulate(b.begin(), b.end(), 0LL));
    CHECK(beta(c) == oracle::beta_by_enumeration(c));
    for (int x : b) {
      CHECK(x >= 0);
      CHECK(x <= n);
    }
    CHECK(sequence_realizes(b, n) == c);
    // among row-sorted grids the maximum is attained once
    int maximizers = 0, best = -1;
    std::vector<int> seq(m, 0), found;
    std::function<void(int)> walk = [&](int row) {
      if (row == m) {
        MarkerGrid g = MarkerGrid::from_bits(m, n, row_sorted_bits(seq, n));
        if (smooth(g).state != c) return;
        int total = std::accumulate(seq.begin(), seq.end(), 0);
        if (total > best) {
          best = total;
          maximizers = 0;
        }
        if (total == best) {
          ++maximizers;
          found = seq;
        }
        return;
      }
      for (int v = 0; v <= n; ++v) {
        seq[row] = v;
        walk(row + 1);
      }
    };
    walk(0);
    CHECK(best == beta(c));
    CHECK(maximizers == 1);
    CHECK(found == b);
  }
}

TEST_CASE("rejects states outside the domain") {
  Connection floor = Connection::parse("cat(1,2): T1-L1, T2-R1, B1-B2");
  CHECK_THROWS(beta(floor));
  CHECK_THROWS(max_sequence(floor));
  Connection blocked = Connection::parse("cat(3,1): T1-L3, L1-L2, R1-R2, R3-B1");
  CHECK_THROWS(beta(blocked));
}

}
