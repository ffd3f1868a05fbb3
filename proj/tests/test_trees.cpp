#include "doctest.h"
#include "support/oracles.hpp"

#include "catalan/kauffman.hpp"
#include "catalan/selftest.hpp"
#include "catalan/trees.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace catalan;

namespace {

PlaneTree Tr(const char* text) { return PlaneTree::parse(text); }
Laurent P(const char* s) { return Laurent::parse(s); }

/// Polynomial read backwards: q^d p(1/q) for d the top degree.
Laurent reversed(const Laurent& p) {
  if (p.is_zero()) return p;
  Laurent out;
  for (const auto& [e, c] : p.terms()) out += Laurent::monomial(c, p.max_degree() + p.min_degree() - e);
  return out;
}

/// Every (vertex, first, last) with the splitting condition checked directly.
std::vector<SplitChoice> all_splits(const PlaneTree& t) {
  std::vector<SplitChoice> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto& ch = t.children(v);
    for (int a = 0; a < static_cast<int>(ch.size()); ++a) {
      for (int b = a; b < static_cast<int>(ch.size()); ++b) {
        std::vector<bool> inside(t.vertex_count(), false);
        std::function<void(int)> mark = [&](int u) {
          inside[u] = true;
          for (int c : t.children(u)) mark(c);
        };
        for (int i = a; i <= b; ++i) mark(ch[i]);
        int max_in = 0, min_out = 1 << 30, leaves_in = 0;
        for (int u : t.leaves()) {
          if (inside[u]) {
            max_in = std::max(max_in, t.delay(u));
            ++leaves_in;
          } else {
            min_out = std::min(min_out, t.delay(u));
          }
        }
        bool whole = v == t.root() && a == 0 && b == static_cast<int>(ch.size()) - 1;
        if (max_in <= min_out && leaves_in >= 2 && !whole) out.push_back({v, a, b});
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("text form") {
  CHECK(Tr("(()())").to_string() == "(()())");
  CHECK(Tr("( ():3 (()) )").to_string() == "(():3(()))");
  CHECK(Tr("(():1)").to_string() == "(())");
  CHECK_THROWS(Tr("(()"));
  CHECK_THROWS(Tr("((()):2)"));
  CHECK_THROWS(Tr("(():0)"));
}

TEST_CASE("tree_from_state") {
  for (int n = 0; n <= 4; ++n) {
    PlaneTree t = tree_from_state(identity_state(n));
    CHECK(t.edge_count() == 0);
    CHECK(oracle_coefficient(identity_state(n)) == 1);
  }
  Connection c = Connection::parse("cat(1,1): T1-L1, R1-B1");
  CHECK(tree_from_state(c) == Tr("(())"));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& s : enumerate_catalan(m, n))
        if (!has_bottom_returns(s)) CHECK(tree_from_state(s).edge_count() == m);
  CHECK_THROWS(tree_from_state(Connection::parse("cat(1,2): T1-L1, T2-R1, B1-B2")));
}

TEST_CASE("pluckable_leaves") {
  PlaneTree star = Tr("(()()())");
  CHECK(pluckable_leaves(star) == star.leaves());
  for (int k = 1; k <= 4; ++k) {
    PlaneTree t = delayed_star(k);
    auto leaves = t.leaves();
    CHECK(pluckable_leaves(t) == std::vector<int>{leaves[k], leaves[k + 1]});
  }
  CHECK(pluckable_leaves(Tr("(():2)")).empty());
}

TEST_CASE("right_count") {
  PlaneTree t = Tr("((()())(()))");
  CHECK(right_count(t, t.leaves().back()) == 0);
  PlaneTree cherry = Tr("(()())");
  CHECK(right_count(cherry, cherry.leaves().front()) == 1);
  for (int n = 1; n <= 6; ++n) {
    PlaneTree star;
    for (int i = 0; i < n; ++i) star.add_child(star.root());
    CHECK(right_count(star, star.leaves().front()) == n - 1);
  }
}

TEST_CASE("pluck") {
  CHECK(pluck(Tr("(())"), 1).vertex_count() == 1);
  PlaneTree two = Tr("(():3())");
  CHECK(pluck(two, two.leaves().back()) == Tr("(():2)"));
  PlaneTree deep = Tr("((())():4)");
  CHECK(pluck(deep, 2) == Tr("(()():3)"));
  CHECK_THROWS(pluck(deep, 1));
  CHECK_THROWS(pluck(deep, 3));
}

TEST_CASE("plucking") {
  CHECK(plucking(PlaneTree()) == 1);
  CHECK(plucking(Tr("(()())")) == P("1 + q"));
  for (int k = 1; k <= 4; ++k) CHECK(plucking(delayed_star(k)) == delayed_star_plucking(k));
  CHECK(plucking(Tr("(():2)")).is_zero());
}

TEST_CASE("delayed_star closed form") {
  const Laurent a = P("1 + q"), b = P("1 + q + q^2");
  for (int k = 1; k <= 4; ++k) {
    Laurent expected = catalan::monomial_shift(catalan::pow(a, k + 1) * catalan::pow(b, k), k * k);
    CHECK(delayed_star_plucking(k) == expected);
    CHECK(plucking_factored(delayed_star(k)) == expected);
  }
}

TEST_CASE("plucking against every pluck sequence") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> size(1, 8);
    PlaneTree t = oracle::random_tree(rng, size(rng), 3);
    CHECK(plucking(t) == oracle::plucking_by_sequences(t));
  }
}

TEST_CASE("ordered rooted sums") {
  PlaneTree t = Tr("((())():2)");
  CHECK(ordered_rooted_sum(t, PlaneTree()) == t);
  CHECK(ordered_rooted_sum(PlaneTree(), t) == t);
  CHECK(path_tree(3) == Tr("(((())))"));
  for (int n = 0; n <= 10; ++n)
    for (int m = 0; n + m <= 10; ++m)
      CHECK(plucking(ordered_rooted_sum(path_tree(n), path_tree(m))) == q_binomial(n + m, n));
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<int> size(1, 6);
    PlaneTree a = oracle::random_tree(rng, size(rng), 1), b = oracle::random_tree(rng, size(rng), 1);
    CHECK(plucking(ordered_rooted_sum(a, b)) ==
          plucking(a) * plucking(b) * q_binomial(a.edge_count() + b.edge_count(), a.edge_count()));
  }
}

TEST_CASE("find_splitting_subtree") {
  for (int k = 1; k <= 4; ++k) {
    PlaneTree t = delayed_star(k);
    auto s = find_splitting_subtree(t);
    REQUIRE(s.has_value());
    CHECK(s->vertex == t.root());
    PlaneTree part = splitting_subtree(t, *s);
    auto ones = pluckable_leaves(t);
    CHECK(part.leaves().size() >= ones.size());
    for (int v : ones) {
      auto& ch = t.children(t.root());
      int index = static_cast<int>(std::find(ch.begin(), ch.end(), v) - ch.begin());
      CHECK(index >= s->first);
      CHECK(index <= s->last);
    }
  }
  PlaneTree uniform = Tr("((()())(()()()))");
  for (int v = 0; v < uniform.vertex_count(); ++v) {
    int k = static_cast<int>(uniform.children(v).size());
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b) CHECK(is_splitting(uniform, {v, a, b}));
  }
  PlaneTree none = Tr("(():1():3():1():2)");
  CHECK(all_splits(none).empty());
  CHECK_FALSE(find_splitting_subtree(none).has_value());
}

TEST_CASE("split search agrees with a direct scan") {
  std::mt19937 rng(41);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> size(1, 10);
    PlaneTree t = oracle::random_tree(rng, size(rng), 4);
    CHECK(find_splitting_subtree(t).has_value() == !all_splits(t).empty());
    for (const auto& s : all_splits(t)) CHECK(is_splitting(t, s));
  }
}

TEST_CASE("complementary_tree") {
  PlaneTree t = Tr("((()())():2)");
  CHECK(complementary_tree(t, {t.root(), 0, 1}) == path_tree(t.edge_count()));
  PlaneTree single = Tr("(()():2)");
  CHECK(complementary_tree(single, {single.root(), 0, 0}) == single);
  PlaneTree star = delayed_star(1);
  CHECK(complementary_tree(star, {star.root(), 1, 2}) == Tr("(():2(())():2)"));
}

TEST_CASE("plucking_factored equals plucking") {
  CHECK(plucking_factored(PlaneTree()) == 1);
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    std::uniform_int_distribution<int> size(1, 12);
    PlaneTree t = oracle::random_tree(rng, size(rng), 4);
    CHECK(plucking_factored(t) == plucking(t));
  }
}

TEST_CASE("factorization over constructed splitting subtrees") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 500; ++i) {
    oracle::SplitTree b = oracle::random_tree_with_split(rng);
    CAPTURE(b.tree.to_string());
    REQUIRE(b.tree.vertex_count() <= 12);
    CHECK(is_splitting(b.tree, b.split));
    CHECK(plucking(b.tree) ==
          plucking(splitting_subtree(b.tree, b.split)) * plucking(complementary_tree(b.tree, b.split)));
  }
}

TEST_CASE("mirror reverses the normalized polynomial") {
  std::mt19937 rng(8);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> size(1, 10);
    PlaneTree t = oracle::random_tree(rng, size(rng), i % 2 ? 1 : 3);
    CHECK(mirror(mirror(t)) == t);
    Laurent p = plucking(t), r = plucking(mirror(t));
    CHECK(star_normalize(r) == reversed(star_normalize(p)));
  }
}

TEST_CASE("zero plucking tracks realizability") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& s : enumerate_catalan(m, n))
        if (!has_bottom_returns(s)) CHECK(plucking(tree_from_state(s)).is_zero() == !is_realizable(s));
}

}
