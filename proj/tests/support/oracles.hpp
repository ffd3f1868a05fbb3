#pragma once

// Slow, independent reimplementations used to check the library.

#include "catalan/kauffman.hpp"
#include "catalan/laurent.hpp"
#include "catalan/states.hpp"
#include "catalan/trees.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Dense polynomial with machine coefficients, index = exponent.
using Dense = std::vector<long long>;

Dense dense_mul(const Dense& a, const Dense& b);
/// Exact quotient by schoolbook division; aborts the test on a remainder.
Dense dense_div(const Dense& a, const Dense& b);
catalan::Laurent to_laurent(const Dense& a);

/// prod_{i=1..k} (1 - q^{n-i+1}) / (1 - q^i)
catalan::Laurent q_binomial_by_product(int n, int k);

/// (2k)! / (k! (k+1)!)
std::uint64_t catalan_number(int k);

/// No two arcs interleave, checked pair by pair.
bool pairwise_noncrossing(const catalan::Connection& c);

/// Closed loops of a grid by union-find over the four ports of every tile.
int loops_by_union_find(const catalan::MarkerGrid& g, catalan::SmoothingConvention convention);

/// Plucking polynomial summed over every pluck sequence, with r(v) read off
/// as the number of vertices after leaf v in preorder.
catalan::Laurent plucking_by_sequences(const catalan::PlaneTree& t);

/// Bracket table of L(m,n) built one row at a time: the L(1,n) table glued
/// below the running table, loops counted by union-find at every seam.
catalan::BracketTable bracket_by_rows(int m, int n);
/// One entry of that table, skipping partial states that cannot reach it.
catalan::Laurent coefficient_by_rows(const catalan::Connection& target);

/// Largest number of positive markers among grids resolving to c.
int beta_by_enumeration(const catalan::Connection& c);

/// Uniformly random plane tree on `vertices` vertices, delays in 1..max_delay.
catalan::PlaneTree random_tree(std::mt19937& rng, int vertices, int max_delay);

struct SplitTree {
  catalan::PlaneTree tree;
  catalan::SplitChoice split;
};

/// At most 12 vertices, delays at most 4, with a known splitting subtree:
/// low-delay subtrees grafted as a run of children onto a host whose leaves
/// carry delays no smaller.
SplitTree random_tree_with_split(std::mt19937& rng);

}  // namespace oracle
