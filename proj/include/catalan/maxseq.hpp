#pragma once

#include "catalan/states.hpp"

#include <vector>

namespace catalan {

/// Largest number of positive markers over the Kauffman states realizing a
/// realizable state with no bottom returns.
long long beta(const Connection& c);

/// Row-sorted sequence b_1..b_m attaining beta; row j gets b_j positive
/// markers on the left and n - b_j negative ones after them.
std::vector<int> max_sequence(const Connection& c);

/// The state produced by the row-sorted grid of b (entries in 0..n).
Connection sequence_realizes(const std::vector<int>& b, int n);

}  // namespace catalan
