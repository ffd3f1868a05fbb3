#pragma once

#include "catalan/coeff.hpp"

#include <string>
#include <vector>

namespace catalan {

/// Root with 2k+2 leaves; delays read 2k, ..., 4, 2, 1, 1, 2, 4, ..., 2k
/// from left to right.
PlaneTree delayed_star(int k);

/// q^{k^2} (1+q)^{k+1} (1+q+q^2)^k, the plucking polynomial of delayed_star(k).
Laurent delayed_star_plucking(int k);

/**
 * State of Cat(2k+2, 4): top returns x1-x2 and x3-x4, left returns
 * y_{2j-1}-y_{2j} and right returns y'_{2j-1}-y'_{2j} for j <= k, and the
 * legs y_{2k+1}-x'_2, y_{2k+2}-x'_1, y'_{2k+1}-x'_3, y'_{2k+2}-x'_4.
 */
Connection paired_returns_state(int k);

/// A state of Cat(4,6) whose coefficient factors through a two-arc family.
Connection factorizable_state();

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Engine against oracle on every Catalan state with mn <= max_mn, plus the
/// fixed examples above.
std::vector<CheckResult> run_selftest(int max_mn, const OracleOptions& options = {});

}  // namespace catalan
