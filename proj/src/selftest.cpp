#include "catalan/selftest.hpp"

#include "catalan/maxseq.hpp"

namespace catalan {

PlaneTree delayed_star(int k) {
  PlaneTree t;
  for (int i = k; i >= 1; --i) t.add_child(t.root(), 2 * i);
  t.add_child(t.root());
  t.add_child(t.root());
  for (int i = 1; i <= k; ++i) t.add_child(t.root(), 2 * i);
  return t;
}

Laurent delayed_star_plucking(int k) {
  Laurent one_q = Laurent::parse("1 + q"), three = Laurent::parse("1 + q + q^2");
  return monomial_shift(pow(one_q, k + 1) * pow(three, k), k * k);
}

Connection paired_returns_state(int k) {
  using P = BoundaryPoint;
  std::vector<std::pair<P, P>> pairs = {
      {{Side::Top, 1}, {Side::Top, 2}},
      {{Side::Top, 3}, {Side::Top, 4}},
      {{Side::Left, 2 * k + 1}, {Side::Bottom, 2}},
      {{Side::Left, 2 * k + 2}, {Side::Bottom, 1}},
      {{Side::Right, 2 * k + 1}, {Side::Bottom, 3}},
      {{Side::Right, 2 * k + 2}, {Side::Bottom, 4}},
  };
  for (int j = 1; j <= k; ++j) {
    pairs.push_back({{Side::Left, 2 * j - 1}, {Side::Left, 2 * j}});
    pairs.push_back({{Side::Right, 2 * j - 1}, {Side::Right, 2 * j}});
  }
  return Connection(2 * k + 2, 4, 4, pairs);
}

Connection factorizable_state() {
  return Connection::parse("cat(4,6): T1-L1, T2-T5, T3-T4, T6-R1, R2-B2, R3-B5, R4-B6, B4-B3, B1-L4, L3-L2");
}

std::vector<CheckResult> run_selftest(int max_mn, const OracleOptions& options) {
  std::vector<CheckResult> out;
  CoefficientEngine engine(options);

  for (int m = 0; m <= max_mn; ++m) {
    for (int n = 0; n <= max_mn; ++n) {
      if (m * n > max_mn || m + n == 0 || (m == 0 && n > 3) || (n == 0 && m > 3)) continue;
      int states = 0, wrong = 0;
      std::string first_wrong;
      for (const Connection& c : enumerate_catalan(m, n)) {
        ++states;
        if (engine.value(c) != engine.oracle().coefficient(c)) {
          if (wrong++ == 0) first_wrong = c.to_string();
        }
      }
      out.push_back({"engine = oracle on Cat(" + std::to_string(m) + "," + std::to_string(n) + ")", wrong == 0,
                     std::to_string(states - wrong) + "/" + std::to_string(states) +
                         (wrong ? " first mismatch " + first_wrong : "")});
    }
  }

  {
    const Connection c = factorizable_state();
    auto family = find_vertical_factorization(c);
    bool ok = family.has_value();
    std::string detail;
    if (ok) {
      VerticalFactorParts parts = vertical_factor_parts(c, *family);
      Laurent t = engine.value(parts.tree_state), r = engine.value(parts.rainbow_state);
      Laurent v = engine.value(c);
      ok = t == Laurent::parse("A^-2 + A^2") && r == Laurent::parse("A^-12 + 2*A^-8 + 3*A^-4 + 2 + A^4") &&
           v == Laurent::parse("A^-14 + 3*A^-10 + 5*A^-6 + 5*A^-2 + 3*A^2 + A^6");
      detail = t.to_string() + " times " + r.to_string() + " = " + v.to_string();
    }
    out.push_back({"vertical factorization of " + c.to_string(), ok, detail});
  }

  for (int k = 1; k <= 4; ++k) {
    PlaneTree t = delayed_star(k);
    Laurent want = delayed_star_plucking(k);
    bool ok = plucking(t) == want && plucking_factored(t) == want;
    out.push_back({"plucking of " + t.to_string(), ok, want.to_string("q")});
  }

  for (int k = 1; k <= 5; ++k) {
    Connection c = paired_returns_state(k);
    std::vector<int> b = max_sequence(c);
    bool ok = beta(c) == 7 * k + 5 && sequence_realizes(b, c.width()) == c;
    for (int j = 1; j <= k; ++j) ok = ok && b[2 * j - 1] == 4 && b[2 * j - 2] == 3;
    ok = ok && b[2 * k] == 3 && b[2 * k + 1] == 2;
    out.push_back({"beta and max sequence of paired returns, k=" + std::to_string(k), ok,
                   "beta=" + std::to_string(beta(c))});
  }
  return out;
}

}  // namespace catalan
