#include "catalan/coeff.hpp"

#include "catalan/maxseq.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace catalan {

Laurent coeff_no_bottom_returns(const Connection& c, TreeOrder order) {
  if (!c.is_catalan() || has_bottom_returns(c))
    throw std::invalid_argument("tree formula needs a Catalan state with no bottom returns");
  if (!is_realizable(c)) return Laurent();
  Laurent q = star_normalize(plucking(tree_from_state(c, order)));
  const long long shift = 2 * beta(c) - static_cast<long long>(c.height()) * c.width();
  return monomial_shift(substitute_power(q, -4), static_cast<int>(shift));
}

std::optional<ArcReduction> reduce_removable(const Connection& c) {
  for (const Arc& a : c.arcs()) {
    if (!is_removable(c, a)) continue;
    auto [left, right] = extended_labels(c, a);
    return ArcReduction{a, Laurent::monomial(1, right - left), remove_arc(c, a)};
  }
  return std::nullopt;
}

namespace {

std::optional<int> left_chain(const Connection& c, BoundaryPoint p) {
  switch (p.side) {
    case Side::Left: return p.index;
    case Side::Top: return 1 - p.index;
    case Side::Bottom: return c.height() + p.index;
    default: return std::nullopt;
  }
}

std::optional<int> right_chain(const Connection& c, BoundaryPoint p) {
  switch (p.side) {
    case Side::Right: return p.index;
    case Side::Top: return p.index - c.width();
    case Side::Bottom: return c.height() + c.width() - p.index + 1;
    default: return std::nullopt;
  }
}

/// Indices j of the arcs joining y_j to y_{j+1} or y'_j to y'_{j+1},
/// split by membership in the family.
void consecutive_indices(const Connection& c, const std::vector<bool>& member, std::vector<int>& inside,
                         std::vector<int>& outside) {
  for (const Arc& a : c.arcs()) {
    BoundaryPoint u = c.point(a.p), v = c.point(a.q);
    for (auto chain : {left_chain, right_chain}) {
      auto lu = chain(c, u), lv = chain(c, v);
      if (!lu || !lv || std::abs(*lu - *lv) != 1) continue;
      (member[a.p] ? inside : outside).push_back(std::min(*lu, *lv));
    }
  }
}

bool separated(const std::vector<int>& inside, const std::vector<int>& outside, int m) {
  for (int j1 = 0; j1 <= m; ++j1) {
    for (int j2 = j1; j2 <= m; ++j2) {
      bool ok = std::all_of(inside.begin(), inside.end(), [&](int j) { return j1 <= j && j <= j2; }) &&
                std::all_of(outside.begin(), outside.end(), [&](int j) { return j <= j1 || j >= j2; });
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

Connection tree_state(const PlaneTree& t) {
  const int k = t.edge_count();
  std::vector<std::pair<BoundaryPoint, BoundaryPoint>> pairs;
  // walk the tree, giving each edge the top points at its two sides
  int next = 1;
  std::function<void(int)> walk = [&](int v) {
    for (int child : t.children(v)) {
      int left = next++;
      walk(child);
      pairs.push_back({{Side::Top, left}, {Side::Top, next++}});
    }
  };
  walk(t.root());
  for (int i = 1; i <= k; ++i) {
    pairs.push_back({{Side::Bottom, i}, {Side::Left, k + 1 - i}});
    pairs.push_back({{Side::Bottom, k + i}, {Side::Right, i}});
  }
  return Connection(k, 2 * k, 2 * k, pairs);
}

std::vector<LocalFamily> local_families(const Connection& c) {
  std::vector<LocalFamily> out;
  if (!c.is_catalan()) return out;
  const int size = c.size();
  for (int len = 4; len < size; len += 2) {
    for (int start = 0; start < size; ++start) {
      std::vector<int> ends(len);
      std::vector<bool> member(size, false);
      for (int i = 0; i < len; ++i) {
        ends[i] = (start + i) % size;
        member[ends[i]] = true;
      }
      bool closed = std::all_of(ends.begin(), ends.end(), [&](int p) { return member[c.partner(p)]; });
      if (!closed) continue;
      bool rainbow = true;
      for (int i = 0; i < len; ++i) rainbow = rainbow && c.partner(ends[i]) == ends[len - 1 - i];
      if (rainbow) continue;
      bool touches_left = false, touches_right = false;
      for (int p : ends) {
        touches_left = touches_left || c.side(p) == Side::Left;
        touches_right = touches_right || c.side(p) == Side::Right;
      }
      if (touches_left && touches_right) continue;
      std::vector<int> inside, outside;
      consecutive_indices(c, member, inside, outside);
      if (!separated(inside, outside, c.height())) continue;
      out.push_back({std::move(ends)});
    }
  }
  return out;
}

std::optional<LocalFamily> find_vertical_factorization(const Connection& c) {
  auto all = local_families(c);
  if (all.empty()) return std::nullopt;
  return all.front();
}

VerticalFactorParts vertical_factor_parts(const Connection& c, const LocalFamily& family) {
  const auto& ends = family.ends;
  const int len = static_cast<int>(ends.size());
  std::vector<int> partner = c.partners();
  for (int i = 0; i < len; ++i) partner[ends[i]] = ends[len - 1 - i];
  PlaneTree tree = tree_from_arcs(c, ends);
  Connection tree_part = tree_state(tree);
  return {std::move(tree), std::move(tree_part),
          Connection::from_partners(c.height(), c.n_top(), c.n_bottom(), std::move(partner))};
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Realizability: return "realizability";
    case StepKind::TreeFormula: return "tree-formula";
    case StepKind::RotatePi: return "rotate-pi";
    case StepKind::VerticalDecompose: return "vertical-decompose";
    case StepKind::RemovableArc: return "removable-arc";
    case StepKind::VerticalFactor: return "vertical-factor";
    case StepKind::Oracle: return "oracle";
  }
  return "?";
}

std::string ReductionTrace::to_string() const {
  std::ostringstream os;
  int k = 1;
  for (const TraceStep& s : steps) {
    os << std::string(static_cast<std::size_t>(2 * s.depth), ' ') << "step " << k++ << ": "
       << catalan::to_string(s.kind);
    if (!s.detail.empty()) os << ' ' << s.detail;
    os << " factor=" << s.factor.to_string() << '\n';
  }
  return os.str();
}

Laurent CoefficientEngine::run_tree(const Connection& c, int depth, std::vector<TraceStep>& steps) {
  if (has_bottom_returns(c)) {
    if (has_top_returns(c))
      throw std::invalid_argument("tree formula needs a state without top or without bottom returns");
    steps.push_back({StepKind::RotatePi, c.to_string(), 1, depth});
    return run_tree(rotate_pi(c), depth, steps);
  }
  Laurent v = coeff_no_bottom_returns(c);
  steps.push_back({StepKind::TreeFormula, tree_from_state(c).to_string(), v, depth});
  return v;
}

Laurent CoefficientEngine::run(const Connection& c, int depth, std::vector<TraceStep>& steps,
                               std::vector<Connection>& seen) {
  if (!is_realizable(c)) {
    steps.push_back({StepKind::Realizability, c.to_string() + " is not realizable", Laurent(), depth});
    return Laurent();
  }
  if (!has_bottom_returns(c) || !has_top_returns(c)) return run_tree(c, depth, steps);

  std::vector<Connection> factors = vertical_decompose(c);
  if (factors.size() > 1) {
    const std::size_t at = steps.size();
    steps.push_back({StepKind::VerticalDecompose, "into " + std::to_string(factors.size()) + " factors", 1, depth});
    Laurent product = 1;
    for (const Connection& f : factors) product *= run(f, depth + 1, steps, seen);
    steps[at].factor = product;
    return product;
  }

  if (auto r = reduce_removable(c)) {
    auto [left, right] = extended_labels(c, r->arc);
    std::string detail = to_string(c.point(r->arc.p)) + "-" + to_string(c.point(r->arc.q)) + " (a=" +
                         std::to_string(left) + ", b=" + std::to_string(right) + ")";
    steps.push_back({StepKind::RemovableArc, detail, r->factor, depth});
    return r->factor * run(r->rest, depth, steps, seen);
  }

  seen.push_back(c);
  for (const LocalFamily& family : local_families(c)) {
    VerticalFactorParts f = vertical_factor_parts(c, family);
    if (std::find(seen.begin(), seen.end(), f.rainbow_state) != seen.end()) continue;
    Laurent tree_part = coeff_no_bottom_returns(f.tree_state);
    steps.push_back({StepKind::VerticalFactor, "tree " + f.tree.to_string() + " state " + f.tree_state.to_string(),
                     tree_part, depth});
    return tree_part * run(f.rainbow_state, depth, steps, seen);
  }

  if (!cache_.within_budget(c.height(), c.width()))
    throw BudgetExceeded("unreachable within budget: " + c.to_string());
  Laurent v = cache_.coefficient(c);
  steps.push_back({StepKind::Oracle, "L(" + std::to_string(c.height()) + "," + std::to_string(c.width()) + ")", v,
                   depth});
  return v;
}

CoefficientResult CoefficientEngine::coefficient(const Connection& c, Method method) {
  if (!c.is_catalan()) throw std::invalid_argument("coefficients are defined for Catalan states");
  CoefficientResult result;
  auto& steps = result.trace.steps;
  switch (method) {
    case Method::Auto: {
      std::vector<Connection> seen;
      result.value = run(c, 0, steps, seen);
      break;
    }
    case Method::Tree:
      if (!is_realizable(c)) {
        steps.push_back({StepKind::Realizability, c.to_string() + " is not realizable", Laurent(), 0});
        break;
      }
      result.value = run_tree(c, 0, steps);
      break;
    case Method::Oracle:
      if (!cache_.within_budget(c.height(), c.width()))
        throw BudgetExceeded("unreachable within budget: " + c.to_string());
      result.value = cache_.coefficient(c);
      steps.push_back({StepKind::Oracle, "L(" + std::to_string(c.height()) + "," + std::to_string(c.width()) + ")",
                       result.value, 0});
      break;
  }
  return result;
}

namespace {

const Laurent& two_term() {
  static const Laurent x = Laurent::monomial(1, -2) + Laurent::monomial(1, 2);
  return x;
}

const Laurent& three_term() {
  static const Laurent y = Laurent::monomial(1, -4) + 1 + Laurent::monomial(1, 4);
  return y;
}

int strip(Laurent& p, const Laurent& d) {
  int k = 0;
  for (;;) {
    try {
      p = div_exact(p, d);
      ++k;
    } catch (const NotDivisible&) {
      return k;
    }
  }
}

/// 1 + x^2 + ... + x^{2(c-1)} with x = A^-2 + A^2.
Laurent even_sum(int c) {
  Laurent sum, x2 = two_term() * two_term(), term = 1;
  for (int k = 0; k < c; ++k) {
    sum += term;
    term *= x2;
  }
  return sum;
}

}  // namespace

Laurent Lm3Form::value() const {
  Laurent shape = decomposable ? pow(three_term(), static_cast<unsigned>(c)) : even_sum(c);
  return monomial_shift(pow(two_term(), static_cast<unsigned>(b)) * shape, a);
}

std::string Lm3Form::to_string() const {
  std::ostringstream os;
  os << (decomposable ? "decomposable" : "indecomposable") << " a=" << a << " b=" << b << " c=" << c;
  return os.str();
}

std::optional<Lm3Form> fit_lm3(const Laurent& value, bool decomposable) {
  if (value.is_zero()) return std::nullopt;
  Laurent rest = value;
  Lm3Form form{decomposable, 0, 0, 0};
  if (decomposable) {
    form.c = strip(rest, three_term());
    form.b = strip(rest, two_term());
    if (!rest.is_monomial() || rest.terms().begin()->second != 1) return std::nullopt;
    form.a = rest.min_degree();
  } else {
    form.b = strip(rest, two_term());
    if (form.b > 1) return std::nullopt;
    const int span = rest.max_degree() - rest.min_degree();
    if (span % 8 != 0) return std::nullopt;
    form.c = span / 8 + 1;
    form.a = rest.min_degree() - even_sum(form.c).min_degree();
  }
  if (form.value() != value) return std::nullopt;
  return form;
}

Lm3Form lm3_closed_form(const Connection& c, CoefficientEngine& engine) {
  if (!c.is_catalan() || c.width() != 3) throw std::invalid_argument("lm3 needs a state of Cat(m,3)");
  if (!is_realizable(c)) throw std::invalid_argument("lm3 needs a realizable state");
  const bool decomposable = is_vertically_decomposable(c).has_value();
  Laurent v = engine.value(c);
  auto form = fit_lm3(v, decomposable);
  if (!form)
    throw std::logic_error("coefficient " + v.to_string() + " fits neither closed form for " + c.to_string());
  return *form;
}

}  // namespace catalan

namespace catalan {

CoefficientResult coefficient(const Connection& c, Method method, const OracleOptions& options) {
  CoefficientEngine engine(options);
  return engine.coefficient(c, method);
}

}  // namespace catalan
