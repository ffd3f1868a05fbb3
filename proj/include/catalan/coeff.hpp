#pragma once

#include "catalan/kauffman.hpp"
#include "catalan/laurent.hpp"
#include "catalan/states.hpp"
#include "catalan/trees.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catalan {

/// C(A) = A^{2 beta - mn} Q*(T(C)) at q = A^-4, for realizable states
/// with no bottom returns.
Laurent coeff_no_bottom_returns(const Connection& c, TreeOrder order = kTreeOrder);

/// First removable arc c, with A^{b-a} and C minus c.
struct ArcReduction {
  Arc arc;
  Laurent factor;
  Connection rest;
};
std::optional<ArcReduction> reduce_removable(const Connection& c);

/// A local family: the arcs whose ends fill the clockwise run `ends` of
/// consecutive boundary positions.
struct LocalFamily {
  std::vector<int> ends;
  int size() const { return static_cast<int>(ends.size()) / 2; }
};

/// Every local family of 2..arcs-1 arcs meeting the separation conditions,
/// skipping families that already are nested parallel arcs.
std::vector<LocalFamily> local_families(const Connection& c);
std::optional<LocalFamily> find_vertical_factorization(const Connection& c);

/// C(A) = C_T(A) * C_rainbow(A): the rainbow state swaps the family for
/// nested parallel arcs, and the tree state in Cat(k,2k) carries the
/// family's dual tree on top.
struct VerticalFactorParts {
  PlaneTree tree;
  Connection tree_state;
  Connection rainbow_state;
};
VerticalFactorParts vertical_factor_parts(const Connection& c, const LocalFamily& family);

/// The state in Cat(k,2k) whose top returns have dual tree t (delays
/// ignored) and whose bottom points all run to the sides.
Connection tree_state(const PlaneTree& t);

enum class StepKind { Realizability, TreeFormula, RotatePi, VerticalDecompose, RemovableArc, VerticalFactor, Oracle };
std::string to_string(StepKind k);

/// One reduction. Steps at depth d+1 that follow a step at depth d belong to
/// it and multiply to its factor; the depth 0 factors multiply to the value.
struct TraceStep {
  StepKind kind;
  std::string detail;
  Laurent factor;
  int depth;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
  std::string to_string() const;
};

struct CoefficientResult {
  Laurent value;
  ReductionTrace trace;
};

enum class Method { Auto, Tree, Oracle };

/// Coefficient of a Catalan state in the bracket of L(m,n).
class CoefficientEngine {
 public:
  explicit CoefficientEngine(OracleOptions options = {}) : cache_(options) {}

  CoefficientResult coefficient(const Connection& c, Method method = Method::Auto);
  Laurent value(const Connection& c) { return coefficient(c).value; }
  BracketCache& oracle() { return cache_; }

 private:
  Laurent run(const Connection& c, int depth, std::vector<TraceStep>& steps, std::vector<Connection>& seen);
  Laurent run_tree(const Connection& c, int depth, std::vector<TraceStep>& steps);

  BracketCache cache_;
};

/// Parameters of the two closed forms for L(m,3):
///   decomposable    A^a (A^-2 + A^2)^b (A^-4 + 1 + A^4)^c
///   indecomposable  A^a (A^-2 + A^2)^b ((A^-2 + A^2)^{2c} - 1) / (A^-4 + 1 + A^4)
struct Lm3Form {
  bool decomposable;
  int a, b, c;
  Laurent value() const;
  std::string to_string() const;
};

std::optional<Lm3Form> fit_lm3(const Laurent& value, bool decomposable);
Lm3Form lm3_closed_form(const Connection& c, CoefficientEngine& engine);

}  // namespace catalan

namespace catalan {

/// One-shot convenience wrapper around CoefficientEngine.
CoefficientResult coefficient(const Connection& c, Method method = Method::Auto, const OracleOptions& options = {});

}  // namespace catalan
