// Command-line front end for the coefficient engine.
//
// Exit status: 0 ok, 1 invalid input, 2 oracle budget exhausted,
// 3 selftest failure.

#include "catalan/coeff.hpp"
#include "catalan/maxseq.hpp"
#include "catalan/selftest.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace catalan;

namespace {

constexpr int kInvalidInput = 1;
constexpr int kBudget = 2;
constexpr int kSelftestFailed = 3;

/// Runs `body` on the argument, or on every nonempty stdin line for "-".
void for_each_input(const std::string& arg, const std::function<void(const std::string&)>& body) {
  if (arg != "-") {
    body(arg);
    return;
  }
  std::string line;
  while (std::getline(std::cin, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) body(line);
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string arc_text(const Connection& c, Arc a) {
  return to_string(c.point(a.p)) + "-" + to_string(c.point(a.q));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficients of Catalan states of the lattice crossing L(m,n)"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Cap on worker threads")->check(CLI::NonNegativeNumber);

  OracleOptions options;
  std::string input;

  auto* coeff = app.add_subcommand("coeff", "Coefficient C(A) of a state");
  std::string method = "auto";
  bool trace = false;
  coeff->add_option("state", input, "State, or - for stdin")->required();
  coeff->add_option("--method", method, "auto, tree or oracle")
      ->check(CLI::IsMember({"auto", "tree", "oracle"}));
  coeff->add_flag("--trace", trace, "Print the reduction trace");
  coeff->add_option("--budget-bits", options.budget_bits, "Largest mn the oracle may enumerate");

  auto* oracle = app.add_subcommand("oracle", "Coefficient by Kauffman state enumeration");
  oracle->add_option("state", input, "State, or - for stdin")->required();
  oracle->add_option("--budget-bits", options.budget_bits, "Largest mn the oracle may enumerate");

  auto* enumerate = app.add_subcommand("enumerate", "List the states of Cat(m,n)");
  int em = 0, en = 0;
  bool only_realizable = false, with_coeffs = false;
  enumerate->add_option("m", em)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("n", en)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--realizable", only_realizable, "Only realizable states");
  enumerate->add_flag("--coeffs", with_coeffs, "Append each coefficient after a tab");
  enumerate->add_option("--budget-bits", options.budget_bits, "Largest mn the oracle may enumerate");

  auto* realizable = app.add_subcommand("realizable", "Whether a state occurs in L(m,n)");
  realizable->add_option("state", input)->required();

  auto* reductions = app.add_subcommand("reductions", "Removable arcs, saturated lines and local families");
  reductions->add_option("state", input)->required();

  auto* pluck = app.add_subcommand("plucking", "Plucking polynomial of a plane rooted tree");
  bool factored = false;
  pluck->add_option("tree", input, "Tree, or - for stdin")->required();
  pluck->add_flag("--factored", factored, "Evaluate through splitting subtrees");

  auto* beta_cmd = app.add_subcommand("beta", "Largest positive-marker count of a state");
  beta_cmd->add_option("state", input)->required();

  auto* maxseq = app.add_subcommand("maxseq", "Maximal row sequence of a state");
  maxseq->add_option("state", input)->required();

  auto* lm3 = app.add_subcommand("lm3", "Closed-form parameters of a state of Cat(m,3)");
  lm3->add_option("state", input)->required();

  auto* selftest = app.add_subcommand("selftest", "Engine against oracle, plus fixed examples");
  int max_mn = 9;
  selftest->add_option("--max-mn", max_mn, "Largest mn in the sweep")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  options.threads = threads;
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    CoefficientEngine engine(options);
    auto state = [](const std::string& s) { return Connection::parse(s); };

    if (*coeff) {
      Method mth = method == "tree" ? Method::Tree : method == "oracle" ? Method::Oracle : Method::Auto;
      for_each_input(input, [&](const std::string& s) {
        CoefficientResult r = engine.coefficient(state(s), mth);
        std::cout << r.value << '\n';
        if (trace) std::cout << r.trace.to_string();
      });
    } else if (*oracle) {
      for_each_input(input, [&](const std::string& s) {
        Connection c = state(s);
        if (!engine.oracle().within_budget(c.height(), c.width()))
          throw BudgetExceeded("unreachable within budget: " + c.to_string());
        std::cout << engine.oracle().coefficient(c) << '\n';
      });
    } else if (*enumerate) {
      for (const Connection& c : enumerate_catalan(em, en)) {
        if (only_realizable && !is_realizable(c)) continue;
        std::cout << c.to_string();
        if (with_coeffs) std::cout << '\t' << engine.value(c);
        std::cout << '\n';
      }
    } else if (*realizable) {
      for_each_input(input, [&](const std::string& s) {
        std::cout << (is_realizable(state(s)) ? "true" : "false") << '\n';
      });
    } else if (*reductions) {
      for_each_input(input, [&](const std::string& s) {
        Connection c = state(s);
        bool any = false;
        for (const Arc& a : find_removable_arcs(c)) {
          auto [l, r] = extended_labels(c, a);
          std::cout << "removable-arc " << arc_text(c, a) << " factor=" << Laurent::monomial(1, r - l) << '\n';
          any = true;
        }
        for (int i : saturated_lines(c)) {
          std::cout << "saturated-line " << i << '\n';
          any = true;
        }
        for (const LocalFamily& f : local_families(c)) {
          VerticalFactorParts parts = vertical_factor_parts(c, f);
          std::cout << "vertical-factor ends=";
          for (std::size_t i = 0; i < f.ends.size(); ++i) std::cout << (i ? "," : "") << to_string(c.point(f.ends[i]));
          std::cout << " tree=" << parts.tree.to_string() << " tree-state=" << parts.tree_state.to_string()
                    << " rainbow-state=" << parts.rainbow_state.to_string() << '\n';
          any = true;
        }
        if (!any) std::cout << "none\n";
      });
    } else if (*pluck) {
      for_each_input(input, [&](const std::string& s) {
        PlaneTree t = PlaneTree::parse(s);
        std::cout << (factored ? plucking_factored(t) : plucking(t)).to_string("q") << '\n';
      });
    } else if (*beta_cmd) {
      for_each_input(input, [&](const std::string& s) { std::cout << beta(state(s)) << '\n'; });
    } else if (*maxseq) {
      for_each_input(input, [&](const std::string& s) { std::cout << join(max_sequence(state(s))) << '\n'; });
    } else if (*lm3) {
      for_each_input(input, [&](const std::string& s) {
        std::cout << lm3_closed_form(state(s), engine).to_string() << '\n';
      });
    } else if (*selftest) {
      bool all = true;
      for (const CheckResult& r : run_selftest(max_mn, options)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
      }
      return all ? 0 : kSelftestFailed;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return 0;
}
