#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chronoplan/cc_planner.hpp"
#include "chronoplan/check_suite.hpp"
#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/hc_planner.hpp"
#include "chronoplan/oracle.hpp"
#include "chronoplan/render.hpp"
#include "chronoplan/travel.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitMismatch = 4;

chronoplan::EvolvingGraph load_graph(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  chronoplan::EvolvingGraph g = chronoplan::EvolvingGraph::parse(buffer.str());
  return strict ? g.strictified() : g;
}

chronoplan::Cost parse_budget(const std::string& text) {
  if (text == "inf") return chronoplan::Cost::infinity();
  return chronoplan::parse_cost_value(text);
}

void print_result(const chronoplan::PlanResult& result) {
  std::cout << "delay=" << result.delay << " cost=" << result.cost.str() << "\n"
            << result.travel.str() << "\n";
}

int print_infeasible() {
  std::cout << "infeasible\n";
  return kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-time travel planning over evolving graphs"};
  app.require_subcommand(1);

  std::string graph_path, cost_spec = "identity", budget_text = "inf", out_path;
  int src = 0, dst = 0, history = 0, gen_nodes = 2, gen_lifetime = 0, max_len = 0;
  double gen_prob = 0.5;
  std::uint64_t seed = 0;
  bool strict = false, check = false, dot = false;
  std::vector<std::string> travel_texts;

  auto add_graph_opts = [&](CLI::App* cmd, bool with_query) {
    cmd->add_option("--graph", graph_path, "graph file")->required();
    cmd->add_flag("--strict", strict, "traversals arrive one instant later");
    if (with_query) {
      cmd->add_option("--src", src, "source node")->required();
      cmd->add_option("--dst", dst, "destination node")->required();
      cmd->add_option("--cost", cost_spec, "cost function spec");
    }
  };

  CLI::App* plan_cost = app.add_subcommand("plan-cost", "minimum delay within a cost budget");
  add_graph_opts(plan_cost, true);
  plan_cost->add_option("--budget", budget_text, "total cost budget, or 'inf'");

  CLI::App* plan_history = app.add_subcommand("plan-history", "minimum delay within a history bound");
  add_graph_opts(plan_history, true);
  plan_history->add_option("--history", history, "how far below the running maximum a step may go")
      ->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
  add_graph_opts(oracle_cmd, true);
  oracle_cmd->add_option("--budget", budget_text, "total cost budget, or 'inf'");
  CLI::Option* hist_opt = oracle_cmd->add_option("--history", history, "history bound");
  oracle_cmd->add_option("--max-len", max_len,
                         "answer by exhaustive travel enumeration capped at this many steps");
  oracle_cmd->add_flag("--check", check, "also run the planner and compare");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--nodes", gen_nodes, "node count")->required();
  gen->add_option("--lifetime", gen_lifetime, "last time instant")->required();
  gen->add_option("--prob", gen_prob, "per-slot edge probability")->required();
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* render_cmd = app.add_subcommand("render", "draw the time grid");
  render_cmd->add_option("--graph", graph_path, "graph file")->required();
  render_cmd->add_flag("--strict", strict, "traversals arrive one instant later");
  render_cmd->add_option("--travel", travel_texts, "travel line to overlay (repeatable)");
  render_cmd->add_flag("--dot", dot, "emit a layered DOT digraph instead of text");

  CLI::App* suite = app.add_subcommand("check-suite", "run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*plan_cost) {
      auto g = load_graph(graph_path, strict);
      auto f = chronoplan::parse_cost_spec(cost_spec);
      chronoplan::CcQuery query{src, dst, parse_budget(budget_text)};
      // Friendly costs plan directly; merely optimizable ones go through the
      // closure reduction.
      auto result = chronoplan::is_user_friendly(f, chronoplan::uf_horizon(g))
                        ? chronoplan::plan_cost_constrained(g, f, query)
                        : chronoplan::plan_any(g, f, query);
      if (!result) return print_infeasible();
      print_result(*result);
      return 0;
    }

    if (*plan_history) {
      auto g = load_graph(graph_path, strict);
      auto result = chronoplan::plan_history_constrained(
          g, chronoplan::parse_cost_spec(cost_spec), history, src, dst);
      if (!result) return print_infeasible();
      print_result(*result);
      return 0;
    }

    if (*oracle_cmd) {
      auto g = load_graph(graph_path, strict);
      auto f = chronoplan::parse_cost_spec(cost_spec);
      bool use_history = hist_opt->count() > 0;
      chronoplan::Cost budget = parse_budget(budget_text);
      chronoplan::OracleBounds bounds = chronoplan::OracleBounds::defaults_for(g);
      std::optional<chronoplan::OracleAnswer> answer;
      if (max_len > 0) {
        bounds.max_len = max_len;
        answer = use_history
                     ? chronoplan::oracle_hc_enumerated(g, f, history, src, dst, bounds)
                     : chronoplan::oracle_cc_enumerated(g, f, budget, src, dst, bounds);
      } else {
        answer = use_history ? chronoplan::oracle_hc(g, f, history, src, dst, bounds)
                             : chronoplan::oracle_cc(g, f, budget, src, dst, bounds);
      }
      if (check) {
        auto planned = use_history
                           ? chronoplan::plan_history_constrained(g, f, history, src, dst)
                           : chronoplan::plan_cost_constrained(g, f, {src, dst, budget});
        bool match = planned.has_value() == answer.has_value() &&
                     (!planned || (planned->delay == answer->delay &&
                                   planned->cost == answer->cost));
        if (!match) {
          std::cout << "mismatch: planner "
                    << (planned ? "delay=" + std::to_string(planned->delay) +
                                      " cost=" + planned->cost.str()
                                : "infeasible")
                    << " oracle "
                    << (answer ? "delay=" + std::to_string(answer->delay) +
                                     " cost=" + answer->cost.str()
                               : "infeasible")
                    << "\n";
          return kExitMismatch;
        }
      }
      if (!answer) return print_infeasible();
      std::cout << "delay=" << answer->delay << " cost=" << answer->cost.str() << "\n";
      return 0;
    }

    if (*gen) {
      if (const char* env = std::getenv("CHRONOPLAN_SEED")) seed = std::strtoull(env, nullptr, 10);
      auto g = chronoplan::EvolvingGraph::random(gen_nodes, gen_lifetime, gen_prob, seed);
      if (out_path.empty()) {
        std::cout << g.serialize();
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << g.serialize();
      }
      return 0;
    }

    if (*render_cmd) {
      auto g = load_graph(graph_path, strict);
      std::vector<chronoplan::Travel> travels;
      for (const auto& text : travel_texts) travels.push_back(chronoplan::Travel::parse(text));
      std::cout << (dot ? chronoplan::render_dot(g, travels)
                        : chronoplan::render_grid(g, travels));
      return 0;
    }

    if (*suite) {
      auto results = chronoplan::checks::run_all(std::cout);
      return chronoplan::checks::all_pass(results) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
