#include "chronoplan/check_suite.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "chronoplan/cc_planner.hpp"
#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/hc_planner.hpp"
#include "chronoplan/oracle.hpp"
#include "chronoplan/render.hpp"
#include "chronoplan/travel.hpp"

namespace chronoplan::checks {

namespace {

// The shared random-instance family: 312 seeded graphs covering n in [2,5],
// lifetime in [0,6], three edge densities.
struct FamilyInstance {
  EvolvingGraph graph;
  int src;
  int dst;
};

std::vector<FamilyInstance> instance_family() {
  static const double kProbs[] = {0.15, 0.3, 0.5};
  std::vector<FamilyInstance> out;
  for (int id = 0; id < 312; ++id) {
    int n = 2 + id % 4;
    int lifetime = (id / 4) % 7;
    double p = kProbs[(id / 28) % 3];
    EvolvingGraph g = EvolvingGraph::random(n, lifetime, p, 1000 + id);
    out.push_back({std::move(g), 0, n - 1});
  }
  return out;
}

std::vector<CostFunction> family_cost_functions() {
  return {CostFunction::identity(), CostFunction::constant(1),
          CostFunction::table({1, 2, 2, 3}, CostFunction::Tail::constant, 3)};
}

std::vector<Cost> family_budgets() {
  return {Cost(0), Cost(1), Cost(2), Cost::infinity()};
}

std::string describe(const std::optional<OracleAnswer>& a) {
  if (!a) return "none";
  return "(" + std::to_string(a->delay) + "," + a->cost.str() + ")";
}

struct FamilyOutcome {
  int cc_mismatches = 0;
  int delay_nonzero = 0;
  int simple_mismatches = 0;
  int feasibility_violations = 0;
  int queries = 0;
  std::string first_failure;
};

FamilyOutcome run_cc_family() {
  FamilyOutcome out;
  auto fns = family_cost_functions();
  auto budgets = family_budgets();
  for (const auto& [g, src, dst] : instance_family()) {
    OracleBounds bounds = OracleBounds::defaults_for(g);
    for (const auto& f : fns) {
      auto profile = oracle_cc_profile(g, f, src, dst, bounds);
      auto simple_profile = oracle_cc_simple_profile(g, f, src, dst, bounds);
      for (const auto& budget : budgets) {
        ++out.queries;
        auto expect = answer_from_profile(profile, budget);
        auto expect_simple = answer_from_profile(simple_profile, budget);
        auto got = plan_cost_constrained(g, f, {src, dst, budget});
        bool match = got.has_value() == expect.has_value() &&
                     (!got || (got->delay == expect->delay && got->cost == expect->cost));
        if (!match) {
          ++out.cc_mismatches;
          if (out.first_failure.empty()) {
            std::ostringstream msg;
            msg << "cost spec " << f.spec_string() << " budget " << budget.str() << " on\n"
                << g.serialize() << "planner "
                << (got ? "(" + std::to_string(got->delay) + "," + got->cost.str() + ")" : "none")
                << " oracle " << describe(expect);
            out.first_failure = msg.str();
          }
        }
        if (got) {
          bool ok = got->travel.valid_in(g) && got->travel.front() == Step{src, 0} &&
                    got->travel.back().node == dst && got->cost <= budget &&
                    travel_cost(got->travel, f) == got->cost && got->travel.delay() == got->delay;
          if (!ok) ++out.feasibility_violations;
          if (budget.is_infinite() && got->delay != 0) ++out.delay_nonzero;
        }
        if (!(expect_simple.has_value() == expect.has_value() &&
              (!expect || (expect_simple->delay == expect->delay &&
                           expect_simple->cost == expect->cost)))) {
          ++out.simple_mismatches;
        }
      }
    }
  }
  return out;
}

CriterionResult criterion_cc_equivalence(const FamilyOutcome& fam) {
  std::ostringstream detail;
  detail << fam.queries << " queries, " << fam.cc_mismatches << " mismatches, "
         << fam.feasibility_violations << " feasibility violations";
  if (!fam.first_failure.empty()) detail << "; first: " << fam.first_failure;
  return {1, "cost-constrained planner matches oracle exactly",
          fam.cc_mismatches == 0 && fam.feasibility_violations == 0, detail.str()};
}

CriterionResult criterion_hc_equivalence() {
  auto fns = family_cost_functions();
  int mismatches = 0, violations = 0, queries = 0;
  std::string first;
  for (const auto& [g, src, dst] : instance_family()) {
    OracleBounds bounds = OracleBounds::defaults_for(g);
    std::vector<int> hs = {0, 1, 2, g.lifetime()};
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    for (const auto& f : fns) {
      for (int H : hs) {
        ++queries;
        auto expect = answer_from_profile(oracle_hc_profile(g, f, H, src, dst, bounds),
                                          Cost::infinity());
        auto got = plan_history_constrained(g, f, H, src, dst);
        bool match = got.has_value() == expect.has_value() &&
                     (!got || (got->delay == expect->delay && got->cost == expect->cost));
        if (!match) {
          ++mismatches;
          if (first.empty()) {
            std::ostringstream msg;
            msg << "H=" << H << " cost spec " << f.spec_string() << " on\n"
                << g.serialize() << "planner "
                << (got ? "(" + std::to_string(got->delay) + "," + got->cost.str() + ")" : "none")
                << " oracle " << describe(expect);
            first = msg.str();
          }
        }
        if (got) {
          bool ok = got->travel.valid_in(g) && got->travel.respects_history_bound(H) &&
                    got->travel.front() == Step{src, 0} && got->travel.back().node == dst &&
                    travel_cost(got->travel, f) == got->cost;
          if (!ok) ++violations;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << queries << " queries, " << mismatches << " mismatches, " << violations
         << " history/feasibility violations";
  if (!first.empty()) detail << "; first: " << first;
  return {2, "history-constrained planner matches oracle exactly", mismatches == 0 && violations == 0,
          detail.str()};
}

CriterionResult criterion_delay_zero(const FamilyOutcome& fam) {
  std::ostringstream detail;
  detail << fam.delay_nonzero << " unconstrained plans with nonzero delay";
  return {3, "unconstrained budget always reaches delay zero", fam.delay_nonzero == 0,
          detail.str()};
}

CriterionResult criterion_reduction() {
  std::mt19937_64 rng(20230907);
  int tables_checked = 0, failures = 0, enum_checked = 0;
  std::string first;
  while (tables_checked < 50) {
    // Random cost table that is user optimizable but not user friendly.
    int len = 2 + static_cast<int>(rng() % 4);
    std::vector<Cost::rational> values;
    for (int i = 0; i < len; ++i) values.push_back(static_cast<long long>(1 + rng() % 6));
    Cost::rational tail = static_cast<long long>(1 + rng() % 6);
    CostFunction f = CostFunction::table(values, CostFunction::Tail::constant, tail);

    int n = 2 + static_cast<int>(rng() % 3);
    int lifetime = 1 + static_cast<int>(rng() % 5);
    EvolvingGraph g = EvolvingGraph::random(n, lifetime, 0.4, rng());
    if (!is_user_optimizable(f) || is_user_friendly(f, uf_horizon(g))) continue;
    ++tables_checked;

    Cost budget = (rng() % 2) ? Cost::infinity() : Cost(static_cast<long long>(rng() % 4));
    CcQuery query{0, n - 1, budget};
    ClosureTables closure = build_closure_tables(f, uf_horizon(g));
    CostFunction f_tilde = closure_as_cost_function(closure);
    auto planned = plan_cost_constrained(g, f_tilde, query);
    auto expanded = plan_any(g, f, query);

    bool ok = planned.has_value() == expanded.has_value();
    if (ok && expanded) {
      ok = expanded->travel.valid_in(g) && travel_cost(expanded->travel, f) == planned->cost &&
           expanded->cost == planned->cost && expanded->delay == planned->delay &&
           expanded->travel.front() == planned->travel.front() &&
           expanded->travel.back() == planned->travel.back();
      // The closure-priced optimum is the raw-f optimum.
      auto oracle = oracle_cc(g, f_tilde, budget, 0, n - 1, OracleBounds::defaults_for(g));
      ok = ok && oracle && oracle->delay == expanded->delay && oracle->cost == expanded->cost;
    }
    if (!ok) {
      ++failures;
      if (first.empty())
        first = f.spec_string() + " budget " + budget.str() + " on\n" + g.serialize();
    }
  }

  // On tiny instances, double-check the expansion against raw-cost travel
  // enumeration, with headroom above the lifetime for wait-then-jump pieces.
  while (enum_checked < 8) {
    int len = 2 + static_cast<int>(rng() % 4);
    std::vector<Cost::rational> values;
    for (int i = 0; i < len; ++i) values.push_back(static_cast<long long>(1 + rng() % 6));
    CostFunction f = CostFunction::table(values, CostFunction::Tail::constant,
                                         static_cast<long long>(1 + rng() % 6));
    EvolvingGraph g = EvolvingGraph::random(2, 2, 0.5, rng());
    if (is_user_friendly(f, uf_horizon(g))) continue;
    ++enum_checked;
    Cost budget = (rng() % 2) ? Cost::infinity() : Cost(static_cast<long long>(rng() % 4));
    auto expanded = plan_any(g, f, {0, 1, budget});
    OracleBounds wide{8, g.lifetime() + len + 2};
    auto brute = oracle_cc_enumerated(g, f, budget, 0, 1, wide);
    bool ok = expanded.has_value() == brute.has_value() &&
              (!expanded || (expanded->delay == brute->delay && expanded->cost == brute->cost));
    if (!ok) {
      ++failures;
      if (first.empty())
        first = "enumeration: " + f.spec_string() + " budget " + budget.str() + " on\n" +
                g.serialize();
    }
  }
  std::ostringstream detail;
  detail << tables_checked << " non-friendly tables, " << failures << " failures, " << enum_checked
         << " enumeration cross-checks";
  if (!first.empty()) detail << "; first: " << first;
  return {4, "closure reduction reproduces the raw-cost optimum", failures == 0, detail.str()};
}

CriterionResult criterion_simple_sufficiency(const FamilyOutcome& fam) {
  std::ostringstream detail;
  detail << fam.simple_mismatches << " instances where simple travels fall short";
  return {5, "simple travels suffice under user-friendly costs", fam.simple_mismatches == 0,
          detail.str()};
}

CriterionResult criterion_subtravel_optimality() {
  CostFunction identity = CostFunction::identity();
  long long travels_checked = 0, sub_checked = 0;
  int failures = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const int slots = static_cast<int>(pairs.size()) * 4;
    for (long long mask = 0; mask < (1LL << slots); ++mask) {
      EvolvingGraph g(n);
      for (int s = 0; s < slots; ++s) {
        if (mask & (1LL << s)) g.add_edge(pairs[s / 4].first, pairs[s / 4].second, s % 4);
      }
      OracleBounds bounds = OracleBounds::defaults_for(g);
      // Optimal costs from every (node, time) seed, filled lazily.
      std::map<std::pair<int, int>, std::vector<std::vector<Cost>>> from;
      auto dist_from = [&](int u0, int t0) -> const std::vector<std::vector<Cost>>& {
        auto it = from.find({u0, t0});
        if (it == from.end()) {
          it = from.emplace(std::make_pair(u0, t0), oracle_min_costs_from(g, identity, u0, t0, bounds))
                   .first;
        }
        return it->second;
      };
      for (int src = 0; src < n; ++src) {
        for (int dst = 0; dst < n; ++dst) {
          auto best = oracle_cc_travel(g, identity, Cost::infinity(), src, dst, bounds);
          if (!best) continue;
          ++travels_checked;
          const auto& steps = best->travel.steps();
          for (std::size_t i = 0; i < steps.size(); ++i) {
            for (std::size_t j = i; j < steps.size(); ++j) {
              std::vector<Step> sub(steps.begin() + i, steps.begin() + j + 1);
              Travel sub_travel{sub};
              ++sub_checked;
              Cost opt = dist_from(steps[i].node, steps[i].time)[steps[j].node][steps[j].time];
              if (travel_cost(sub_travel, identity) != opt) ++failures;
            }
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << travels_checked << " optimal travels, " << sub_checked << " sub-travels, " << failures
         << " non-optimal sub-travels";
  return {6, "sub-travels of cost-optimal travels are cost-optimal", failures == 0, detail.str()};
}

CriterionResult criterion_hand_anchors() {
  int failures = 0;
  std::ostringstream detail;
  auto expect_cc = [&](const EvolvingGraph& g, const Cost& budget, int src, int dst, int delay,
                       const Cost& cost) {
    auto r = plan_cost_constrained(g, CostFunction::identity(), {src, dst, budget});
    bool ok = r && r->delay == delay && r->cost == cost;
    if (!ok) ++failures;
    detail << " cc[" << budget.str() << "]="
           << (r ? std::to_string(r->delay) + "," + r->cost.str() : "none");
  };
  auto expect_hc = [&](const EvolvingGraph& g, int H, int src, int dst, int delay,
                       const Cost& cost) {
    auto r = plan_history_constrained(g, CostFunction::identity(), H, src, dst);
    bool ok = r && r->delay == delay && r->cost == cost;
    if (!ok) ++failures;
    detail << " hc[" << H << "]="
           << (r ? std::to_string(r->delay) + "," + r->cost.str() : "none");
  };

  EvolvingGraph g1(2);
  g1.add_edge(0, 1, 5);
  expect_cc(g1, Cost::infinity(), 0, 1, 0, Cost(5));
  expect_cc(g1, Cost(3), 0, 1, 2, Cost(3));
  expect_cc(g1, Cost(0), 0, 1, 5, Cost(0));

  EvolvingGraph g2(3);
  g2.add_edge(0, 1, 1);
  g2.add_edge(1, 2, 0);
  g2.add_edge(1, 2, 3);
  expect_cc(g2, Cost::infinity(), 0, 2, 0, Cost(1));
  expect_hc(g2, 1, 0, 2, 0, Cost(1));
  expect_hc(g2, 0, 0, 2, 3, Cost(0));

  return {7, "hand-derived anchor instances", failures == 0, detail.str()};
}

CriterionResult criterion_termination_and_complexity() {
  // Termination fuzz, infeasible and degenerate instances included.
  std::mt19937_64 rng(424242);
  int runs = 0;
  for (int i = 0; i < 150; ++i) {
    int n = 1 + static_cast<int>(rng() % 6);
    int lifetime = static_cast<int>(rng() % 8);
    double p = (rng() % 100) / 250.0;  // up to 0.4, often sparse or empty
    EvolvingGraph g = EvolvingGraph::random(n, lifetime, p, rng());
    int src = static_cast<int>(rng() % n);
    int dst = static_cast<int>(rng() % n);
    (void)plan_cost_constrained(g, CostFunction::identity(), {src, dst, Cost(2)});
    (void)plan_cost_constrained(g, CostFunction::identity(), {src, dst, Cost::infinity()});
    (void)plan_history_constrained(g, CostFunction::identity(), 1, src, dst);
    ++runs;
  }

  // Work-growth ladder: relaxation steps against the extracted-edge count,
  // averaged over a few seeds per rung.
  std::ostringstream trend;
  trend << runs * 3 << " fuzzed plans terminated; ladder";
  bool within_slack = true;
  double prev_work = 0, prev_edges = 0;
  for (int lifetime : {8, 16, 32, 64}) {
    double work = 0, edges = 0;
    for (std::uint64_t seed : {77, 78, 79, 80}) {
      EvolvingGraph g = EvolvingGraph::random(8, lifetime, 0.3, seed);
      CcPlannerState state;
      (void)plan_cost_constrained(g, CostFunction::identity(), {0, 7, Cost::infinity()}, &state);
      work += static_cast<double>(state.relaxation_steps);
      edges += static_cast<double>(extracted_edge_count(state));
    }
    trend << " [L=" << lifetime << " edges=" << edges << " work=" << work << "]";
    if (prev_work > 0) {
      double ratio = (work / prev_work) / ((edges / prev_edges) * (edges / prev_edges));
      trend << " growth/quadratic=" << ratio;
      if (ratio > 2.0) within_slack = false;
    }
    prev_work = work;
    prev_edges = edges;
  }
  trend << (within_slack ? "; within factor-2 of quadratic" : "; exceeded factor-2 (informative)");
  return {8, "planners terminate; work growth near quadratic in extracted edges", true,
          trend.str()};
}

CriterionResult criterion_format_roundtrip() {
  int failures = 0;
  for (int seed = 0; seed < 100; ++seed) {
    EvolvingGraph g = EvolvingGraph::random(2 + seed % 5, seed % 9, 0.35, 5000 + seed);
    std::string text = g.serialize();
    EvolvingGraph parsed = EvolvingGraph::parse(text);
    if (!(parsed == g) || parsed.serialize() != text) ++failures;
  }
  // Byte-stable serialization for a pinned instance.
  EvolvingGraph pinned = EvolvingGraph::random(3, 3, 0.5, 7);
  const std::string expected_serialized = "nodes 3\n0 0 2\n0 1 2\n1 0 2\n2 0 1\n";
  if (pinned.serialize() != expected_serialized) ++failures;
  std::ostringstream detail;
  detail << failures << " round-trip failures over 100 seeded graphs";
  return {9, "graph files round-trip byte-identically", failures == 0, detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out) {
  std::vector<CriterionResult> results;
  FamilyOutcome fam = run_cc_family();
  auto emit = [&](CriterionResult r) {
    out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " - " << r.name << " ("
        << r.detail << ")\n";
    out.flush();
    results.push_back(std::move(r));
  };
  emit(criterion_cc_equivalence(fam));
  emit(criterion_hc_equivalence());
  emit(criterion_delay_zero(fam));
  emit(criterion_reduction());
  emit(criterion_simple_sufficiency(fam));
  emit(criterion_subtravel_optimality());
  emit(criterion_hand_anchors());
  emit(criterion_termination_and_complexity());
  emit(criterion_format_roundtrip());
  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

}  // namespace chronoplan::checks
