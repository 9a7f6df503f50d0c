#ifndef CHRONOPLAN_ORACLE_HPP
#define CHRONOPLAN_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/travel.hpp"

namespace chronoplan {

// Ground truth for desk-scale instances only; nothing here is expected to
// scale past a handful of nodes and time instants.

struct OracleBounds {
  int max_len;   // max number of steps in an enumerated travel
  int max_time;  // max time instant allowed in any step

  static OracleBounds defaults_for(const EvolvingGraph& g) {
    return {2 * g.node_count() * (g.lifetime() + 1), g.lifetime() + g.arrival_offset()};
  }
  static OracleBounds with_max_time(const EvolvingGraph& g, int max_time) {
    OracleBounds b = defaults_for(g);
    b.max_time = max_time;
    return b;
  }
};

struct OracleAnswer {
  int delay;
  Cost cost;
  bool operator==(const OracleAnswer&) const = default;
};

// Depth-first stream of every valid travel that starts at (src, 0), ends at
// dst, has at most max_len steps, and stays within [0, max_time]. Successors
// are adjacent temporal edges at the current instant and time changes at the
// current node to any instant in range.
void enumerate_travels(const EvolvingGraph& g, int src, int dst, const OracleBounds& bounds,
                       const std::function<void(const Travel&)>& visit);

// Optimal costs of travels from (start_node, start_time) to every (node, time)
// on the bounded grid, computed by relaxing every edge and jump arc to a
// fixpoint. result[u][t] may be infinite.
std::vector<std::vector<Cost>> oracle_min_costs_from(const EvolvingGraph& g, const CostFunction& f,
                                                     int start_node, int start_time,
                                                     const OracleBounds& bounds);

// Minimum travel cost per exact arrival time of dst (index = time), infinite
// where no travel arrives. Budget-independent.
std::vector<Cost> oracle_cc_profile(const EvolvingGraph& g, const CostFunction& f, int src,
                                    int dst, const OracleBounds& bounds);
std::vector<Cost> oracle_hc_profile(const EvolvingGraph& g, const CostFunction& f, int history,
                                    int src, int dst, const OracleBounds& bounds);
std::vector<Cost> oracle_cc_simple_profile(const EvolvingGraph& g, const CostFunction& f, int src,
                                           int dst, const OracleBounds& bounds);

// First profile entry within budget, as a (delay, cost) answer.
std::optional<OracleAnswer> answer_from_profile(const std::vector<Cost>& profile,
                                                const Cost& budget);

// Best cost <= budget of travels from src arriving at u exactly at time t.
std::optional<Cost> oracle_delta_c(const EvolvingGraph& g, const CostFunction& f,
                                   const Cost& budget, int src, int u, int t,
                                   const OracleBounds& bounds);

// Lexicographic (delay, cost) optimum over budget-feasible travels.
std::optional<OracleAnswer> oracle_cc(const EvolvingGraph& g, const CostFunction& f,
                                      const Cost& budget, int src, int dst,
                                      const OracleBounds& bounds);

// Same optimum, plus a travel that attains it.
std::optional<PlanResult> oracle_cc_travel(const EvolvingGraph& g, const CostFunction& f,
                                           const Cost& budget, int src, int dst,
                                           const OracleBounds& bounds);

// Lexicographic optimum over travels whose every step stays within `history`
// of the running maximum time reached.
std::optional<OracleAnswer> oracle_hc(const EvolvingGraph& g, const CostFunction& f, int history,
                                      int src, int dst, const OracleBounds& bounds);

// As oracle_cc restricted to simple travels.
std::optional<OracleAnswer> oracle_cc_simple(const EvolvingGraph& g, const CostFunction& f,
                                             const Cost& budget, int src, int dst,
                                             const OracleBounds& bounds);

// Exhaustive-stream variants of the optimum queries; tractable only on tiny
// instances, used to validate the grid computations above.
std::optional<OracleAnswer> oracle_cc_enumerated(const EvolvingGraph& g, const CostFunction& f,
                                                 const Cost& budget, int src, int dst,
                                                 const OracleBounds& bounds);
std::optional<OracleAnswer> oracle_hc_enumerated(const EvolvingGraph& g, const CostFunction& f,
                                                 int history, int src, int dst,
                                                 const OracleBounds& bounds);

}  // namespace chronoplan

#endif
