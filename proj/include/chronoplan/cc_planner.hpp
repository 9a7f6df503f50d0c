#ifndef CHRONOPLAN_CC_PLANNER_HPP
#define CHRONOPLAN_CC_PLANNER_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/travel.hpp"

namespace chronoplan {

struct CcQuery {
  int src;
  int dst;
  Cost budget = Cost::infinity();  // start time is fixed at 0
};

struct NodeTime {
  int node;
  int time;
  bool operator==(const NodeTime&) const = default;
};

struct NodeTimeHash {
  std::size_t operator()(const NodeTime& k) const {
    return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(k.node) << 32) ^
                                      static_cast<std::uint32_t>(k.time));
  }
};

// Search state of the cost-constrained planner. Sparse by construction: only
// (node, time) pairs actually relaxed are materialized. Borrows the graph and
// cost function passed to the planner; keep both alive while extracting.
struct CcPlannerState {
  struct Label {
    Cost cost = Cost::infinity();
    bool done = false;
    bool has_pred = false;
    int pred_node = -1;  // predecessor pair (pred_node, pred_time),
    int pred_time = -1;  // crossing the edge at pred_edge_time
    int pred_edge_time = -1;
  };

  int src = -1;
  Cost budget;
  const EvolvingGraph* graph = nullptr;
  const CostFunction* cost_fn = nullptr;

  std::unordered_map<NodeTime, Label, NodeTimeHash> labels;
  std::vector<std::pair<Cost, int>> min_cost;  // per node: (cost, time), lexicographic
  std::vector<NodeTime> extraction_order;
  std::vector<Cost> extraction_costs;
  std::size_t relaxation_steps = 0;

  const Label* find(int node, int time) const {
    auto it = labels.find({node, time});
    return it == labels.end() ? nullptr : &it->second;
  }
};

// Label-setting search over (node, time) pairs: repeatedly finalize the
// cheapest unfinished pair, extend along the next future occurrence of each
// incident edge, and along every past occurrence priced by f. Returns the
// minimum-delay then minimum-cost travel within the budget, or nullopt.
// Requires f user-friendly over the graph's span horizon; throws otherwise.
std::optional<PlanResult> plan_cost_constrained(const EvolvingGraph& g, const CostFunction& f,
                                                const CcQuery& query,
                                                CcPlannerState* state_out = nullptr);

// Unconstrained budget.
std::optional<PlanResult> plan_odoc(const EvolvingGraph& g, const CostFunction& f, int src,
                                    int dst);

// Any user-optimizable f: plans under the sub-additive closure of f, then
// re-expands the travel so its raw cost under f equals the planned cost.
std::optional<PlanResult> plan_any(const EvolvingGraph& g, const CostFunction& f,
                                   const CcQuery& query);

// Reconstructs a cost-optimal travel to (u, t) from a finished search. For
// pairs without a label, the cheapest labeled arrival is extended with a
// final time change.
Travel extract_time_travel(const CcPlannerState& state, int u, int t);

// Temporal edges with at least one endpoint pair finalized by the search.
std::size_t extracted_edge_count(const CcPlannerState& state);

// Span horizon the cost function must be well-behaved over: the longest
// backward jump a travel starting at time 0 can take.
int uf_horizon(const EvolvingGraph& g);

}  // namespace chronoplan

#endif
