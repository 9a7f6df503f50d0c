#ifndef CHRONOPLAN_HC_PLANNER_HPP
#define CHRONOPLAN_HC_PLANNER_HPP

#include <optional>
#include <vector>

#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/travel.hpp"

namespace chronoplan {

// DP table of the history-constrained planner. plane(t) holds, for each node
// u and each h in [0, H], the best cost of a history-respecting travel to u
// arriving at or before t-h while never reaching an instant above t.
// Provenance is stored eagerly so extraction never searches.
class HistoryTable {
 public:
  enum class Provenance : unsigned char {
    none,        // infeasible cell
    source,      // the (src, 0) seed
    edge,        // crossed an edge at pred_time from pred_node
    carry_same,  // same arrival bound, horizon one lower
    carry_prev,  // arrival bound one lower, horizon one lower
  };

  struct Cell {
    Cost cost = Cost::infinity();
    Provenance from = Provenance::none;
    int pred_node = -1;
    int pred_time = -1;
  };

  HistoryTable(int node_count, int history, int t_scan);

  int history() const { return history_; }
  int t_scan() const { return t_scan_; }
  int src = -1;

  // Arrival bound a = t - h must lie in [max(0, t - H), t].
  const Cell& at(int node, int arrival, int horizon) const;
  Cell& at(int node, int arrival, int horizon);
  bool in_range(int arrival, int horizon) const {
    return arrival >= 0 && arrival <= horizon && horizon - arrival <= history_ &&
           horizon <= t_scan_;
  }

  // Cost read that treats out-of-range cells as infinite.
  Cost cost_at(int node, int arrival, int horizon) const;

 private:
  int n_;
  int history_;
  int t_scan_;
  std::vector<Cell> cells_;  // [horizon][node][h]
};

// Scan limit: one instant past the last temporal edge. No travel that starts
// at time 0 gains anything from reaching beyond it.
int compute_t_max(const EvolvingGraph& g);

// Dynamic program over (node, arrival, horizon) triples, horizon by horizon,
// with |V| relaxation sweeps per horizon (continued to a fixpoint). Returns
// the minimum-delay then minimum-cost travel among history-respecting
// travels, or nullopt. Requires f user-friendly; throws otherwise.
std::optional<PlanResult> plan_history_constrained(const EvolvingGraph& g, const CostFunction& f,
                                                   int history, int src, int dst,
                                                   HistoryTable* table_out = nullptr);

// Follows provenance from cell (u, arrival, horizon); the result arrives at
// u exactly at `arrival`, never exceeds `horizon`, and costs the cell value.
Travel extract_history_constrained_travel(const HistoryTable& table, const EvolvingGraph& g, int u,
                                          int arrival, int horizon);

namespace hc_detail {
// One relaxation sweep over a single horizon plane; returns true if any cell
// improved. Exposed for the fixpoint property test.
bool relax_plane_once(const EvolvingGraph& g, const CostFunction& f, HistoryTable& table,
                      int horizon);
}  // namespace hc_detail

}  // namespace chronoplan

#endif
