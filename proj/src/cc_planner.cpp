#include "chronoplan/cc_planner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace chronoplan {

int uf_horizon(const EvolvingGraph& g) {
  return std::max(1, g.lifetime() + g.arrival_offset());
}

namespace {

struct QueueEntry {
  Cost cost;
  int time;
  int node;
};

struct QueueOrder {
  // min-heap on (cost, time, node)
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.cost != b.cost) return b.cost < a.cost;
    return std::tie(b.time, b.node) < std::tie(a.time, a.node);
  }
};

void run_search(const EvolvingGraph& g, const CostFunction& f, const CcQuery& query,
                CcPlannerState& state) {
  state.src = query.src;
  state.budget = query.budget;
  state.graph = &g;
  state.cost_fn = &f;
  state.min_cost.assign(g.node_count(), {Cost::infinity(), std::numeric_limits<int>::max()});

  const int offset = g.arrival_offset();
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> frontier;
  state.labels[{query.src, 0}].cost = Cost(0);
  frontier.push({Cost(0), 0, query.src});

  auto lex_less = [](const Cost& c, int t, const std::pair<Cost, int>& mc) {
    if (c != mc.first) return c < mc.first;
    return t < mc.second;
  };

  while (!frontier.empty()) {
    QueueEntry top = frontier.top();
    frontier.pop();
    auto& label = state.labels[{top.node, top.time}];
    if (label.done || label.cost != top.cost) continue;  // stale entry
    label.done = true;
    state.extraction_order.push_back({top.node, top.time});
    state.extraction_costs.push_back(top.cost);
    const Cost c = top.cost;
    const int t = top.time;
    const int u = top.node;

    for (int v : g.neighbors(u)) {
      ++state.relaxation_steps;
      auto [c_min, t_min] = state.min_cost[v];
      if (auto t_future = g.next_edge_time(u, v, t)) {
        int arrival = *t_future + offset;
        auto& lv = state.labels[{v, arrival}];
        if (lv.cost > c && (c < c_min || arrival < t_min)) {
          lv.cost = c;
          lv.has_pred = true;
          lv.pred_node = u;
          lv.pred_time = t;
          lv.pred_edge_time = *t_future;
          frontier.push({c, arrival, v});
          if (lex_less(c, arrival, state.min_cost[v])) state.min_cost[v] = {c, arrival};
        }
      }
      // Every occurrence at or before t, reached by first jumping back at u.
      for (int t_past : g.edge_times_at_or_before(u, v, t)) {
        ++state.relaxation_steps;
        Cost c_past = c + Cost(f.eval(static_cast<long long>(t) - t_past));
        if (!(c_past <= query.budget)) continue;
        int arrival = t_past + offset;
        auto& lv = state.labels[{v, arrival}];
        if (lv.cost > c_past) {
          lv.cost = c_past;
          lv.has_pred = true;
          lv.pred_node = u;
          lv.pred_time = t;
          lv.pred_edge_time = t_past;
          frontier.push({c_past, arrival, v});
        }
      }
    }
  }
}

}  // namespace

namespace {

Travel follow_pred_chain(const CcPlannerState& state, int u, int t) {
  const CcPlannerState::Label* label = state.find(u, t);
  if (label == nullptr || label->cost.is_infinite())
    throw std::logic_error("predecessor chain left the labeled set");
  if (!label->has_pred) {
    // Only the source seed lacks a predecessor.
    if (t == 0) return Travel::single(u, 0);
    return Travel({{u, 0}, {u, t}});
  }
  Travel prefix = follow_pred_chain(state, label->pred_node, label->pred_time);
  std::vector<Step> steps = prefix.steps();
  Step cross_from{label->pred_node, label->pred_edge_time};
  if (!(steps.back() == cross_from)) steps.push_back(cross_from);
  steps.push_back({u, t});
  return Travel(std::move(steps));
}

}  // namespace

Travel extract_time_travel(const CcPlannerState& state, int u, int t) {
  // Reach the labeled arrival of u that is cheapest after the final time
  // change to t. A label at exactly t may be stale (a relaxation into it was
  // suppressed by a dominating label), so the search always runs.
  const CostFunction& f = *state.cost_fn;
  std::optional<int> best_t;
  Cost best = Cost::infinity();
  for (const auto& [key, lab] : state.labels) {
    if (key.node != u || lab.cost.is_infinite()) continue;
    Cost total = lab.cost + Cost(f.eval(static_cast<long long>(key.time) - t));
    if (total < best || (total == best && (!best_t || key.time < *best_t))) {
      best = total;
      best_t = key.time;
    }
  }
  if (!best_t) throw std::invalid_argument("no travel reaches the requested node");
  Travel travel = follow_pred_chain(state, u, *best_t);
  if (*best_t != t) {
    std::vector<Step> steps = travel.steps();
    steps.push_back({u, t});
    travel = Travel(std::move(steps));
  }
  return travel;
}

std::optional<PlanResult> plan_cost_constrained(const EvolvingGraph& g, const CostFunction& f,
                                                const CcQuery& query,
                                                CcPlannerState* state_out) {
  if (query.src < 0 || query.src >= g.node_count() || query.dst < 0 ||
      query.dst >= g.node_count())
    throw std::out_of_range("query node out of range");
  if (query.budget < Cost(0)) throw std::invalid_argument("negative budget");
  if (!is_user_friendly(f, uf_horizon(g)))
    throw std::invalid_argument("cost function is not user-friendly; use plan_any");

  CcPlannerState local_state;
  CcPlannerState& state = state_out ? *state_out : local_state;
  state = CcPlannerState{};
  run_search(g, f, query, state);

  // Candidate arrivals of dst, every label already within budget.
  std::vector<std::pair<int, Cost>> arrivals;
  for (const auto& [key, label] : state.labels) {
    if (key.node == query.dst && label.cost.is_finite()) arrivals.push_back({key.time, label.cost});
  }
  if (arrivals.empty()) return std::nullopt;
  std::sort(arrivals.begin(), arrivals.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const int max_arrival = arrivals.back().first;
  for (int t_min = 0; t_min <= max_arrival; ++t_min) {
    Cost best = Cost::infinity();
    for (const auto& [t, c] : arrivals) {
      Cost total = c + Cost(f.eval(static_cast<long long>(t) - t_min));
      if (total < best) best = total;
    }
    if (!(best <= query.budget)) continue;
    return PlanResult{extract_time_travel(state, query.dst, t_min), t_min, best};
  }
  return std::nullopt;  // unreachable: the earliest label is always feasible
}

std::optional<PlanResult> plan_odoc(const EvolvingGraph& g, const CostFunction& f, int src,
                                    int dst) {
  return plan_cost_constrained(g, f, {src, dst, Cost::infinity()});
}

std::optional<PlanResult> plan_any(const EvolvingGraph& g, const CostFunction& f,
                                   const CcQuery& query) {
  if (!is_user_optimizable(f)) throw std::invalid_argument("cost function is not user-optimizable");
  const int horizon = uf_horizon(g);
  ClosureTables tables = build_closure_tables(f, horizon);
  CostFunction f_tilde = closure_as_cost_function(tables);
  auto planned = plan_cost_constrained(g, f_tilde, query);
  if (!planned) return std::nullopt;
  Travel expanded = expand_travel(planned->travel, f, tables);
  return PlanResult{expanded, planned->delay, planned->cost};
}

std::size_t extracted_edge_count(const CcPlannerState& state) {
  const EvolvingGraph& g = *state.graph;
  std::set<std::tuple<int, int, int>> edges;
  for (const NodeTime& nt : state.extraction_order) {
    for (int v : g.neighbors(nt.node)) {
      if (g.has_edge(nt.node, v, nt.time)) {
        edges.insert({std::min(nt.node, v), std::max(nt.node, v), nt.time});
      }
    }
  }
  return edges.size();
}

}  // namespace chronoplan
