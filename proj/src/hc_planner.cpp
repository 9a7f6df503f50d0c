#include "chronoplan/hc_planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "chronoplan/cc_planner.hpp"

namespace chronoplan {

HistoryTable::HistoryTable(int node_count, int history, int t_scan)
    : n_(node_count), history_(history), t_scan_(t_scan) {
  cells_.assign(static_cast<std::size_t>(t_scan + 1) * n_ * (history + 1), Cell{});
}

const HistoryTable::Cell& HistoryTable::at(int node, int arrival, int horizon) const {
  int h = horizon - arrival;
  return cells_[(static_cast<std::size_t>(horizon) * n_ + node) * (history_ + 1) + h];
}

HistoryTable::Cell& HistoryTable::at(int node, int arrival, int horizon) {
  int h = horizon - arrival;
  return cells_[(static_cast<std::size_t>(horizon) * n_ + node) * (history_ + 1) + h];
}

Cost HistoryTable::cost_at(int node, int arrival, int horizon) const {
  if (!in_range(arrival, horizon)) return Cost::infinity();
  return at(node, arrival, horizon).cost;
}

int compute_t_max(const EvolvingGraph& g) { return g.lifetime() + 1; }

namespace hc_detail {

bool relax_plane_once(const EvolvingGraph& g, const CostFunction& f, HistoryTable& table,
                      int t) {
  const int H = table.history();
  const int offset = g.arrival_offset();
  bool changed = false;
  for (int u = 0; u < g.node_count(); ++u) {
    for (int h = H; h >= 0; --h) {
      int arrival = t - h;
      if (arrival < 0) continue;
      // Best way to enter u within the window: cross (v,u) at t', then move
      // in time from the crossing instant down (or up) to the arrival bound.
      // With a strict arrival offset the crossing itself may create the plane
      // maximum from one instant below the window; that predecessor lives at
      // an earlier horizon (its maximum cannot exceed arrival + H).
      Cost best = Cost::infinity();
      int best_v = -1, best_t = -1;
      for (int t_cross = std::max(0, t - std::max(H, offset)); t_cross + offset <= t; ++t_cross) {
        for (int v : g.neighbors(u)) {
          if (!g.has_edge(u, v, t_cross)) continue;
          Cost prefix = t_cross >= t - H ? table.cost_at(v, t_cross, t)
                                         : table.cost_at(v, t_cross, t_cross + H);
          Cost cand =
              prefix + Cost(f.eval(static_cast<long long>(t_cross) + offset - arrival));
          if (cand < best || (cand == best && (t_cross < best_t ||
                                               (t_cross == best_t && v < best_v)))) {
            best = cand;
            best_v = v;
            best_t = t_cross;
          }
        }
      }
      auto& cell = table.at(u, arrival, t);
      if (best < cell.cost) {
        cell.cost = best;
        cell.from = HistoryTable::Provenance::edge;
        cell.pred_node = best_v;
        cell.pred_time = best_t;
        changed = true;
      }
    }
  }
  return changed;
}

}  // namespace hc_detail

namespace {

void seed_plane(const EvolvingGraph& g, HistoryTable& table, int t, int src) {
  const int H = table.history();
  for (int u = 0; u < g.node_count(); ++u) {
    for (int h = 0; h <= H; ++h) {
      int arrival = t - h;
      if (arrival < 0) continue;
      auto& cell = table.at(u, arrival, t);
      if (u == src) {
        cell.cost = Cost(0);
        cell.from = HistoryTable::Provenance::source;
        continue;
      }
      if (t == 0) continue;
      // Widen the horizon: a travel capped at t-1 is also capped at t, either
      // with the same arrival bound or one tighter.
      Cost same = table.cost_at(u, arrival, t - 1);
      Cost prev = arrival >= 1 ? table.cost_at(u, arrival - 1, t - 1) : Cost::infinity();
      if (same <= prev) {
        if (same.is_finite()) {
          cell.cost = same;
          cell.from = HistoryTable::Provenance::carry_same;
        }
      } else if (prev.is_finite()) {
        cell.cost = prev;
        cell.from = HistoryTable::Provenance::carry_prev;
      }
    }
  }
}

}  // namespace

std::optional<PlanResult> plan_history_constrained(const EvolvingGraph& g, const CostFunction& f,
                                                   int history, int src, int dst,
                                                   HistoryTable* table_out) {
  if (src < 0 || src >= g.node_count() || dst < 0 || dst >= g.node_count())
    throw std::out_of_range("query node out of range");
  if (history < 0) throw std::invalid_argument("negative history bound");
  if (!is_user_friendly(f, std::max(uf_horizon(g), history)))
    throw std::invalid_argument("cost function is not user-friendly");

  const int t_scan = compute_t_max(g);
  HistoryTable local(g.node_count(), history, t_scan);
  HistoryTable& table = table_out ? (*table_out = HistoryTable(g.node_count(), history, t_scan))
                                  : local;
  table.src = src;

  for (int t = 0; t <= t_scan; ++t) {
    seed_plane(g, table, t, src);
    int sweeps = 0;
    bool changed = true;
    while (changed && sweeps < g.node_count()) {
      changed = hc_detail::relax_plane_once(g, f, table, t);
      ++sweeps;
    }
    // Keep sweeping past the nominal |V| rounds until nothing moves, so the
    // stored provenance matches the final values exactly.
    while (changed) {
      changed = hc_detail::relax_plane_once(g, f, table, t);
    }
  }

  // Smallest arrival bound with any feasible cell, then cheapest such cell.
  std::optional<int> best_arrival;
  Cost best_cost = Cost::infinity();
  int best_horizon = -1;
  for (int t = 0; t <= t_scan; ++t) {
    for (int arrival = std::max(0, t - history); arrival <= t; ++arrival) {
      const Cost& c = table.cost_at(dst, arrival, t);
      if (c.is_infinite()) continue;
      if (!best_arrival || arrival < *best_arrival ||
          (arrival == *best_arrival && c < best_cost)) {
        best_arrival = arrival;
        best_cost = c;
        best_horizon = t;
      }
    }
  }
  if (!best_arrival) return std::nullopt;
  Travel travel = extract_history_constrained_travel(table, g, dst, *best_arrival, best_horizon);
  return PlanResult{travel.collapsed(), *best_arrival, best_cost};
}

Travel extract_history_constrained_travel(const HistoryTable& table, const EvolvingGraph& g,
                                          int u, int arrival, int horizon) {
  if (u == table.src) {
    if (arrival == 0) return Travel::single(u, 0);
    return Travel({{u, 0}, {u, arrival}});
  }
  const auto& cell = table.at(u, arrival, horizon);
  switch (cell.from) {
    case HistoryTable::Provenance::none:
      throw std::invalid_argument("extracting an infeasible history cell");
    case HistoryTable::Provenance::source:
      throw std::logic_error("source provenance off the source row");
    case HistoryTable::Provenance::edge: {
      // Below-window crossings were priced from the earlier horizon they
      // live at; follow them there.
      int pred_horizon =
          cell.pred_time >= horizon - table.history() ? horizon : cell.pred_time + table.history();
      Travel prefix = extract_history_constrained_travel(table, g, cell.pred_node, cell.pred_time,
                                                         pred_horizon);
      std::vector<Step> steps = prefix.steps();
      int crossed = cell.pred_time + g.arrival_offset();
      steps.push_back({u, crossed});
      if (crossed != arrival) steps.push_back({u, arrival});
      return Travel(std::move(steps));
    }
    case HistoryTable::Provenance::carry_same: {
      return extract_history_constrained_travel(table, g, u, arrival, horizon - 1);
    }
    case HistoryTable::Provenance::carry_prev: {
      Travel prefix = extract_history_constrained_travel(table, g, u, arrival - 1, horizon - 1);
      std::vector<Step> steps = prefix.steps();
      steps.push_back({u, arrival});
      return Travel(std::move(steps));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace chronoplan
