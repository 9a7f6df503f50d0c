#include "chronoplan/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace chronoplan {

namespace {

void enumerate_rec(const EvolvingGraph& g, int dst, const OracleBounds& bounds,
                   std::vector<Step>& steps, const std::function<void(const Travel&)>& visit) {
  const Step cur = steps.back();
  if (cur.node == dst) visit(Travel(steps));
  if (static_cast<int>(steps.size()) >= bounds.max_len) return;
  for (int v : g.neighbors(cur.node)) {
    int arrival = cur.time + g.arrival_offset();
    if (arrival > bounds.max_time) continue;
    if (!g.has_edge(cur.node, v, cur.time)) continue;
    steps.push_back({v, arrival});
    enumerate_rec(g, dst, bounds, steps, visit);
    steps.pop_back();
  }
  for (int t = 0; t <= bounds.max_time; ++t) {
    steps.push_back({cur.node, t});
    enumerate_rec(g, dst, bounds, steps, visit);
    steps.pop_back();
  }
}

struct Parent {
  enum class Kind { none, start, edge, jump } kind = Kind::none;
  int node = -1;
  int time = -1;
};

struct Grid {
  std::vector<std::vector<Cost>> dist;
  std::vector<std::vector<Parent>> parent;
};

// Relaxes every edge arc and every same-node jump arc until nothing improves.
Grid cc_grid(const EvolvingGraph& g, const CostFunction& f, int start_node, int start_time,
             int max_time) {
  const int n = g.node_count();
  const int T = max_time;
  Grid grid;
  grid.dist.assign(n, std::vector<Cost>(T + 1, Cost::infinity()));
  grid.parent.assign(n, std::vector<Parent>(T + 1));
  if (start_time > T) return grid;
  grid.dist[start_node][start_time] = Cost(0);
  grid.parent[start_node][start_time] = {Parent::Kind::start, start_node, start_time};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      for (int t = 0; t <= T; ++t) {
        const Cost& du = grid.dist[u][t];
        if (du.is_infinite()) continue;
        int arrival = t + g.arrival_offset();
        if (arrival <= T) {
          for (int v : g.neighbors(u)) {
            if (!g.has_edge(u, v, t)) continue;
            if (du < grid.dist[v][arrival]) {
              grid.dist[v][arrival] = du;
              grid.parent[v][arrival] = {Parent::Kind::edge, u, t};
              changed = true;
            }
          }
        }
        for (int t2 = 0; t2 <= T; ++t2) {
          if (t2 == t) continue;
          Cost cand = du + Cost(f.eval(static_cast<long long>(t) - t2));
          if (cand < grid.dist[u][t2]) {
            grid.dist[u][t2] = cand;
            grid.parent[u][t2] = {Parent::Kind::jump, u, t};
            changed = true;
          }
        }
      }
    }
  }
  return grid;
}

Travel reconstruct(const Grid& grid, int node, int time) {
  std::vector<Step> rev;
  int u = node, t = time;
  while (true) {
    rev.push_back({u, t});
    const Parent& p = grid.parent[u][t];
    if (p.kind == Parent::Kind::start) break;
    if (p.kind == Parent::Kind::none) throw std::logic_error("broken oracle parent chain");
    u = p.node;
    t = p.time;
  }
  std::reverse(rev.begin(), rev.end());
  return Travel(std::move(rev));
}

}  // namespace

void enumerate_travels(const EvolvingGraph& g, int src, int dst, const OracleBounds& bounds,
                       const std::function<void(const Travel&)>& visit) {
  if (bounds.max_len < 1) return;
  if (bounds.max_time < 0) return;
  std::vector<Step> steps{{src, 0}};
  enumerate_rec(g, dst, bounds, steps, visit);
}

std::vector<std::vector<Cost>> oracle_min_costs_from(const EvolvingGraph& g, const CostFunction& f,
                                                     int start_node, int start_time,
                                                     const OracleBounds& bounds) {
  return cc_grid(g, f, start_node, start_time, bounds.max_time).dist;
}

std::optional<Cost> oracle_delta_c(const EvolvingGraph& g, const CostFunction& f,
                                   const Cost& budget, int src, int u, int t,
                                   const OracleBounds& bounds) {
  if (t > bounds.max_time) return std::nullopt;
  Grid grid = cc_grid(g, f, src, 0, bounds.max_time);
  const Cost& c = grid.dist[u][t];
  if (c.is_finite() && c <= budget) return c;
  return std::nullopt;
}

std::vector<Cost> oracle_cc_profile(const EvolvingGraph& g, const CostFunction& f, int src,
                                    int dst, const OracleBounds& bounds) {
  Grid grid = cc_grid(g, f, src, 0, bounds.max_time);
  return grid.dist[dst];
}

std::optional<OracleAnswer> answer_from_profile(const std::vector<Cost>& profile,
                                                const Cost& budget) {
  for (std::size_t t = 0; t < profile.size(); ++t) {
    if (profile[t].is_finite() && profile[t] <= budget)
      return OracleAnswer{static_cast<int>(t), profile[t]};
  }
  return std::nullopt;
}

std::optional<OracleAnswer> oracle_cc(const EvolvingGraph& g, const CostFunction& f,
                                      const Cost& budget, int src, int dst,
                                      const OracleBounds& bounds) {
  return answer_from_profile(oracle_cc_profile(g, f, src, dst, bounds), budget);
}

std::optional<PlanResult> oracle_cc_travel(const EvolvingGraph& g, const CostFunction& f,
                                           const Cost& budget, int src, int dst,
                                           const OracleBounds& bounds) {
  Grid grid = cc_grid(g, f, src, 0, bounds.max_time);
  for (int t = 0; t <= bounds.max_time; ++t) {
    if (grid.dist[dst][t].is_finite() && grid.dist[dst][t] <= budget) {
      return PlanResult{reconstruct(grid, dst, t), t, grid.dist[dst][t]};
    }
  }
  return std::nullopt;
}

std::vector<Cost> oracle_hc_profile(const EvolvingGraph& g, const CostFunction& f, int history,
                                    int src, int dst, const OracleBounds& bounds) {
  if (history < 0) throw std::invalid_argument("negative history bound");
  const int n = g.node_count();
  const int T = bounds.max_time;
  // dist[u][t][m]: best cost to be at u at time t with running maximum m.
  std::vector dist(n, std::vector(T + 1, std::vector<Cost>(T + 1, Cost::infinity())));
  dist[src][0][0] = Cost(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      for (int t = 0; t <= T; ++t) {
        for (int m = t; m <= T; ++m) {
          const Cost& du = dist[u][t][m];
          if (du.is_infinite()) continue;
          int arrival = t + g.arrival_offset();
          if (arrival <= T) {
            int m2 = std::max(m, arrival);
            for (int v : g.neighbors(u)) {
              if (!g.has_edge(u, v, t)) continue;
              if (du < dist[v][arrival][m2]) {
                dist[v][arrival][m2] = du;
                changed = true;
              }
            }
          }
          for (int t2 = 0; t2 <= T; ++t2) {
            if (t2 == t) continue;
            if (t2 < m - history) continue;  // the device cannot reach below m - H
            int m2 = std::max(m, t2);
            Cost cand = du + Cost(f.eval(static_cast<long long>(t) - t2));
            if (cand < dist[u][t2][m2]) {
              dist[u][t2][m2] = cand;
              changed = true;
            }
          }
        }
      }
    }
  }
  std::vector<Cost> profile(T + 1, Cost::infinity());
  for (int t = 0; t <= T; ++t) {
    for (int m = t; m <= T; ++m) profile[t] = std::min(profile[t], dist[dst][t][m]);
  }
  return profile;
}

std::optional<OracleAnswer> oracle_hc(const EvolvingGraph& g, const CostFunction& f, int history,
                                      int src, int dst, const OracleBounds& bounds) {
  return answer_from_profile(oracle_hc_profile(g, f, history, src, dst, bounds),
                             Cost::infinity());
}

std::vector<Cost> oracle_cc_simple_profile(const EvolvingGraph& g, const CostFunction& f,
                                           int src, int dst, const OracleBounds& bounds) {
  const int n = g.node_count();
  const int T = bounds.max_time;
  if (n > 20) throw std::invalid_argument("simple-travel oracle is bitmask-bound");
  const int masks = 1 << n;
  // dist[u][t][mask][jumped]: best cost of a simple travel prefix standing at
  // (u, t), having visited `mask`, with the current node run already holding
  // its one allowed time change.
  std::vector dist(n, std::vector(T + 1, std::vector(masks, std::array<Cost, 2>{
                                                                Cost::infinity(),
                                                                Cost::infinity(),
                                                            })));
  dist[src][0][1 << src][0] = Cost(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      for (int t = 0; t <= T; ++t) {
        for (int mask = 0; mask < masks; ++mask) {
          for (int jumped = 0; jumped < 2; ++jumped) {
            const Cost& du = dist[u][t][mask][jumped];
            if (du.is_infinite()) continue;
            int arrival = t + g.arrival_offset();
            if (arrival <= T) {
              for (int v : g.neighbors(u)) {
                if (mask & (1 << v)) continue;
                if (!g.has_edge(u, v, t)) continue;
                Cost& dv = dist[v][arrival][mask | (1 << v)][0];
                if (du < dv) {
                  dv = du;
                  changed = true;
                }
              }
            }
            if (!jumped) {
              for (int t2 = 0; t2 <= T; ++t2) {
                if (t2 == t) continue;
                Cost cand = du + Cost(f.eval(static_cast<long long>(t) - t2));
                Cost& dv = dist[u][t2][mask][1];
                if (cand < dv) {
                  dv = cand;
                  changed = true;
                }
              }
            }
          }
        }
      }
    }
  }
  std::vector<Cost> profile(T + 1, Cost::infinity());
  for (int t = 0; t <= T; ++t) {
    for (int mask = 0; mask < masks; ++mask) {
      for (int jumped = 0; jumped < 2; ++jumped) {
        profile[t] = std::min(profile[t], dist[dst][t][mask][jumped]);
      }
    }
  }
  return profile;
}

std::optional<OracleAnswer> oracle_cc_simple(const EvolvingGraph& g, const CostFunction& f,
                                             const Cost& budget, int src, int dst,
                                             const OracleBounds& bounds) {
  return answer_from_profile(oracle_cc_simple_profile(g, f, src, dst, bounds), budget);
}

std::optional<OracleAnswer> oracle_cc_enumerated(const EvolvingGraph& g, const CostFunction& f,
                                                 const Cost& budget, int src, int dst,
                                                 const OracleBounds& bounds) {
  std::optional<OracleAnswer> best;
  enumerate_travels(g, src, dst, bounds, [&](const Travel& travel) {
    Cost c = travel_cost(travel, f);
    if (c > budget) return;
    OracleAnswer cand{travel.delay(), c};
    if (!best || cand.delay < best->delay || (cand.delay == best->delay && cand.cost < best->cost))
      best = cand;
  });
  return best;
}

std::optional<OracleAnswer> oracle_hc_enumerated(const EvolvingGraph& g, const CostFunction& f,
                                                 int history, int src, int dst,
                                                 const OracleBounds& bounds) {
  std::optional<OracleAnswer> best;
  enumerate_travels(g, src, dst, bounds, [&](const Travel& travel) {
    if (!travel.respects_history_bound(history)) return;
    OracleAnswer cand{travel.delay(), travel_cost(travel, f)};
    if (!best || cand.delay < best->delay || (cand.delay == best->delay && cand.cost < best->cost))
      best = cand;
  });
  return best;
}

}  // namespace chronoplan
