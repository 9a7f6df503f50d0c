#ifndef CHRONOPLAN_EVOLVING_GRAPH_HPP
#define CHRONOPLAN_EVOLVING_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chronoplan {

// An undirected edge present at one time instant. Stored canonically with u < v.
struct TemporalEdge {
  int u;
  int v;
  int t;
  bool operator==(const TemporalEdge&) const = default;
};

struct StaticGraph {
  int node_count = 0;
  std::set<std::pair<int, int>> edges;  // canonical pairs, u < v

  // True iff every node is reachable from node 0 (vacuously true for n <= 1).
  bool connected() const;
};

class graph_parse_error : public std::runtime_error {
 public:
  graph_parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Fixed node set, time-indexed edge sets. Occurrence lists per node pair are
// kept sorted so next/previous edge queries are binary searches. Immutable
// once built; planners share a graph freely across queries.
class EvolvingGraph {
 public:
  explicit EvolvingGraph(int node_count);

  void add_edge(int u, int v, int t);

  int node_count() const { return n_; }
  int lifetime() const { return lifetime_; }  // max edge time, 0 if no edges

  // 0 for the default model (crossing an edge keeps the time instant),
  // 1 for the strict-journey variant (crossing arrives one instant later).
  int arrival_offset() const { return arrival_offset_; }

  bool has_edge(int u, int v, int t) const;

  // Least t' >= t with (u,v) in E_{t'}, if any.
  std::optional<int> next_edge_time(int u, int v, int t) const;

  // All t' <= t with (u,v) in E_{t'}, descending.
  std::vector<int> edge_times_at_or_before(int u, int v, int t) const;

  // Times of (u,v), ascending; empty list if the pair never appears.
  const std::vector<int>& occurrence_times(int u, int v) const;

  // Footprint neighbors of u, ascending.
  const std::vector<int>& neighbors(int u) const;

  StaticGraph snapshot(int t) const;
  StaticGraph footprint() const;
  bool footprint_connected() const;
  bool footprint_reachable(int from, int to) const;

  std::vector<TemporalEdge> temporal_edges() const;  // sorted by (t, u, v)
  std::size_t temporal_edge_count() const;

  // Same edges, but any traversal delivers the agent one instant later.
  EvolvingGraph strictified() const;

  static EvolvingGraph parse(std::string_view text);
  std::string serialize() const;

  // Each (pair, t) slot for t in [0, lifetime] is filled independently with
  // probability edge_prob. Deterministic for a given seed.
  static EvolvingGraph random(int n, int lifetime, double edge_prob, std::uint64_t seed);

  bool operator==(const EvolvingGraph& o) const {
    return n_ == o.n_ && arrival_offset_ == o.arrival_offset_ && occ_ == o.occ_;
  }

 private:
  void check_node(int u) const;

  int n_;
  int lifetime_ = 0;
  int arrival_offset_ = 0;
  std::map<std::pair<int, int>, std::vector<int>> occ_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace chronoplan

#endif
