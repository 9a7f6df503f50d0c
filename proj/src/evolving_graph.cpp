#include "chronoplan/evolving_graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace chronoplan {

bool StaticGraph::connected() const {
  if (node_count <= 1) return true;
  std::vector<std::vector<int>> adj(node_count);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(node_count, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == node_count;
}

EvolvingGraph::EvolvingGraph(int node_count) : n_(node_count), adj_(std::max(node_count, 0)) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
}

void EvolvingGraph::check_node(int u) const {
  if (u < 0 || u >= n_) throw std::out_of_range("node id out of range");
}

void EvolvingGraph::add_edge(int u, int v, int t) {
  check_node(u);
  check_node(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (t < 0) throw std::invalid_argument("negative time");
  if (u > v) std::swap(u, v);
  auto& times = occ_[{u, v}];
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it != times.end() && *it == t) return;  // duplicate slot
  times.insert(it, t);
  lifetime_ = std::max(lifetime_, t);
  auto ins = [](std::vector<int>& vec, int x) {
    auto p = std::lower_bound(vec.begin(), vec.end(), x);
    if (p == vec.end() || *p != x) vec.insert(p, x);
  };
  ins(adj_[u], v);
  ins(adj_[v], u);
}

const std::vector<int>& EvolvingGraph::occurrence_times(int u, int v) const {
  static const std::vector<int> kEmpty;
  if (u > v) std::swap(u, v);
  auto it = occ_.find({u, v});
  return it == occ_.end() ? kEmpty : it->second;
}

bool EvolvingGraph::has_edge(int u, int v, int t) const {
  const auto& times = occurrence_times(u, v);
  return std::binary_search(times.begin(), times.end(), t);
}

std::optional<int> EvolvingGraph::next_edge_time(int u, int v, int t) const {
  const auto& times = occurrence_times(u, v);
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end()) return std::nullopt;
  return *it;
}

std::vector<int> EvolvingGraph::edge_times_at_or_before(int u, int v, int t) const {
  const auto& times = occurrence_times(u, v);
  auto it = std::upper_bound(times.begin(), times.end(), t);
  std::vector<int> out(times.begin(), it);
  std::reverse(out.begin(), out.end());
  return out;
}

const std::vector<int>& EvolvingGraph::neighbors(int u) const {
  check_node(u);
  return adj_[u];
}

StaticGraph EvolvingGraph::snapshot(int t) const {
  StaticGraph g{n_, {}};
  for (const auto& [pair, times] : occ_) {
    if (std::binary_search(times.begin(), times.end(), t)) g.edges.insert(pair);
  }
  return g;
}

StaticGraph EvolvingGraph::footprint() const {
  StaticGraph g{n_, {}};
  for (const auto& [pair, times] : occ_) {
    if (!times.empty()) g.edges.insert(pair);
  }
  return g;
}

bool EvolvingGraph::footprint_connected() const { return footprint().connected(); }

bool EvolvingGraph::footprint_reachable(int from, int to) const {
  check_node(from);
  check_node(to);
  if (from == to) return true;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u]) {
      if (v == to) return true;
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return false;
}

std::vector<TemporalEdge> EvolvingGraph::temporal_edges() const {
  std::vector<TemporalEdge> out;
  for (const auto& [pair, times] : occ_) {
    for (int t : times) out.push_back({pair.first, pair.second, t});
  }
  std::sort(out.begin(), out.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
    return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
  });
  return out;
}

std::size_t EvolvingGraph::temporal_edge_count() const {
  std::size_t total = 0;
  for (const auto& [pair, times] : occ_) total += times.size();
  return total;
}

EvolvingGraph EvolvingGraph::strictified() const {
  EvolvingGraph g = *this;
  g.arrival_offset_ = 1;
  return g;
}

EvolvingGraph EvolvingGraph::parse(std::string_view text) {
  std::istringstream in(std::string{text});
  std::string line;
  int lineno = 0;
  int n = -1;
  std::optional<EvolvingGraph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (sv[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string keyword;
      ls >> keyword >> n;
      if (ls.fail() || keyword != "nodes" || n < 0)
        throw graph_parse_error(lineno, "expected 'nodes <n>'");
      std::string rest;
      if (ls >> rest) throw graph_parse_error(lineno, "trailing tokens after node count");
      g.emplace(n);
      continue;
    }
    long long t, u, v;
    ls >> t >> u >> v;
    if (ls.fail()) throw graph_parse_error(lineno, "expected '<t> <u> <v>'");
    std::string rest;
    if (ls >> rest) throw graph_parse_error(lineno, "trailing tokens after edge");
    if (t < 0) throw graph_parse_error(lineno, "negative time");
    if (u < 0 || u >= n || v < 0 || v >= n) throw graph_parse_error(lineno, "node id out of range");
    if (u == v) throw graph_parse_error(lineno, "self-loop");
    g->add_edge(static_cast<int>(u), static_cast<int>(v), static_cast<int>(t));
  }
  if (!g) throw graph_parse_error(lineno, "missing 'nodes <n>' header");
  return *g;
}

std::string EvolvingGraph::serialize() const {
  std::ostringstream out;
  out << "nodes " << n_ << "\n";
  for (const auto& e : temporal_edges()) out << e.t << " " << e.u << " " << e.v << "\n";
  return out.str();
}

EvolvingGraph EvolvingGraph::random(int n, int lifetime, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need at least one node");
  if (lifetime < 0) throw std::invalid_argument("negative lifetime");
  if (edge_prob < 0.0 || edge_prob > 1.0) throw std::invalid_argument("edge_prob outside [0,1]");
  EvolvingGraph g(n);
  std::mt19937_64 rng(seed);
  // Explicit 53-bit draw instead of uniform_real_distribution so graphs are
  // identical across standard library implementations.
  auto draw = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int t = 0; t <= lifetime; ++t) {
        if (draw() < edge_prob) g.add_edge(u, v, t);
      }
    }
  }
  return g;
}

}  // namespace chronoplan
