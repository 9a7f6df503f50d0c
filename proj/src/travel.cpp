#include "chronoplan/travel.hpp"

#include <sstream>
#include <stdexcept>

namespace chronoplan {

Travel::Travel(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("travel needs at least one step");
  for (const Step& s : steps_) {
    if (s.time < 0) throw std::invalid_argument("negative time in travel");
  }
}

bool Travel::valid_in(const EvolvingGraph& g) const {
  for (const Step& s : steps_) {
    if (s.node < 0 || s.node >= g.node_count()) return false;
  }
  for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
    const Step& a = steps_[i];
    const Step& b = steps_[i + 1];
    if (a.node == b.node) continue;  // waiting or jumping, any time change
    if (b.time != a.time + g.arrival_offset()) return false;
    if (!g.has_edge(a.node, b.node, a.time)) return false;
  }
  return true;
}

bool Travel::is_simple() const {
  for (std::size_t i = 2; i < steps_.size(); ++i) {
    for (std::size_t j = 0; j + 2 <= i; ++j) {
      if (steps_[i].node == steps_[j].node) return false;
    }
  }
  return true;
}

bool Travel::respects_history_bound(int history) const {
  if (history < 0) throw std::invalid_argument("negative history bound");
  int max_reached = steps_.front().time;
  for (const Step& s : steps_) {
    max_reached = std::max(max_reached, s.time);
    if (s.time < max_reached - history) return false;
  }
  return true;
}

Travel Travel::concat(const Travel& other) const {
  if (back() != other.front()) throw std::invalid_argument("concat junction mismatch");
  std::vector<Step> steps = steps_;
  steps.insert(steps.end(), other.steps_.begin() + 1, other.steps_.end());
  return Travel(std::move(steps));
}

Travel Travel::collapsed() const {
  std::vector<Step> steps;
  for (const Step& s : steps_) {
    if (steps.empty() || !(steps.back() == s)) steps.push_back(s);
  }
  return Travel(std::move(steps));
}

std::string Travel::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out << " ";
    out << "(" << steps_[i].node << "," << steps_[i].time << ")";
  }
  return out.str();
}

Travel Travel::parse(std::string_view text) {
  std::vector<Step> steps;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int node, time;
    char open, comma, close;
    std::istringstream ts(token);
    ts >> open >> node >> comma >> time >> close;
    if (ts.fail() || open != '(' || comma != ',' || close != ')')
      throw std::invalid_argument("malformed travel step: " + token);
    steps.push_back({node, time});
  }
  return Travel(std::move(steps));
}

Cost travel_cost(const Travel& travel, const CostFunction& f) {
  Cost::rational total = 0;
  const auto& steps = travel.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    total += f.eval(static_cast<long long>(steps[i].time) - steps[i + 1].time);
  }
  return Cost(total);
}

}  // namespace chronoplan
