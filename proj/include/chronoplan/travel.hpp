#ifndef CHRONOPLAN_TRAVEL_HPP
#define CHRONOPLAN_TRAVEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "chronoplan/cost.hpp"
#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"

namespace chronoplan {

struct Step {
  int node;
  int time;
  bool operator==(const Step&) const = default;
};

// A space-time travel: consecutive steps either stay on a node (waiting or a
// time jump, any time change) or cross an edge that exists at the current
// instant. Immutable value.
class Travel {
 public:
  explicit Travel(std::vector<Step> steps);
  static Travel single(int node, int time) { return Travel({{node, time}}); }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size() - 1; }  // number of moves
  const Step& front() const { return steps_.front(); }
  const Step& back() const { return steps_.back(); }

  int delay() const { return back().time - front().time; }

  // Valid against g per the step rules above. Node changes must keep the time
  // instant (or advance it by one in strict mode) and use an existing edge.
  bool valid_in(const EvolvingGraph& g) const;

  // No node recurs except consecutively; at most one time change per node run.
  bool is_simple() const;

  // Every step time stays within H of the running maximum time reached so far.
  bool respects_history_bound(int history) const;

  // Junction step must match exactly; it is not duplicated in the result.
  Travel concat(const Travel& other) const;

  // Drops consecutive exactly-equal steps.
  Travel collapsed() const;

  std::string str() const;  // "(u,t) (u,t) ..."
  static Travel parse(std::string_view text);

  bool operator==(const Travel& o) const { return steps_ == o.steps_; }

 private:
  std::vector<Step> steps_;
};

// Sum of f over backward spans between consecutive steps.
Cost travel_cost(const Travel& travel, const CostFunction& f);

// One planner answer. delay and cost restate the travel's own delay and cost.
struct PlanResult {
  Travel travel;
  int delay;
  Cost cost;
};

}  // namespace chronoplan

#endif
