#include <doctest.h>

#include <random>

#include "chronoplan/cost_model.hpp"
#include "chronoplan/evolving_graph.hpp"
#include "chronoplan/travel.hpp"

using namespace chronoplan;

TEST_SUITE_BEGIN("travel");

namespace {

Travel make(std::initializer_list<Step> steps) { return Travel(std::vector<Step>(steps)); }

}  // namespace

TEST_CASE("validation against a graph") {
  EvolvingGraph g(2);
  g.add_edge(0, 1, 5);
  CHECK(make({{0, 0}, {0, 5}, {1, 5}}).valid_in(g));
  CHECK_FALSE(make({{0, 0}, {1, 0}}).valid_in(g));
  CHECK(make({{0, 0}, {0, 5}, {1, 5}, {1, 0}}).valid_in(g));

  auto strict = g.strictified();
  CHECK_FALSE(make({{0, 0}, {0, 5}, {1, 5}}).valid_in(strict));
  CHECK(make({{0, 0}, {0, 5}, {1, 6}}).valid_in(strict));
}

TEST_CASE("delay is arrival minus departure") {
  CHECK(make({{0, 0}, {0, 5}, {1, 5}, {1, 0}}).delay() == 0);
  CHECK(make({{0, 0}, {0, 7}}).delay() == 7);
  CHECK(make({{0, 3}}).delay() == 0);
  // Hand-built travels may end before they start; planners never emit these.
  CHECK(make({{0, 5}, {0, 2}}).delay() == -3);
}

TEST_CASE("cost sums backward spans only") {
  auto identity = CostFunction::identity();
  CHECK(travel_cost(make({{0, 7}, {0, 0}}), identity) == Cost(7));
  CHECK(travel_cost(make({{0, 0}, {0, 5}, {1, 5}}), identity) == Cost(0));
  CHECK(travel_cost(make({{0, 9}, {0, 6}, {0, 4}}), CostFunction::quadratic()) == Cost(13));
}

TEST_CASE("concatenation shares the junction step") {
  auto joined = make({{0, 0}, {0, 5}}).concat(make({{0, 5}, {1, 5}}));
  CHECK(joined == make({{0, 0}, {0, 5}, {1, 5}}));
  CHECK_THROWS_AS(Travel::single(0, 0).concat(Travel::single(1, 0)), std::invalid_argument);
}

TEST_CASE("simplicity forbids any non-consecutive recurrence") {
  CHECK(make({{0, 0}, {0, 5}, {1, 5}}).is_simple());
  CHECK_FALSE(make({{0, 0}, {1, 0}, {0, 0}}).is_simple());
  CHECK_FALSE(make({{0, 0}, {0, 1}, {0, 2}}).is_simple());
}

TEST_CASE("history bound tracks the running maximum") {
  CHECK(make({{0, 0}, {0, 2}, {0, 1}}).respects_history_bound(1));
  CHECK_FALSE(make({{0, 0}, {0, 2}, {0, 0}}).respects_history_bound(1));
  // Two jumps cannot dodge the bound: the maximum already reached rules.
  CHECK_FALSE(make({{0, 0}, {0, 2}, {0, 1}, {0, 0}}).respects_history_bound(1));
}

TEST_CASE("text form round-trips") {
  auto t = make({{0, 0}, {0, 5}, {1, 5}, {1, 0}});
  CHECK(t.str() == "(0,0) (0,5) (1,5) (1,0)");
  CHECK(Travel::parse(t.str()) == t);
  CHECK_THROWS_AS(Travel::parse("(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(Travel::parse(""), std::invalid_argument);
}

TEST_CASE("cost is additive under concatenation and validity is preserved") {
  std::mt19937_64 rng(7);
  auto identity = CostFunction::identity();
  auto quad = CostFunction::quadratic();
  EvolvingGraph g = EvolvingGraph::random(4, 6, 0.5, 11);
  for (int trial = 0; trial < 200; ++trial) {
    // Random valid travel split at a random point.
    std::vector<Step> steps{{static_cast<int>(rng() % 4), static_cast<int>(rng() % 7)}};
    for (int len = 1 + static_cast<int>(rng() % 6); len > 0; --len) {
      Step cur = steps.back();
      bool crossed = false;
      if (rng() % 2) {
        for (int v : g.neighbors(cur.node)) {
          if (g.has_edge(cur.node, v, cur.time)) {
            steps.push_back({v, cur.time});
            crossed = true;
            break;
          }
        }
      }
      if (!crossed) steps.push_back({cur.node, static_cast<int>(rng() % 7)});
    }
    Travel whole{steps};
    REQUIRE(whole.valid_in(g));
    std::size_t cut = rng() % steps.size();
    Travel left{std::vector<Step>(steps.begin(), steps.begin() + cut + 1)};
    Travel right{std::vector<Step>(steps.begin() + cut, steps.end())};
    CHECK(left.concat(right) == whole);
    CHECK(left.concat(right).valid_in(g));
    for (const auto& f : {identity, quad}) {
      CHECK(travel_cost(left, f) + travel_cost(right, f) == travel_cost(whole, f));
    }
    // Associativity through a second cut.
    if (cut + 1 < steps.size()) {
      std::size_t cut2 = cut + 1 + rng() % (steps.size() - cut - 1);
      Travel mid{std::vector<Step>(steps.begin() + cut, steps.begin() + cut2 + 1)};
      Travel tail{std::vector<Step>(steps.begin() + cut2, steps.end())};
      CHECK(left.concat(mid).concat(tail) == left.concat(mid.concat(tail)));
    }
  }
}

TEST_SUITE_END();
