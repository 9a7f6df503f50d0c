#include <doctest.h>

#include <random>
#include <set>

#include "chronoplan/oracle.hpp"

using namespace chronoplan;

TEST_SUITE_BEGIN("oracle");

namespace {

EvolvingGraph g1() {
  EvolvingGraph g(2);
  g.add_edge(0, 1, 5);
  return g;
}

EvolvingGraph g2() {
  EvolvingGraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 0);
  g.add_edge(1, 2, 3);
  return g;
}

}  // namespace

TEST_CASE("enumeration yields the expected travels") {
  std::set<std::string> seen;
  enumerate_travels(g1(), 0, 1, {4, 5}, [&](const Travel& t) { seen.insert(t.str()); });
  CHECK(seen.count("(0,0) (0,5) (1,5)") == 1);
  CHECK(seen.count("(0,0) (0,5) (1,5) (1,0)") == 1);

  bool found_single = false;
  enumerate_travels(g1(), 0, 0, {3, 5}, [&](const Travel& t) {
    if (t == Travel::single(0, 0)) found_single = true;
  });
  CHECK(found_single);

  int count = 0;
  EvolvingGraph disconnected(3);
  disconnected.add_edge(0, 1, 2);
  enumerate_travels(disconnected, 0, 2, {6, 2}, [&](const Travel&) { ++count; });
  CHECK(count == 0);
}

TEST_CASE("every enumerated travel validates, and the stream is complete") {
  EvolvingGraph g = EvolvingGraph::random(3, 2, 0.5, 21);
  OracleBounds bounds{4, 2};
  long long produced = 0;
  for (int dst = 0; dst < 3; ++dst) {
    enumerate_travels(g, 0, dst, bounds, [&](const Travel& t) {
      ++produced;
      CHECK(t.valid_in(g));
      CHECK(t.front() == Step{0, 0});
      CHECK(t.back().node == dst);
      CHECK(static_cast<int>(t.steps().size()) <= bounds.max_len);
    });
  }
  // Independent count of valid step sequences from (0,0): a sequence extends
  // by an edge at the current instant or by a same-node step to any instant.
  long long expected = 0;
  auto count_rec = [&](auto&& self, int node, int time, int len) -> void {
    ++expected;
    if (len == bounds.max_len) return;
    for (int v : g.neighbors(node)) {
      if (g.has_edge(node, v, time)) self(self, v, time, len + 1);
    }
    for (int t2 = 0; t2 <= bounds.max_time; ++t2) self(self, node, t2, len + 1);
  };
  count_rec(count_rec, 0, 0, 1);
  CHECK(produced == expected);
}

TEST_CASE("grid answers match the hand-derived instances") {
  auto identity = CostFunction::identity();
  OracleBounds b1 = OracleBounds::defaults_for(g1());

  CHECK(oracle_cc(g1(), identity, Cost::infinity(), 0, 1, b1) == OracleAnswer{0, Cost(5)});
  CHECK(oracle_cc(g1(), identity, Cost(3), 0, 1, b1) == OracleAnswer{2, Cost(3)});
  CHECK(oracle_cc(g1(), identity, Cost(0), 0, 1, b1) == OracleAnswer{5, Cost(0)});

  CHECK(oracle_delta_c(g1(), identity, Cost::infinity(), 0, 1, 5, b1) == Cost(0));
  CHECK(oracle_delta_c(g1(), identity, Cost::infinity(), 0, 1, 0, b1) == Cost(5));
  CHECK_FALSE(oracle_delta_c(g1(), identity, Cost(3), 0, 1, 0, b1).has_value());

  OracleBounds b2 = OracleBounds::defaults_for(g2());
  CHECK(oracle_cc(g2(), identity, Cost::infinity(), 0, 2, b2) == OracleAnswer{0, Cost(1)});
  CHECK(oracle_hc(g2(), identity, 1, 0, 2, b2) == OracleAnswer{0, Cost(1)});
  CHECK(oracle_hc(g2(), identity, 0, 0, 2, b2) == OracleAnswer{3, Cost(0)});
}

TEST_CASE("grid agrees with pure enumeration on small random instances") {
  std::mt19937_64 rng(31337);
  auto fns = {CostFunction::identity(), CostFunction::constant(1),
              CostFunction::table({1, 2, 2, 3}, CostFunction::Tail::constant, 3)};
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int lifetime = static_cast<int>(rng() % 3);
    EvolvingGraph g = EvolvingGraph::random(n, lifetime, 0.45, rng());
    OracleBounds bounds{6, g.lifetime()};
    int src = 0, dst = n - 1;
    for (const auto& f : fns) {
      for (const auto& budget : {Cost(0), Cost(1), Cost::infinity()}) {
        auto grid = oracle_cc(g, f, budget, src, dst, bounds);
        auto brute = oracle_cc_enumerated(g, f, budget, src, dst, bounds);
        CHECK(grid == brute);
      }
      for (int H : {0, 1, 2}) {
        auto grid = oracle_hc(g, f, H, src, dst, bounds);
        auto brute = oracle_hc_enumerated(g, f, H, src, dst, bounds);
        CHECK(grid == brute);
      }
    }
  }
}

TEST_CASE("grid agrees with enumeration under strict traversal") {
  std::mt19937_64 rng(2718);
  auto identity = CostFunction::identity();
  for (int trial = 0; trial < 30; ++trial) {
    EvolvingGraph g = EvolvingGraph::random(2, 2, 0.5, rng()).strictified();
    OracleBounds bounds{6, g.lifetime() + 1};
    auto grid = oracle_cc(g, identity, Cost::infinity(), 0, 1, bounds);
    auto brute = oracle_cc_enumerated(g, identity, Cost::infinity(), 0, 1, bounds);
    CHECK(grid == brute);
  }
}

TEST_CASE("reconstructed oracle travels attain the reported optimum") {
  std::mt19937_64 rng(90210);
  auto identity = CostFunction::identity();
  for (int trial = 0; trial < 80; ++trial) {
    EvolvingGraph g = EvolvingGraph::random(4, 5, 0.35, rng());
    OracleBounds bounds = OracleBounds::defaults_for(g);
    auto res = oracle_cc_travel(g, identity, Cost::infinity(), 0, 3, bounds);
    if (!res) continue;
    CHECK(res->travel.valid_in(g));
    CHECK(res->travel.front() == Step{0, 0});
    CHECK(res->travel.back().node == 3);
    CHECK(res->travel.delay() == res->delay);
    CHECK(travel_cost(res->travel, identity) == res->cost);
  }
}

TEST_CASE("simple-travel oracle never beats the unrestricted one") {
  auto both_ways = oracle_cc_simple(g2(), CostFunction::identity(), Cost::infinity(), 0, 2,
                                    OracleBounds::defaults_for(g2()));
  CHECK(both_ways == OracleAnswer{0, Cost(1)});

  std::mt19937_64 rng(55);
  auto identity = CostFunction::identity();
  for (int trial = 0; trial < 50; ++trial) {
    EvolvingGraph g = EvolvingGraph::random(4, 4, 0.4, rng());
    OracleBounds bounds = OracleBounds::defaults_for(g);
    auto full = oracle_cc(g, identity, Cost(2), 0, 3, bounds);
    auto simple = oracle_cc_simple(g, identity, Cost(2), 0, 3, bounds);
    CHECK(full.has_value() == simple.has_value());
    if (full) {
      CHECK(full->delay == simple->delay);
      CHECK(full->cost == simple->cost);
    }
  }
}

TEST_CASE("history oracle defaults to the unconstrained answer for large bounds") {
  std::mt19937_64 rng(808);
  auto identity = CostFunction::identity();
  for (int trial = 0; trial < 40; ++trial) {
    EvolvingGraph g = EvolvingGraph::random(4, 5, 0.3, rng());
    OracleBounds bounds = OracleBounds::defaults_for(g);
    auto hc = oracle_hc(g, identity, g.lifetime(), 0, 3, bounds);
    auto cc = oracle_cc(g, identity, Cost::infinity(), 0, 3, bounds);
    CHECK(hc == cc);
  }
}

TEST_SUITE_END();
