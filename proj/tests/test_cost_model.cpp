#include <doctest.h>

#include <random>

#include "chronoplan/cost_model.hpp"
#include "chronoplan/travel.hpp"

using namespace chronoplan;

TEST_SUITE_BEGIN("cost_model");

namespace {

CostFunction spiky_table() {
  // f(1)=5, f(2)=1, f(>=3)=1: optimizable, not friendly (not non-decreasing).
  return CostFunction::table({5, 1}, CostFunction::Tail::constant, 1);
}

}  // namespace

TEST_CASE("eval honors kinds, the forward-is-free rule, and tails") {
  CHECK(CostFunction::identity().eval(7) == 7);
  CHECK(CostFunction::identity().eval(-3) == 0);
  CHECK(CostFunction::quadratic().eval(-3) == 0);
  CHECK(spiky_table().eval(9) == 1);
  CHECK(CostFunction::affine(Cost::rational(1, 2), 1).eval(3) == Cost::rational(5, 2));
  CHECK(CostFunction::constant(4).eval(100) == 4);
  CHECK(CostFunction::table({3, 2}, CostFunction::Tail::extend).eval(50) == 2);
  CHECK_THROWS_AS(CostFunction::table({3}, CostFunction::Tail::none).eval(2), std::domain_error);
}

TEST_CASE("user-optimizable covers every representable tailed form") {
  CHECK(is_user_optimizable(CostFunction::identity()));
  CHECK(is_user_optimizable(spiky_table()));
  CHECK(is_user_optimizable(CostFunction::quadratic()));
  // A truncated decreasing table still attains its minima thanks to the tail.
  CHECK(is_user_optimizable(CostFunction::table({3, 2, 1}, CostFunction::Tail::constant, 1)));
  CHECK_FALSE(is_user_optimizable(CostFunction::affine(-1, 10)));
  CHECK_FALSE(is_user_optimizable(CostFunction::constant(-1)));
  CHECK_FALSE(is_user_optimizable(CostFunction::table({1}, CostFunction::Tail::none)));
}

TEST_CASE("user-friendly needs monotone sub-additive costs") {
  CHECK(is_user_friendly(CostFunction::identity(), 10));
  CHECK_FALSE(is_user_friendly(CostFunction::quadratic(), 10));  // f(2) > 2 f(1)
  CHECK(is_user_friendly(CostFunction::constant(3), 10));
  CHECK_FALSE(is_user_friendly(spiky_table(), 10));
  CHECK(is_user_friendly(CostFunction::table({1, 2, 2, 3}, CostFunction::Tail::constant, 3), 10));
  CHECK(is_user_friendly(CostFunction::affine(2, 1), 10));
  CHECK_FALSE(is_user_friendly(CostFunction::affine(2, -1), 10));
}

TEST_CASE("monotone envelope is the running suffix minimum") {
  auto env = monotone_envelope(CostFunction::identity(), 5);
  for (int t = 1; t <= 5; ++t) CHECK(env[t] == t);

  auto spiky = monotone_envelope(spiky_table(), 5);
  CHECK(spiky[1] == 1);
  CHECK(spiky[2] == 1);
  CHECK(spiky[5] == 1);

  auto flat = monotone_envelope(CostFunction::constant(2), 4);
  for (int t = 1; t <= 4; ++t) CHECK(flat[t] == 2);
}

TEST_CASE("sub-additive closure matches exhaustive composition search") {
  const int horizon = 6;
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Cost::rational> values;
    for (int i = 0, len = 1 + static_cast<int>(rng() % 5); i < len; ++i)
      values.push_back(static_cast<long long>(rng() % 7));
    CostFunction f =
        CostFunction::table(values, CostFunction::Tail::constant, static_cast<long long>(rng() % 7));
    ClosureTables tables = build_closure_tables(f, horizon);

    // Oracle: minimum over all compositions of t, enumerated recursively.
    auto best_composition = [&](auto&& self, int t) -> Cost::rational {
      if (t == 0) return 0;
      Cost::rational best = tables.f_inc[t];
      for (int a = 1; a < t; ++a) best = std::min(best, tables.f_inc[a] + self(self, t - a));
      return best;
    };
    for (int t = 1; t <= horizon; ++t) {
      CHECK(tables.f_tilde[t] == best_composition(best_composition, t));
      CHECK(tables.f_tilde[t] <= tables.f_inc[t]);
      CHECK(tables.f_inc[t] <= f.eval(t));
      if (t > 1) {
        CHECK(tables.f_inc[t - 1] <= tables.f_inc[t]);
        CHECK(tables.f_tilde[t - 1] <= tables.f_tilde[t]);
      }
      int a = tables.split[t];
      CHECK(tables.f_tilde[t] == tables.f_inc[a] + tables.f_tilde[t - a]);
    }
    for (int a = 1; a <= horizon; ++a) {
      for (int b = a; a + b <= horizon; ++b) {
        CHECK(tables.f_tilde[a + b] <= tables.f_tilde[a] + tables.f_tilde[b]);
      }
    }
  }
}

TEST_CASE("closure of friendly functions is the function itself") {
  for (const auto& f : {CostFunction::identity(), CostFunction::constant(2)}) {
    ClosureTables tables = build_closure_tables(f, 8);
    for (int t = 1; t <= 8; ++t) CHECK(tables.f_tilde[t] == f.eval(t));
  }
  // The spiky table closes to its envelope value everywhere.
  ClosureTables tables = build_closure_tables(spiky_table(), 6);
  CHECK(tables.f_tilde[1] == 1);
  CHECK(tables.f_tilde[2] == 1);
  CHECK(tables.f_tilde[3] == 1);
}

TEST_CASE("dm lookup finds the earliest span paying the envelope price") {
  CHECK(dm_lookup(CostFunction::identity(), 3, 8) == 3);
  CHECK(dm_lookup(spiky_table(), 1, 8) == 2);
  CHECK(dm_lookup(CostFunction::constant(4), 4, 8) == 4);
}

TEST_CASE("expansion keeps identity travels as they are") {
  ClosureTables tables = build_closure_tables(CostFunction::identity(), 8);
  Travel t({{0, 0}, {0, 5}, {1, 5}, {1, 0}});
  CHECK(expand_travel(t, CostFunction::identity(), tables) == t);
}

TEST_CASE("expansion realizes each piece as wait then jump") {
  ClosureTables tables = build_closure_tables(spiky_table(), 8);
  Travel jump({{0, 3}, {0, 2}});
  Travel expanded = expand_travel(jump, spiky_table(), tables);
  CHECK(expanded == Travel({{0, 3}, {0, 4}, {0, 2}}));
  CHECK(travel_cost(expanded, spiky_table()) == Cost(1));
  CHECK(Cost(tables.f_tilde_at(1)) == Cost(1));
}

TEST_CASE("expansion preserves endpoints and pays exactly the closure cost") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Cost::rational> values;
    for (int i = 0, len = 1 + static_cast<int>(rng() % 5); i < len; ++i)
      values.push_back(static_cast<long long>(1 + rng() % 9));
    CostFunction f =
        CostFunction::table(values, CostFunction::Tail::constant,
                            static_cast<long long>(1 + rng() % 9));
    const int horizon = 10;
    ClosureTables tables = build_closure_tables(f, horizon);

    std::vector<Step> steps{{0, static_cast<int>(5 + rng() % 6)}};
    for (int k = 0; k < 3; ++k) {
      int span = 1 + static_cast<int>(rng() % 3);
      if (steps.back().time - span < 0) break;
      steps.push_back({0, steps.back().time - span});
    }
    Travel travel{steps};
    Travel expanded = expand_travel(travel, f, tables);
    CHECK(expanded.front() == travel.front());
    CHECK(expanded.back() == travel.back());
    Cost::rational closure_cost = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
      closure_cost += tables.f_tilde_at(steps[i].time - steps[i + 1].time);
    CHECK(travel_cost(expanded, f) == Cost(closure_cost));
  }
}

TEST_CASE("cost spec grammar") {
  CHECK(parse_cost_spec("identity").kind() == CostFunction::Kind::identity);
  CHECK(parse_cost_spec("quadratic").eval(3) == 9);
  CHECK(parse_cost_spec("constant:2.5").eval(9) == Cost::rational(5, 2));
  CHECK(parse_cost_spec("affine:2,1").eval(3) == 7);
  auto t = parse_cost_spec("table:5,1;tail=const:1");
  CHECK(t.eval(1) == 5);
  CHECK(t.eval(7) == 1);
  CHECK(parse_cost_spec("table:3,2;tail=extend").eval(9) == 2);
  CHECK_THROWS_AS(parse_cost_spec("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cost_spec("table:1;tail=wat"), std::invalid_argument);
  CHECK(parse_cost_spec(spiky_table().spec_string()).spec_string() == spiky_table().spec_string());
}

TEST_SUITE_END();
