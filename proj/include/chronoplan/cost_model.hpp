#ifndef CHRONOPLAN_COST_MODEL_HPP
#define CHRONOPLAN_COST_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronoplan/cost.hpp"

namespace chronoplan {

class Travel;

// Price of jumping delta instants into the past. Forward spans (delta <= 0)
// are free. Table functions carry an explicit tail so the minimum of f over
// any interval [C, inf) stays computable; arbitrary user code is rejected
// because deciding whether such a function attains its minima would not be
// possible.
class CostFunction {
 public:
  enum class Kind { identity, affine, quadratic, constant, table };
  enum class Tail { none, constant, extend };  // extend = keep last table value

  static CostFunction identity();
  static CostFunction affine(Cost::rational a, Cost::rational b);
  static CostFunction quadratic();
  static CostFunction constant(Cost::rational c);
  static CostFunction table(std::vector<Cost::rational> values, Tail tail,
                            Cost::rational tail_value = 0);

  Kind kind() const { return kind_; }
  Tail tail() const { return tail_; }
  const std::vector<Cost::rational>& values() const { return values_; }

  // f(delta); 0 for delta <= 0. Throws std::domain_error past a tailless table.
  Cost::rational eval(long long delta) const;

  std::string spec_string() const;

 private:
  CostFunction() = default;
  Kind kind_ = Kind::identity;
  Cost::rational a_ = 1, b_ = 0;          // affine / constant parameters
  std::vector<Cost::rational> values_;    // table: f(1..N)
  Tail tail_ = Tail::none;
  Cost::rational tail_value_ = 0;

  friend Cost::rational table_tail_value(const CostFunction& f);
};

// Non-negative and attains its minimum on every [C, inf). With the explicit
// tail forms this reduces to non-negativity checks.
bool is_user_optimizable(const CostFunction& f);

// User optimizable, non-decreasing, and sub-additive (f(a+b) <= f(a)+f(b)),
// checked over spans up to `horizon`.
bool is_user_friendly(const CostFunction& f, int horizon);

// f_inc[t] = min_{j >= t} f(j) for t in [1, horizon]; non-decreasing.
// Requires a user-optimizable f.
std::vector<Cost::rational> monotone_envelope(const CostFunction& f, int horizon);

struct ClosureTables {
  std::vector<Cost::rational> f_inc;    // index 1..horizon (index 0 unused)
  std::vector<Cost::rational> f_tilde;  // index 0..horizon, f_tilde[0] = 0
  std::vector<int> split;               // split[t] = first summand of an optimal
                                        // decomposition of t (smallest on ties)
  int horizon = 0;

  Cost::rational f_tilde_at(long long delta) const;
};

// Cheapest way to pay for a total span as a sum of envelope-priced pieces:
// f_tilde[t] = min_{1<=a<=t} (f_inc[a] + f_tilde[t-a]).
ClosureTables subadditive_closure(std::vector<Cost::rational> f_inc, int horizon);

ClosureTables build_closure_tables(const CostFunction& f, int horizon);

// Smallest d_m >= d with f(d_m) = f_inc(d).
int dm_lookup(const CostFunction& f, int d, int horizon);

// f_tilde as a plannable cost function (table over [1, horizon], constant tail).
CostFunction closure_as_cost_function(const ClosureTables& tables);

// Rewrites every backward jump of a travel costed with f_tilde into waits and
// jumps whose raw cost under f is exactly the f_tilde cost: a jump of span t
// is split via split[] and each piece of span d becomes wait-to (t-d+d_m),
// jump-to (t-d). Endpoints are preserved.
Travel expand_travel(const Travel& travel, const CostFunction& f, const ClosureTables& tables);

// CLI grammar: identity | affine:<a>,<b> | quadratic | constant:<c>
//            | table:<v1>,...[;tail=const:<c>|;tail=extend]
CostFunction parse_cost_spec(std::string_view spec);

}  // namespace chronoplan

#endif
