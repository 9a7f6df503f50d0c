#include "chronoplan/cost_model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chronoplan/travel.hpp"

namespace chronoplan {

CostFunction CostFunction::identity() {
  CostFunction f;
  f.kind_ = Kind::identity;
  return f;
}

CostFunction CostFunction::affine(Cost::rational a, Cost::rational b) {
  CostFunction f;
  f.kind_ = Kind::affine;
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  return f;
}

CostFunction CostFunction::quadratic() {
  CostFunction f;
  f.kind_ = Kind::quadratic;
  return f;
}

CostFunction CostFunction::constant(Cost::rational c) {
  CostFunction f;
  f.kind_ = Kind::constant;
  f.a_ = 0;
  f.b_ = std::move(c);
  return f;
}

CostFunction CostFunction::table(std::vector<Cost::rational> values, Tail tail,
                                 Cost::rational tail_value) {
  if (values.empty()) throw std::invalid_argument("empty cost table");
  CostFunction f;
  f.kind_ = Kind::table;
  f.values_ = std::move(values);
  f.tail_ = tail;
  f.tail_value_ = std::move(tail_value);
  return f;
}

Cost::rational table_tail_value(const CostFunction& f) {
  switch (f.tail_) {
    case CostFunction::Tail::constant:
      return f.tail_value_;
    case CostFunction::Tail::extend:
      return f.values_.back();
    case CostFunction::Tail::none:
      throw std::domain_error("cost table has no tail descriptor");
  }
  throw std::logic_error("unreachable");
}

Cost::rational CostFunction::eval(long long delta) const {
  if (delta <= 0) return 0;
  switch (kind_) {
    case Kind::identity:
      return Cost::rational(delta);
    case Kind::affine:
      return a_ * Cost::rational(delta) + b_;
    case Kind::quadratic:
      return Cost::rational(delta) * Cost::rational(delta);
    case Kind::constant:
      return b_;
    case Kind::table:
      if (delta <= static_cast<long long>(values_.size())) return values_[delta - 1];
      return table_tail_value(*this);
  }
  throw std::logic_error("unreachable");
}

std::string CostFunction::spec_string() const {
  auto rat = [](const Cost::rational& r) { return Cost(r).str(); };
  switch (kind_) {
    case Kind::identity:
      return "identity";
    case Kind::quadratic:
      return "quadratic";
    case Kind::constant:
      return "constant:" + rat(b_);
    case Kind::affine:
      return "affine:" + rat(a_) + "," + rat(b_);
    case Kind::table: {
      std::string out = "table:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += rat(values_[i]);
      }
      if (tail_ == Tail::constant) out += ";tail=const:" + rat(tail_value_);
      if (tail_ == Tail::extend) out += ";tail=extend";
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_user_optimizable(const CostFunction& f) {
  switch (f.kind()) {
    case CostFunction::Kind::identity:
    case CostFunction::Kind::quadratic:
      return true;
    case CostFunction::Kind::constant:
      return f.eval(1) >= 0;
    case CostFunction::Kind::affine:
      // Slope below zero eventually drops the function under zero.
      return f.eval(2) - f.eval(1) >= 0 && f.eval(1) >= 0;
    case CostFunction::Kind::table: {
      if (f.tail() == CostFunction::Tail::none) return false;  // minima not computable
      for (const auto& v : f.values()) {
        if (v < 0) return false;
      }
      return table_tail_value(f) >= 0;
    }
  }
  throw std::logic_error("unreachable");
}

bool is_user_friendly(const CostFunction& f, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (!is_user_optimizable(f)) return false;
  switch (f.kind()) {
    case CostFunction::Kind::identity:
    case CostFunction::Kind::constant:
      return true;
    case CostFunction::Kind::affine:
      // Non-decreasing and sub-additive iff both coefficients are >= 0; UO
      // already pinned the slope, so only the offset remains.
      return f.eval(1) - (f.eval(2) - f.eval(1)) >= 0;
    case CostFunction::Kind::quadratic:
      return horizon < 2;  // f(2) = 4 > f(1) + f(1)
    case CostFunction::Kind::table: {
      // Values are constant past the table end, so spans clamp there.
      int clamp = std::min<long long>(horizon, static_cast<long long>(f.values().size()) + 1);
      for (int t = 1; t < clamp; ++t) {
        if (f.eval(t) > f.eval(t + 1)) return false;
      }
      for (int a = 1; a <= clamp; ++a) {
        for (int b = a; b <= clamp && a + b <= horizon; ++b) {
          if (f.eval(std::min<long long>(a + b, clamp)) > f.eval(a) + f.eval(b)) return false;
        }
      }
      return true;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Minimum of f over (horizon, inf), using the tail/shape descriptors.
Cost::rational suffix_min_beyond(const CostFunction& f, int horizon) {
  switch (f.kind()) {
    case CostFunction::Kind::identity:
    case CostFunction::Kind::quadratic:
    case CostFunction::Kind::affine:
      // Non-decreasing past horizon for every user-optimizable shape.
      return f.eval(horizon + 1);
    case CostFunction::Kind::constant:
      return f.eval(1);
    case CostFunction::Kind::table: {
      Cost::rational m = table_tail_value(f);
      for (long long j = horizon + 1; j <= static_cast<long long>(f.values().size()); ++j) {
        m = std::min(m, f.eval(j));
      }
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::vector<Cost::rational> monotone_envelope(const CostFunction& f, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (!is_user_optimizable(f)) throw std::invalid_argument("cost function is not user-optimizable");
  std::vector<Cost::rational> f_inc(horizon + 1, 0);
  Cost::rational running = suffix_min_beyond(f, horizon);
  for (int t = horizon; t >= 1; --t) {
    running = std::min(running, f.eval(t));
    f_inc[t] = running;
  }
  return f_inc;
}

ClosureTables subadditive_closure(std::vector<Cost::rational> f_inc, int horizon) {
  if (static_cast<int>(f_inc.size()) != horizon + 1)
    throw std::invalid_argument("envelope does not cover the horizon");
  ClosureTables tables;
  tables.horizon = horizon;
  tables.f_inc = std::move(f_inc);
  tables.f_tilde.assign(horizon + 1, 0);
  tables.split.assign(horizon + 1, 0);
  for (int t = 1; t <= horizon; ++t) {
    Cost::rational best = tables.f_inc[1] + tables.f_tilde[t - 1];
    int best_a = 1;
    for (int a = 2; a <= t; ++a) {
      Cost::rational candidate = tables.f_inc[a] + tables.f_tilde[t - a];
      if (candidate < best) {
        best = candidate;
        best_a = a;
      }
    }
    tables.f_tilde[t] = best;
    tables.split[t] = best_a;
  }
  return tables;
}

ClosureTables build_closure_tables(const CostFunction& f, int horizon) {
  return subadditive_closure(monotone_envelope(f, horizon), horizon);
}

Cost::rational ClosureTables::f_tilde_at(long long delta) const {
  if (delta <= 0) return 0;
  if (delta > horizon) throw std::domain_error("span beyond closure horizon");
  return f_tilde[delta];
}

int dm_lookup(const CostFunction& f, int d, int horizon) {
  if (d < 1) throw std::invalid_argument("span must be positive");
  if (!is_user_optimizable(f)) throw std::invalid_argument("cost function is not user-optimizable");
  Cost::rational target = monotone_envelope(f, std::max(horizon, d))[d];
  long long scan_end = d;
  if (f.kind() == CostFunction::Kind::table)
    scan_end = std::max<long long>(d, static_cast<long long>(f.values().size()) + 1);
  for (long long j = d; j <= scan_end; ++j) {
    if (f.eval(j) == target) return static_cast<int>(j);
  }
  throw std::logic_error("envelope minimum not attained");  // UO rules this out
}

CostFunction closure_as_cost_function(const ClosureTables& tables) {
  std::vector<Cost::rational> values(tables.f_tilde.begin() + 1, tables.f_tilde.end());
  return CostFunction::table(std::move(values), CostFunction::Tail::constant,
                             tables.f_tilde[tables.horizon]);
}

Travel expand_travel(const Travel& travel, const CostFunction& f, const ClosureTables& tables) {
  std::vector<Step> out;
  auto push = [&out](Step s) {
    if (out.empty() || !(out.back() == s)) out.push_back(s);
  };
  const auto& steps = travel.steps();
  push(steps.front());
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const Step& a = steps[i];
    const Step& b = steps[i + 1];
    long long span = static_cast<long long>(a.time) - b.time;
    if (a.node != b.node || span <= 0) {
      push(b);
      continue;
    }
    if (span > tables.horizon) throw std::domain_error("jump span beyond closure horizon");
    int s = static_cast<int>(span);
    if (f.eval(s) == tables.f_tilde[s] && dm_lookup(f, s, tables.horizon) == s) {
      push(b);  // the direct jump already pays the closure price
      continue;
    }
    int cur = a.time;
    while (s > 0) {
      int piece = tables.split[s];
      int dm = dm_lookup(f, piece, tables.horizon);
      push({a.node, cur - piece + dm});
      cur -= piece;
      push({a.node, cur});
      s -= piece;
    }
  }
  return Travel(std::move(out));
}

CostFunction parse_cost_spec(std::string_view spec) {
  auto rat = [](std::string_view s) {
    Cost c = parse_cost_value(s);
    return c.value();
  };
  if (spec == "identity") return CostFunction::identity();
  if (spec == "quadratic") return CostFunction::quadratic();
  if (spec.rfind("constant:", 0) == 0) return CostFunction::constant(rat(spec.substr(9)));
  if (spec.rfind("affine:", 0) == 0) {
    std::string_view args = spec.substr(7);
    auto comma = args.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("affine needs two comma-separated values");
    return CostFunction::affine(rat(args.substr(0, comma)), rat(args.substr(comma + 1)));
  }
  if (spec.rfind("table:", 0) == 0) {
    std::string_view rest = spec.substr(6);
    std::string_view values_part = rest;
    CostFunction::Tail tail = CostFunction::Tail::none;
    Cost::rational tail_value = 0;
    auto semi = rest.find(';');
    if (semi != std::string_view::npos) {
      values_part = rest.substr(0, semi);
      std::string_view tail_part = rest.substr(semi + 1);
      if (tail_part == "tail=extend") {
        tail = CostFunction::Tail::extend;
      } else if (tail_part.rfind("tail=const:", 0) == 0) {
        tail = CostFunction::Tail::constant;
        tail_value = rat(tail_part.substr(11));
      } else {
        throw std::invalid_argument("bad tail descriptor: " + std::string(tail_part));
      }
    }
    std::vector<Cost::rational> values;
    std::size_t start = 0;
    while (start <= values_part.size()) {
      auto comma = values_part.find(',', start);
      auto piece = values_part.substr(
          start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      values.push_back(rat(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return CostFunction::table(std::move(values), tail, std::move(tail_value));
  }
  throw std::invalid_argument("unknown cost spec: " + std::string(spec));
}

}  // namespace chronoplan
