#include "chronoplan/cost.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace chronoplan {

std::string Cost::str() const {
  if (!finite_) return "inf";
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

namespace {

long long parse_ll(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed number");
  long long v = 0;
  bool neg = s[0] == '-';
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed number: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Cost parse_cost_value(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty cost value");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    long long num = parse_ll(text.substr(0, slash));
    long long den = parse_ll(text.substr(slash + 1));
    return Cost(Cost::rational(num, den));
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("malformed decimal: " + std::string(text));
    bool neg = !whole.empty() && whole[0] == '-';
    long long ip = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_ll(whole);
    long long fp = parse_ll(frac);
    if (fp < 0) throw std::invalid_argument("malformed decimal: " + std::string(text));
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Cost::rational r(std::llabs(ip), 1);
    r += Cost::rational(fp, den);
    if (neg || ip < 0) r = -r;
    return Cost(r);
  }
  return Cost(Cost::rational(parse_ll(text), 1));
}

}  // namespace chronoplan
