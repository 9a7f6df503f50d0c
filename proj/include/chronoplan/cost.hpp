#ifndef CHRONOPLAN_COST_HPP
#define CHRONOPLAN_COST_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chronoplan {

// Exact rational arithmetic for backward costs. A hand-rolled type: the
// system boost::rational (1.74) recurses infinitely under C++20 operator
// rewriting. Values stay tiny (sums of per-jump prices), so long long
// components with 128-bit intermediates are plenty.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    normalize();
  }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;

  static Rational from_checked(i128 n, i128 d) {
    i128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
    if (g == 0) g = 1;
    n /= g;
    d /= g;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    constexpr i128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

// A non-negative rational cost, or the distinguished "infeasible" value that
// sorts above every finite cost. All planner and oracle comparisons are
// exact, so results match to zero tolerance.
class Cost {
 public:
  using rational = Rational;

  Cost() : finite_(true), value_(0) {}
  Cost(long long v) : finite_(true), value_(v) {}  // NOLINT: implicit by design
  Cost(rational v) : finite_(true), value_(v) {}

  static Cost infinity() {
    Cost c;
    c.finite_ = false;
    return c;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const rational& value() const { return value_; }

  Cost operator+(const Cost& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return Cost(value_ + o.value_);
  }
  Cost& operator+=(const Cost& o) {
    *this = *this + o;
    return *this;
  }

  bool operator==(const Cost& o) const {
    if (finite_ != o.finite_) return false;
    return !finite_ || value_ == o.value_;
  }
  bool operator!=(const Cost& o) const { return !(*this == o); }
  bool operator<(const Cost& o) const {
    if (!finite_) return false;   // inf < x never
    if (!o.finite_) return true;  // finite < inf
    return value_ < o.value_;
  }
  bool operator<=(const Cost& o) const { return *this < o || *this == o; }
  bool operator>(const Cost& o) const { return o < *this; }
  bool operator>=(const Cost& o) const { return o <= *this; }

  // "inf", an integer, or "p/q".
  std::string str() const;

 private:
  bool finite_;
  rational value_;
};

// Parses "3", "-2", "0.25" or "3/4" into an exact rational cost.
// Throws std::invalid_argument on malformed input.
Cost parse_cost_value(std::string_view text);

}  // namespace chronoplan

#endif
