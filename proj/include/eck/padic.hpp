#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eck/bigint.hpp"
#include "eck/bounds.hpp"
#include "eck/power_series.hpp"

namespace eck {

// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
 public:
  Valuation(long v) : v_(v) {}  // NOLINT
  static Valuation infinity() {
    Valuation x(0);
    x.inf_ = true;
    return x;
  }

  bool is_infinite() const noexcept { return inf_; }
  long value() const;

  friend Valuation operator+(Valuation a, Valuation b) {
    if (a.inf_ || b.inf_) return infinity();
    return Valuation(a.v_ + b.v_);
  }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
    return a.v_ <=> b.v_;
  }
  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  long v_ = 0;
  bool inf_ = false;
};

Valuation vp(const BigInt& x, const BigInt& p);
Valuation vp(const Rational& x, const BigInt& p);
// v_p(n!) by Legendre's formula.
long vp_factorial(unsigned long n, const BigInt& p);

// f = sum c_i t^i = sum a_i t^i / i!, stored by its standard coefficients c_i.
class DividedSeries {
 public:
  DividedSeries(BigInt p, RationalSeries standard);
  static DividedSeries from_divided(BigInt p, const std::vector<Rational>& a);

  const BigInt& prime() const noexcept { return p_; }
  const RationalSeries& series() const noexcept { return c_; }
  std::size_t trunc() const noexcept { return c_.trunc(); }
  const Rational& standard(std::size_t i) const { return c_[i]; }
  Rational divided(std::size_t i) const;

 private:
  BigInt p_;
  RationalSeries c_;
};

bool is_pd_integral(const DividedSeries& f);
bool is_pd_unit(const DividedSeries& f);

struct NewtonVertex {
  std::size_t index;
  long valuation;
  friend bool operator==(const NewtonVertex&, const NewtonVertex&) = default;
};

// Lower convex hull of the points (i, v_p(c_i)), c_i != 0, with strictly
// increasing slopes.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;

  std::size_t first_index() const { return vertices.front().index; }
  // Root valuations of each segment with their multiplicities (lengths).
  std::vector<std::pair<Rational, std::size_t>> segments() const;
};

NewtonPolygon newton_polygon(const std::vector<Rational>& coeffs, const BigInt& p);
NewtonPolygon newton_polygon(const DividedSeries& f);

// Roots of valuation >= lambda: the first nonzero index plus the lengths of
// segments whose root valuation is at least lambda.
std::size_t count_zeros(const NewtonPolygon& polygon, const Rational& lambda);

// Zero count in the closed disc v(t) >= lambda for an analytic function
// known only to order M, where every dropped coefficient satisfies
// v(c_i) >= tail_shift - v_p(i!). Throws TruncationError unless the tail
// provably cannot move the answer.
std::size_t count_zeros_certified(const DividedSeries& f, const Rational& lambda,
                                  const Rational& tail_shift = 0);

// floor((1 + 1/((lambda - 1/(p-1)) log p)) * (N - 1)), rounded so that the
// result is a valid bound.
BigInt zero_bound_nice(unsigned long N, const LocalFieldData& field, const Rational& lambda,
                       mpfr_prec_t prec = kDefaultPrecision);

}  // namespace eck
