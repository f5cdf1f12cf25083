#pragma once

#include <compare>
#include <map>
#include <string>

#include "eck/bigint.hpp"
#include "eck/diffop.hpp"
#include "eck/polynomial.hpp"

namespace eck {

// A rational point, the point at infinity, or the set of roots of a monic
// squarefree polynomial without rational roots.
class P1Point {
 public:
  enum class Kind { finite, cluster, infinity };

  P1Point(const Rational& x) : kind_(Kind::finite), value_(x) {}  // NOLINT
  static P1Point infinity() { return P1Point(Kind::infinity); }
  static P1Point cluster(const Polynomial& roots_of);

  Kind kind() const noexcept { return kind_; }
  const Rational& value() const noexcept { return value_; }
  const Polynomial& minpoly() const noexcept { return poly_; }
  // Number of geometric points represented.
  long weight() const noexcept { return kind_ == Kind::cluster ? poly_.degree() : 1; }

  friend bool operator==(const P1Point& a, const P1Point& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const P1Point& a, const P1Point& b);
  std::string str() const;

 private:
  explicit P1Point(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
  Polynomial poly_;
};

class P1Divisor {
 public:
  P1Divisor() = default;
  P1Divisor(const P1Point& x, long k) { add(x, k); }

  void add(const P1Point& x, long k);
  long at(const P1Point& x) const;
  const std::map<P1Point, long>& support() const noexcept { return m_; }
  long degree() const;
  bool is_effective() const;

  friend P1Divisor operator+(const P1Divisor& a, const P1Divisor& b);
  friend P1Divisor operator-(const P1Divisor& a, const P1Divisor& b);
  friend P1Divisor operator*(long k, const P1Divisor& a);
  friend bool operator==(const P1Divisor&, const P1Divisor&) = default;
  // Pointwise comparison a - b effective.
  friend bool operator>=(const P1Divisor& a, const P1Divisor& b) { return (a - b).is_effective(); }

  // e.g. "[0] + [1] - 2[inf]", "0" when empty.
  std::string str() const;

 private:
  std::map<P1Point, long> m_;
};

P1Divisor pointwise_min(const P1Divisor& a, const P1Divisor& b);

P1Divisor divisor_of(const RationalFunction& f);

// min over i of (div(h_i) - i*omega_plus) and 0, where h_i are the
// coefficients in powers of w*d/dz. Throws if some h_i has a pole outside
// the support of omega_plus.
P1Divisor div_of_op(const DiffOp& op, const P1Divisor& omega_plus);

}  // namespace eck
