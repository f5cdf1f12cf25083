#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eck/bigint.hpp"
#include "eck/padic.hpp"
#include "eck/polynomial.hpp"
#include "eck/power_series.hpp"

namespace eck {

// Expansion of a function in t = z - a, exact to order trunc().
struct LocalExpansion {
  Rational base;
  RationalSeries series;

  std::size_t trunc() const noexcept { return series.trunc(); }
  friend bool operator==(const LocalExpansion&, const LocalExpansion&) = default;
};

LocalExpansion taylor_expand(const RationalFunction& f, const Rational& a, std::size_t M);

// sum g_i (d/dz)^i together with the unit w of the derivation w*d/dz.
class DiffOp {
 public:
  // Trailing zero coefficients are dropped; the zero operator is rejected.
  explicit DiffOp(std::vector<RationalFunction> coeffs, RationalFunction unit = default_unit());

  // z - z^2
  static RationalFunction default_unit();
  static DiffOp identity(RationalFunction unit = default_unit());
  static DiffOp multiplication(RationalFunction g, RationalFunction unit = default_unit());
  // w * d/dz
  static DiffOp derivation(RationalFunction unit = default_unit());
  // (w * d/dz)^n in d/dz normal form.
  static DiffOp derivation_power(std::size_t n, RationalFunction unit = default_unit());

  std::size_t order() const noexcept { return g_.size() - 1; }
  const RationalFunction& coeff(std::size_t i) const { return g_.at(i); }
  const std::vector<RationalFunction>& coeffs() const noexcept { return g_; }
  const RationalFunction& unit() const noexcept { return w_; }

  DiffOp left_multiply(const RationalFunction& h) const;
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  // "(g_0) + (g_1)*d/dz + (g_2)*d^2/dz^2 + ...", zero terms omitted.
  std::string str() const;
  static DiffOp parse(std::string_view text, RationalFunction unit = default_unit());

 private:
  std::vector<RationalFunction> g_;
  RationalFunction w_;
};

// a o b
DiffOp compose(const DiffOp& a, const DiffOp& b);

// Result has truncation M - N.
LocalExpansion apply(const DiffOp& op, const LocalExpansion& f);
// Exact action on a rational function.
RationalFunction apply(const DiffOp& op, const RationalFunction& f);

// Coefficients in the basis (w d/dz)^i, recovered from the normal form.
std::vector<RationalFunction> unit_basis_coeffs(const DiffOp& op);

enum class PdCheck { raw, normalized };

// Every g_i expanded at a to depth M is PD-integral and g_N is a PD-unit;
// with PdCheck::normalized the g_i are first divided by g_N.
bool is_pd_nice(const DiffOp& op, const Rational& a, const BigInt& p, std::size_t M,
                PdCheck mode = PdCheck::normalized);

// The unique solution of op(f) = 0 with divided coefficients a_0..a_{N-1}
// given by initial, to depth M in divided powers of t = z - a.
DividedSeries pd_primitives_solve(const DiffOp& op, const Rational& a, const BigInt& p,
                                  const std::vector<Rational>& initial, std::size_t M);

// (z-z^2)^(2^m) d^(2^m)/dz^(2^m) o ... o (z-z^2) d/dz
DiffOp explicit_line_operator(unsigned m);

}  // namespace eck
