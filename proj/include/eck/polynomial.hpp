#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eck/bigint.hpp"
#include "eck/power_series.hpp"

namespace eck {

// Dense univariate polynomial over Q, low degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial z() { return monomial(1, 1); }
  static Polynomial monomial(const Rational& c, std::size_t k);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Quotient and remainder; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  // Exact quotient; throws if b does not divide a.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

  Polynomial derivative() const;
  Polynomial monic() const;
  Rational eval(const Rational& x) const;
  // p(a + t) as a polynomial in t.
  Polynomial shift(const Rational& a) const;
  // p(z)^k
  Polynomial pow(unsigned long k) const;

  // Canonical text, highest degree first, e.g. "-z^2 + 1/2*z - 3".
  std::string str(std::string_view var = "z") const;
  static Polynomial parse(std::string_view text, std::string_view var = "z");

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Squarefree decomposition: pairs (f_k, k) with a = lc * prod f_k^k, each
// f_k monic squarefree and pairwise coprime.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& a);

// Rational roots of a polynomial, each listed once.
std::vector<Rational> rational_roots(const Polynomial& a);

// num/den in lowest terms with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  RationalFunction derivative() const;
  Rational eval(const Rational& x) const;
  bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0; }

  // "(num)" or "(num)/(den)"
  std::string str(std::string_view var = "z") const;

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

// Series of f(a + t) to order M; throws DomainError at a pole.
RationalSeries taylor_series(const RationalFunction& f, const Rational& a, std::size_t M);

// Multiplies two rational series through one integer product.
RationalSeries multiply_rational(const RationalSeries& f, const RationalSeries& g);

// Splits f into an integer vector and a common positive denominator.
std::pair<std::vector<BigInt>, BigInt> to_integer_vector(const std::vector<Rational>& f);

}  // namespace eck
