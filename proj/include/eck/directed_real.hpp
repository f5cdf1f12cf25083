#pragma once

#include <mpfr.h>

#include <string>

#include "eck/bigint.hpp"

namespace eck {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

// Owning MPFR value.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(Mpfr other) noexcept;
  ~Mpfr();

  mpfr_ptr get() noexcept { return x_; }
  mpfr_srcptr get() const noexcept { return x_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  // Exact value of the stored binary number.
  Rational exact() const;

 private:
  mpfr_t x_;
  bool live_ = true;
};

class LowerBoundReal;

// A real number stored as a binary float that is never below the true value.
class UpperBoundReal {
 public:
  explicit UpperBoundReal(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);
  static UpperBoundReal log(const BigInt& x, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return v_.precision(); }
  const Mpfr& raw() const { return v_; }
  Rational exact() const { return v_.exact(); }
  BigInt ceil() const;
  BigInt floor() const;
  // ceil(value * k) evaluated exactly; k >= 0.
  BigInt ceil_times(const BigInt& k) const;
  double approx() const;
  std::string str(int digits = 20) const;
  bool is_nonnegative() const;

  friend UpperBoundReal operator+(const UpperBoundReal& a, const UpperBoundReal& b);
  friend UpperBoundReal operator-(const UpperBoundReal& a, const LowerBoundReal& b);
  // Both factors must be non-negative.
  friend UpperBoundReal operator*(const UpperBoundReal& a, const UpperBoundReal& b);
  // Numerator non-negative, denominator positive.
  friend UpperBoundReal operator/(const UpperBoundReal& a, const LowerBoundReal& b);

  friend bool operator<(const UpperBoundReal& a, const Rational& q);

 private:
  friend class LowerBoundReal;
  explicit UpperBoundReal(Mpfr v) : v_(std::move(v)) {}
  Mpfr v_;
};

// A real number stored as a binary float that is never above the true value.
class LowerBoundReal {
 public:
  explicit LowerBoundReal(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);
  static LowerBoundReal log(const BigInt& x, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return v_.precision(); }
  const Mpfr& raw() const { return v_; }
  Rational exact() const { return v_.exact(); }
  BigInt floor() const;
  double approx() const;
  bool is_positive() const;

  friend LowerBoundReal operator+(const LowerBoundReal& a, const LowerBoundReal& b);
  friend LowerBoundReal operator-(const LowerBoundReal& a, const UpperBoundReal& b);
  friend LowerBoundReal operator*(const LowerBoundReal& a, const LowerBoundReal& b);
  friend LowerBoundReal operator/(const LowerBoundReal& a, const UpperBoundReal& b);

 private:
  friend class UpperBoundReal;
  explicit LowerBoundReal(Mpfr v) : v_(std::move(v)) {}
  Mpfr v_;
};

}  // namespace eck
