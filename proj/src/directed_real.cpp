#include "eck/directed_real.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "eck/error.hpp"

namespace eck {

Mpfr::Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(x_, other.precision());
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  *x_ = *other.x_;
  other.live_ = false;
}

Mpfr& Mpfr::operator=(Mpfr other) noexcept {
  std::swap(*x_, *other.x_);
  std::swap(live_, other.live_);
  return *this;
}

Mpfr::~Mpfr() {
  if (live_) mpfr_clear(x_);
}

Rational Mpfr::exact() const {
  if (!mpfr_number_p(x_)) throw DomainError("non-finite real");
  if (mpfr_zero_p(x_)) return 0;
  BigInt m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
  Rational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

namespace {

mpfr_prec_t prec_of(const Mpfr& a, const Mpfr& b) {
  return std::max(a.precision(), b.precision());
}

Mpfr from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Mpfr v(prec);
  mpfr_set_q(v.get(), q.get_mpq_t(), rnd);
  return v;
}

Mpfr log_of(const BigInt& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  if (x <= 0) throw DomainError("logarithm of a non-positive number");
  // Round the argument in the same direction as the result; log is increasing.
  Mpfr arg(prec + 64);
  mpfr_set_z(arg.get(), x.get_mpz_t(), rnd);
  Mpfr v(prec);
  mpfr_log(v.get(), arg.get(), rnd);
  return v;
}

}  // namespace

UpperBoundReal::UpperBoundReal(const Rational& q, mpfr_prec_t prec)
    : v_(from_rational(q, prec, MPFR_RNDU)) {}

UpperBoundReal UpperBoundReal::log(const BigInt& x, mpfr_prec_t prec) {
  return UpperBoundReal(log_of(x, prec, MPFR_RNDU));
}

BigInt UpperBoundReal::ceil() const { return ceil_times(1); }

BigInt UpperBoundReal::floor() const {
  const Rational q = exact();
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt UpperBoundReal::ceil_times(const BigInt& k) const {
  if (k < 0) throw DomainError("ceil_times needs a non-negative factor");
  const Rational q = exact() * k;
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

double UpperBoundReal::approx() const { return mpfr_get_d(v_.get(), MPFR_RNDU); }

std::string UpperBoundReal::str(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUg", digits, v_.get());
  return buf.data();
}

bool UpperBoundReal::is_nonnegative() const { return mpfr_sgn(v_.get()) >= 0; }

UpperBoundReal operator+(const UpperBoundReal& a, const UpperBoundReal& b) {
  Mpfr r(prec_of(a.v_, b.v_));
  mpfr_add(r.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
  return UpperBoundReal(std::move(r));
}

UpperBoundReal operator-(const UpperBoundReal& a, const LowerBoundReal& b) {
  Mpfr r(prec_of(a.v_, b.raw()));
  mpfr_sub(r.get(), a.v_.get(), b.raw().get(), MPFR_RNDU);
  return UpperBoundReal(std::move(r));
}

UpperBoundReal operator*(const UpperBoundReal& a, const UpperBoundReal& b) {
  if (!a.is_nonnegative() || !b.is_nonnegative()) {
    throw DomainError("upper-bound product needs non-negative factors");
  }
  Mpfr r(prec_of(a.v_, b.v_));
  mpfr_mul(r.get(), a.v_.get(), b.v_.get(), MPFR_RNDU);
  return UpperBoundReal(std::move(r));
}

UpperBoundReal operator/(const UpperBoundReal& a, const LowerBoundReal& b) {
  if (!a.is_nonnegative() || !b.is_positive()) {
    throw DomainError("upper-bound quotient needs a >= 0 and b > 0");
  }
  Mpfr r(prec_of(a.v_, b.raw()));
  mpfr_div(r.get(), a.v_.get(), b.raw().get(), MPFR_RNDU);
  return UpperBoundReal(std::move(r));
}

bool operator<(const UpperBoundReal& a, const Rational& q) {
  return mpfr_cmp_q(a.v_.get(), q.get_mpq_t()) < 0;
}

LowerBoundReal::LowerBoundReal(const Rational& q, mpfr_prec_t prec)
    : v_(from_rational(q, prec, MPFR_RNDD)) {}

LowerBoundReal LowerBoundReal::log(const BigInt& x, mpfr_prec_t prec) {
  return LowerBoundReal(log_of(x, prec, MPFR_RNDD));
}

BigInt LowerBoundReal::floor() const {
  const Rational q = exact();
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

double LowerBoundReal::approx() const { return mpfr_get_d(v_.get(), MPFR_RNDD); }

bool LowerBoundReal::is_positive() const { return mpfr_sgn(v_.get()) > 0; }

LowerBoundReal operator+(const LowerBoundReal& a, const LowerBoundReal& b) {
  Mpfr r(prec_of(a.v_, b.v_));
  mpfr_add(r.get(), a.v_.get(), b.v_.get(), MPFR_RNDD);
  return LowerBoundReal(std::move(r));
}

LowerBoundReal operator-(const LowerBoundReal& a, const UpperBoundReal& b) {
  Mpfr r(prec_of(a.v_, b.raw()));
  mpfr_sub(r.get(), a.v_.get(), b.raw().get(), MPFR_RNDD);
  return LowerBoundReal(std::move(r));
}

LowerBoundReal operator*(const LowerBoundReal& a, const LowerBoundReal& b) {
  if (mpfr_sgn(a.v_.get()) < 0 || mpfr_sgn(b.v_.get()) < 0) {
    throw DomainError("lower-bound product needs non-negative factors");
  }
  Mpfr r(prec_of(a.v_, b.v_));
  mpfr_mul(r.get(), a.v_.get(), b.v_.get(), MPFR_RNDD);
  return LowerBoundReal(std::move(r));
}

LowerBoundReal operator/(const LowerBoundReal& a, const UpperBoundReal& b) {
  if (mpfr_sgn(a.v_.get()) < 0 || mpfr_sgn(b.raw().get()) <= 0) {
    throw DomainError("lower-bound quotient needs a >= 0 and b > 0");
  }
  Mpfr r(prec_of(a.v_, b.raw()));
  mpfr_div(r.get(), a.v_.get(), b.raw().get(), MPFR_RNDD);
  return LowerBoundReal(std::move(r));
}

}  // namespace eck
