#include "eck/padic.hpp"

#include <algorithm>
#include <optional>

#include "eck/error.hpp"

namespace eck {

long Valuation::value() const {
  if (inf_) throw DomainError("valuation of zero is infinite");
  return v_;
}

Valuation vp(const BigInt& x, const BigInt& p) {
  if (p < 2) throw DomainError("valuation needs a prime");
  if (x == 0) return Valuation::infinity();
  BigInt rest;
  return Valuation(static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t())));
}

Valuation vp(const Rational& x, const BigInt& p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(vp(x.get_num(), p).value() - vp(x.get_den(), p).value());
}

long vp_factorial(unsigned long n, const BigInt& p) {
  long v = 0;
  BigInt q = n;
  while (q > 0) {
    q /= p;
    v += q.get_si();
  }
  return v;
}

DividedSeries::DividedSeries(BigInt p, RationalSeries standard)
    : p_(std::move(p)), c_(std::move(standard)) {
  if (!is_prime(p_)) throw DomainError(to_string(p_) + " is not prime");
}

DividedSeries DividedSeries::from_divided(BigInt p, const std::vector<Rational>& a) {
  std::vector<Rational> c(a.size());
  BigInt fact = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) fact *= static_cast<unsigned long>(i);
    c[i] = a[i] / fact;
  }
  return DividedSeries(std::move(p), RationalSeries(std::move(c)));
}

Rational DividedSeries::divided(std::size_t i) const { return c_[i] * factorial(i); }

bool is_pd_integral(const DividedSeries& f) {
  for (std::size_t i = 0; i <= f.trunc(); ++i) {
    const Valuation v = vp(f.standard(i), f.prime());
    if (!v.is_infinite() && v.value() + vp_factorial(i, f.prime()) < 0) return false;
  }
  return true;
}

bool is_pd_unit(const DividedSeries& f) {
  return is_pd_integral(f) && vp(f.standard(0), f.prime()) == Valuation(0);
}

std::vector<std::pair<Rational, std::size_t>> NewtonPolygon::segments() const {
  std::vector<std::pair<Rational, std::size_t>> out;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const auto& a = vertices[k];
    const auto& b = vertices[k + 1];
    const std::size_t len = b.index - a.index;
    out.emplace_back(Rational(a.valuation - b.valuation, static_cast<long>(len)), len);
    out.back().first.canonicalize();
  }
  return out;
}

NewtonPolygon newton_polygon(const std::vector<Rational>& coeffs, const BigInt& p) {
  std::vector<NewtonVertex> hull;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const NewtonVertex pt{i, vp(coeffs[i], p).value()};
    // Drop the last vertex while it lies on or above the chord to pt.
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const long double_cross =
          (b.valuation - a.valuation) * static_cast<long>(pt.index - a.index) -
          (pt.valuation - a.valuation) * static_cast<long>(b.index - a.index);
      if (double_cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  if (hull.empty()) throw DomainError("Newton polygon of the zero series");
  return NewtonPolygon{std::move(hull)};
}

NewtonPolygon newton_polygon(const DividedSeries& f) {
  return newton_polygon(f.series().coeffs(), f.prime());
}

std::size_t count_zeros(const NewtonPolygon& polygon, const Rational& lambda) {
  std::size_t n = polygon.first_index();
  for (const auto& [val, len] : polygon.segments()) {
    if (val >= lambda) n += len;
  }
  return n;
}

std::size_t count_zeros_certified(const DividedSeries& f, const Rational& lambda,
                                  const Rational& tail_shift) {
  const BigInt& p = f.prime();
  const Rational inv = Rational(1) / Rational(p - 1);
  if (lambda <= inv) {
    throw TruncationError("zero counts need lambda > 1/(p-1) to control the tail");
  }
  // The count is the largest index minimising v(c_i) + lambda i.
  std::optional<Rational> best;
  std::size_t arg = 0;
  for (std::size_t i = 0; i <= f.trunc(); ++i) {
    const Valuation v = vp(f.standard(i), p);
    if (v.is_infinite()) continue;
    const Rational w = Rational(v.value()) + lambda * static_cast<unsigned long>(i);
    if (!best || w <= *best) {
      best = w;
      arg = i;
    }
  }
  if (!best) throw TruncationError("all retained coefficients vanish");
  // For i > M, v(c_i) + lambda i >= shift - (i-1)/(p-1) + lambda i, which
  // increases with i; it is enough to beat the minimum at i = M + 1.
  const unsigned long M = f.trunc();
  const Rational tail = tail_shift - inv * M + lambda * (M + 1);
  if (!(tail > *best)) {
    throw TruncationError("uncertified truncation: the dropped tail could add zeros");
  }
  return arg;
}

BigInt zero_bound_nice(unsigned long N, const LocalFieldData& field, const Rational& lambda,
                       mpfr_prec_t prec) {
  if (!is_prime(field.p)) throw DomainError(to_string(field.p) + " is not prime");
  const Rational inv = Rational(1) / Rational(field.p - 1);
  if (lambda <= inv) throw DomainError("need lambda > 1/(p-1)");
  if (N == 0) throw DomainError("operator order must be >= 1");
  const LowerBoundReal gap = LowerBoundReal(lambda, prec) - UpperBoundReal(inv, prec);
  if (!gap.is_positive()) throw VerificationError("lambda - 1/(p-1) rounded to zero");
  const UpperBoundReal factor =
      UpperBoundReal(Rational(1), prec) +
      UpperBoundReal(Rational(1), prec) / (gap * LowerBoundReal::log(field.p, prec));
  return (factor * UpperBoundReal(Rational(N - 1), prec)).floor();
}

}  // namespace eck
