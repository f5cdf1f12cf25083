#include "eck/bounds.hpp"

#include "eck/error.hpp"
#include "eck/power_series.hpp"
#include "eck/selmer_dims.hpp"

namespace eck {
namespace {

void check_field(const LocalFieldData& field) {
  if (!is_prime(field.p)) throw DomainError("p = " + to_string(field.p) + " is not prime");
  if (field.e < 1 || field.f < 1) throw DomainError("e and f must be >= 1");
}

BigInt product(const std::vector<BigInt>& xs) {
  BigInt r = 1;
  for (const auto& x : xs) r *= x;
  return r;
}

void check_positive(const std::vector<BigInt>& xs, const char* what) {
  for (const auto& x : xs) {
    if (x <= 0) throw DomainError(std::string(what) + " must be positive");
  }
}

bool preceq_coefficientwise(const IntSeries& a, const IntSeries& b) {
  for (std::size_t i = 0; i <= std::min(a.trunc(), b.trunc()); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

BigInt c_product(unsigned long m, const std::vector<BigInt>& c) {
  if (m < 1) throw DomainError("weight m must be >= 1");
  if (c.size() + 1 < m) throw DomainError("need c_1 .. c_{m-1}");
  BigInt r = 1;
  for (unsigned long i = 0; i + 1 < m; ++i) {
    if (c[i] < 0) throw DomainError("local coefficients must be non-negative");
    r *= c[i] + 1;
  }
  return r;
}

BoundResult finish(BigInt factor, UpperBoundReal k) {
  BigInt bound = k.ceil_times(factor);
  return {std::move(factor), std::move(k), std::move(bound)};
}

}  // namespace

unsigned long theta(const LocalFieldData& field) {
  check_field(field);
  const BigInt num = BigInt(field.e) + 1;
  const BigInt den = field.p - 1;
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_ui();
}

UpperBoundReal kappa(const LocalFieldData& field, mpfr_prec_t prec) {
  const unsigned long th = theta(field);
  const BigInt pm1 = field.p - 1;
  const UpperBoundReal e_over = UpperBoundReal(Rational(BigInt(field.e), pm1) , prec);
  const LowerBoundReal gap = LowerBoundReal(Rational(th), prec) - e_over;
  if (!gap.is_positive()) throw VerificationError("theta - e/(p-1) is not positive");
  const LowerBoundReal den = gap * LowerBoundReal::log(field.p, prec);
  const UpperBoundReal frac = UpperBoundReal(Rational(field.e), prec) / den;
  const UpperBoundReal scale(Rational(pow(field.p, (th - 1) * field.f)), prec);
  return (UpperBoundReal(Rational(1), prec) + frac) * scale;
}

BoundResult bound_main(const CurveBoundInput& in, mpfr_prec_t prec) {
  if (in.r != 0 || in.s != 0 || !in.n_ell_in_S.empty()) {
    throw DomainError("bound_main is the r = 0, s = 0 case; use bound_refined");
  }
  if (in.g < 2) throw DomainError("bound_main needs g >= 2");
  check_positive(in.n_ell_out_S, "component counts");
  if (in.points_mod_p <= 0) throw DomainError("#X(F_p) must be positive");
  BigInt factor = product(in.n_ell_out_S) * in.points_mod_p *
                  pow(BigInt(4 * in.g - 2), in.m) * c_product(in.m, in.c_loc);
  return finish(std::move(factor), kappa({in.p, 1, 1}, prec));
}

BoundResult bound_refined(const CurveBoundInput& in, mpfr_prec_t prec) {
  if (in.n_ell_in_S.size() != in.s) throw DomainError("s must equal the number of n_l in S");
  const BigInt base = weight_base_default(in.g, in.r);
  check_positive(in.n_ell_in_S, "component counts");
  check_positive(in.n_ell_out_S, "component counts");
  if (in.points_mod_p <= 0) throw DomainError("#Y(F_p) must be positive");
  BigInt factor = 1;
  for (const auto& n : in.n_ell_in_S) factor *= n + in.r;
  factor *= product(in.n_ell_out_S) * in.points_mod_p * pow(base, in.m) *
            c_product(in.m, in.c_loc);
  return finish(std::move(factor), kappa({in.p, 1, 1}, prec));
}

BoundResult bound_weight(const LocalFieldData& field, const BigInt& points_special,
                         unsigned long m, const std::vector<BigInt>& c, const BigInt& base,
                         mpfr_prec_t prec) {
  if (base <= 0) throw DomainError("base must be positive");
  if (points_special < 0) throw DomainError("point count must be non-negative");
  BigInt factor = points_special * pow(base, m) * c_product(m, c);
  return finish(std::move(factor), kappa(field, prec));
}

BigInt weight_base_default(unsigned long g, unsigned long r) {
  const long base = 4 * static_cast<long>(g) + 2 * static_cast<long>(r) - 2;
  if (base <= 0) throw DomainError("curve is not hyperbolic");
  return base;
}

BigInt weight_base_small(unsigned long g, unsigned long r, unsigned long N) {
  return BigInt(2 * g + r + N);
}

unsigned long n_small(unsigned long g, unsigned long r, const BigInt& p, CurveClass cls) {
  switch (cls) {
    case CurveClass::genus0:
      if (g != 0) throw DomainError("genus0 class needs g = 0");
      return 0;
    case CurveClass::genus1:
      if (g != 1) throw DomainError("genus1 class needs g = 1");
      return 0;
    case CurveClass::hyperelliptic:
    case CurveClass::general:
      break;
  }
  if (g < 2) throw DomainError("class needs g >= 2");
  unsigned long best = 2 * g + r - 2;
  best = std::min(best, 2 * g - 3);
  if (cls == CurveClass::hyperelliptic) best = std::min(best, 1ul);
  if (p > BigInt(2 * g - 2)) best = std::min(best, g + 1);
  return best;
}

BigInt digits_of_power(const BigInt& base, const BigInt& exponent, mpfr_prec_t prec) {
  if (base < 1 || exponent < 0) throw DomainError("digits_of_power needs base >= 1, exponent >= 0");
  if (base == 1 || exponent == 0) return 1;
  // Powers of ten have an exact digit count; otherwise exponent*log10(base)
  // is irrational and a fine enough bracket separates its floor.
  BigInt b = base;
  unsigned long tens = 0;
  while (b % 10 == 0) {
    b /= 10;
    ++tens;
  }
  if (b == 1) return exponent * tens + 1;
  for (mpfr_prec_t pr = prec; pr <= (1 << 20); pr *= 2) {
    const mpfr_prec_t work = pr + static_cast<mpfr_prec_t>(mpz_sizeinbase(exponent.get_mpz_t(), 2));
    const LowerBoundReal lo = LowerBoundReal(Rational(exponent), work) *
                              (LowerBoundReal::log(base, work) / UpperBoundReal::log(10, work));
    const UpperBoundReal hi = UpperBoundReal(Rational(exponent), work) *
                              (UpperBoundReal::log(base, work) / LowerBoundReal::log(10, work));
    const BigInt flo = lo.floor();
    if (flo == hi.floor()) return flo + 1;
  }
  throw VerificationError("could not separate the digit count");
}

CoarseBound bound_coarse(unsigned long g, unsigned long n, const BigInt& n_ell_product,
                         const BigInt& points_mod_p, const LocalFieldData& field,
                         const CoarseOptions& opts) {
  if (g < 2) throw DomainError("coarse bound needs g >= 2");
  if (n < 2) throw DomainError("coarse bound needs n >= 2");
  if (n_ell_product <= 0 || points_mod_p <= 0) throw DomainError("counts must be positive");
  const BigInt inner = pow(BigInt(2 * g), n);
  if (!inner.fits_ulong_p()) throw DomainError("exponent (2g)^n too large");
  CoarseBound out{.m = pow(BigInt(n), inner.get_ui()),
                  .binomial_exponent = 0,
                  .digits_first = 0,
                  .digits_second = 0,
                  .digits_upper = 0,
                  .kappa = kappa(field, opts.prec),
                  .value = std::nullopt};
  out.binomial_exponent = out.m * (out.m - 1) / 2;
  const BigInt a = 4 * BigInt(g) - 2;
  const BigInt b = 2 * BigInt(g);
  out.digits_first = digits_of_power(a, out.m, opts.prec);
  out.digits_second = digits_of_power(b, out.binomial_exponent, opts.prec);

  // log10 of the whole bound, rounded up.
  const mpfr_prec_t work = opts.prec +
      static_cast<mpfr_prec_t>(mpz_sizeinbase(out.binomial_exponent.get_mpz_t(), 2));
  const LowerBoundReal log10 = LowerBoundReal::log(10, work);
  const BigInt small = n_ell_product * points_mod_p;
  UpperBoundReal total = UpperBoundReal(Rational(out.m), work) * UpperBoundReal::log(a, work) +
                         UpperBoundReal(Rational(out.binomial_exponent), work) *
                             UpperBoundReal::log(b, work) +
                         UpperBoundReal::log(small, work);
  // log(kappa) <= kappa - 1
  total = total + (out.kappa - LowerBoundReal(Rational(1), work));
  out.digits_upper = (total / log10).floor() + 1;

  if (opts.materialize) {
    if (out.digits_upper > BigInt(opts.digit_cap)) {
      throw DomainError("coarse bound has up to " + to_string(out.digits_upper) +
                        " digits, above the cap of " + std::to_string(opts.digit_cap));
    }
    const BigInt factor = small * pow(a, out.m.get_ui()) * pow(b, out.binomial_exponent.get_ui());
    out.value = out.kappa.ceil_times(factor);
  }
  return out;
}

BigInt bound_siegel(unsigned long s) {
  if (s > 15) throw DomainError("2^(4^s) is out of reach for s > 15");
  BigInt two_pow;
  mpz_setbit(two_pow.get_mpz_t(), 1ul << (2 * s));
  return 8 * pow(BigInt(6), s) * two_pow;
}

SiegelChain bound_siegel_chain(const std::set<BigInt>& S, mpfr_prec_t prec) {
  for (const auto& l : S) {
    if (!is_prime(l)) throw DomainError(to_string(l) + " is not prime");
  }
  const unsigned long s = S.size();
  SiegelChain out{.p = 0, .kappa_times_pminus2 = std::nullopt, .intermediate = 0, .final_bound = 0};
  if (!S.count(BigInt(2))) return out;
  BigInt p = 2;
  while (S.count(p)) p = next_prime(p);
  out.p = p;
  const UpperBoundReal kp = kappa({p, 1, 1}, prec) * UpperBoundReal(Rational(p - 2), prec);
  out.kappa_times_pminus2 = kp;
  BigInt two_pow;
  mpz_setbit(two_pow.get_mpz_t(), (1ul << (2 * s)) + 1);
  out.intermediate = kp.ceil_times(pow(BigInt(3), s) * two_pow);
  BigInt limit;
  mpz_setbit(limit.get_mpz_t(), s + 2);
  if (!(kp < Rational(limit))) {
    throw VerificationError("kappa_p (p - 2) < 2^(s+2) fails for p = " + to_string(p));
  }
  out.final_bound = bound_siegel(s);
  if (out.intermediate > out.final_bound) {
    throw VerificationError("intermediate Siegel bound exceeds the final one");
  }
  return out;
}

RankExample example_rank_gplus1_m(unsigned long g) {
  if (g < 1) throw DomainError("rank example needs g >= 1");
  const std::size_t N = 3 * g + 8;
  const auto glob = weighted_product(SelmerDims{{1, static_cast<long>(g + 1)}}, N);
  const auto loc = weighted_product(SelmerDims{{1, static_cast<long>(g)}, {2, 2}}, N);
  RankExample out{};
  const auto m = minimal_strict_m(glob, loc, N);
  if (!m) throw VerificationError("no m up to 3g+8 satisfies the inequality");
  out.minimal_m = *m;

  // (1+t)^2/(1-t) HS_glob <= 4 (1-t)^-(g+2) and (1+t)^2/(1-t) HS_loc = (1-t)^-(g+3).
  const auto major = weighted_product(SelmerDims{{1, static_cast<long>(g + 2)}}, N).scaled(4);
  const auto exact = weighted_product(SelmerDims{{1, static_cast<long>(g + 3)}}, N);
  const IntSeries wrap(std::vector<BigInt>{1, 2, 1}, N);
  const auto pg = partial_sums(glob), pl = partial_sums(loc);
  if (pl * wrap != exact || !preceq_coefficientwise(pg * wrap, major)) {
    throw VerificationError("bounding series identities fail");
  }
  out.bounding_index = N + 1;
  for (std::size_t k = 0; k <= N; ++k) {
    if (major[k] < exact[k]) {
      out.bounding_index = k;
      break;
    }
  }
  for (std::size_t k = 3 * g + 5; k <= 3 * g + 7; ++k) {
    if (pg[k] < pl[k]) {
      out.window_m = k;
      break;
    }
  }
  return out;
}

}  // namespace eck
