#include <random>

#include "doctest.h"
#include "eck/error.hpp"
#include "eck/padic.hpp"

using namespace eck;

namespace {

std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

DividedSeries exp_series(const BigInt& p, std::size_t M) {
  std::vector<Rational> a(M + 1, Rational(1));
  return DividedSeries::from_divided(p, a);
}

Rational random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 2001) - 1000;
  long den = 1 + static_cast<long>(rng() % 500);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("valuations") {
  CHECK(vp(Rational(12), 2) == Valuation(2));
  CHECK(vp(Rational(3, 4), 2) == Valuation(-2));
  CHECK(vp(Rational(0), 5).is_infinite());
  CHECK(Valuation(3) < Valuation::infinity());
  CHECK((Valuation(3) + Valuation::infinity()).is_infinite());
  CHECK(vp_factorial(10, 2) == 8);
  CHECK(vp_factorial(25, 5) == 6);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = random_rational(rng), y = random_rational(rng);
    for (long p : {2l, 3l, 5l}) {
      CHECK(vp(Rational(x * y), p) == vp(x, p) + vp(y, p));
      CHECK(vp(Rational(x + y), p) >= std::min(vp(x, p), vp(y, p)));
    }
  }
}

TEST_CASE("divided power integrality") {
  CHECK(is_pd_integral(exp_series(3, 30)));
  CHECK(is_pd_unit(exp_series(3, 30)));
  std::vector<Rational> ones(20, Rational(1));
  CHECK(is_pd_integral(DividedSeries(5, RationalSeries(ones))));

  std::vector<Rational> log1p(30, Rational(0));
  for (std::size_t i = 1; i < log1p.size(); ++i) {
    log1p[i] = Rational(i % 2 ? 1 : -1, static_cast<long>(i));
    log1p[i].canonicalize();
  }
  const DividedSeries lg(3, RationalSeries(log1p));
  CHECK(is_pd_integral(lg));
  CHECK(!is_pd_unit(lg));
  for (std::size_t i = 1; i < log1p.size(); ++i) {
    CHECK(lg.divided(i) == (i % 2 ? 1 : -1) * Rational(factorial(i - 1)));
  }

  CHECK(!is_pd_unit(DividedSeries(3, RationalSeries({Rational(0), Rational(1)}))));
  const RationalSeries p_plus_t({Rational(3), Rational(1)});
  CHECK(!is_pd_unit(DividedSeries(3, p_plus_t)));
  CHECK(is_pd_unit(DividedSeries(5, p_plus_t)));
  CHECK(!is_pd_integral(DividedSeries(3, RationalSeries({Rational(1, 3)}))));
}

TEST_CASE("divided power series are closed under products and derivations") {
  std::mt19937_64 rng(9);
  const BigInt p = 3;
  const std::size_t M = 25;
  auto random_pd = [&] {
    std::vector<Rational> a(M + 1);
    for (auto& x : a) x = static_cast<long>(rng() % 19) - 9;
    return DividedSeries::from_divided(p, a);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_pd(), g = random_pd(), u = random_pd();
    CHECK(is_pd_integral(DividedSeries(p, f.series() * g.series())));
    std::vector<Rational> df(M);
    for (std::size_t i = 0; i < M; ++i) df[i] = f.standard(i + 1) * static_cast<unsigned long>(i + 1);
    const auto du = u.series().truncated(M - 1) * RationalSeries(df);
    CHECK(is_pd_integral(DividedSeries(p, du)));
  }
}

TEST_CASE("Newton polygons") {
  const BigInt p = 3;
  // t (t - p)(t - p^2) = t^3 - (p + p^2) t^2 + p^3 t
  const auto c = poly_from_roots({0, 3, 9});
  const auto np = newton_polygon(c, p);
  CHECK(np.vertices == std::vector<NewtonVertex>{{1, 3}, {2, 1}, {3, 0}});
  CHECK(np.first_index() == 1);
  CHECK(count_zeros(np, 1) == 3);
  CHECK(count_zeros(np, 2) == 2);
  CHECK(count_zeros(np, 3) == 1);

  const auto one_plus_t = newton_polygon({Rational(1), Rational(1)}, p);
  CHECK(one_plus_t.segments().size() == 1);
  CHECK(one_plus_t.segments()[0].first == 0);
  CHECK(count_zeros(one_plus_t, 1) == 0);
  const auto p_plus_t = newton_polygon({Rational(3), Rational(1)}, p);
  CHECK(p_plus_t.segments()[0].first == 1);
  CHECK(count_zeros(p_plus_t, 1) == 1);
  CHECK_THROWS_AS(newton_polygon({Rational(0)}, p), DomainError);

  // Collinear points do not produce a vertex.
  const auto lin = newton_polygon({Rational(9), Rational(3), Rational(1)}, p);
  CHECK(lin.vertices.size() == 2);
}

TEST_CASE("zero counts match prescribed roots") {
  std::mt19937_64 rng(41);
  for (long p : {2l, 3l, 5l, 7l}) {
    Rational inv(1, p - 1);
    inv.canonicalize();
    const Rational lambda3 = std::max(Rational(1, 2), Rational(inv + Rational(1, 4)));
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> roots;
      std::vector<std::optional<long>> vals;
      const int deg = 1 + static_cast<int>(rng() % 8);
      for (int k = 0; k < deg; ++k) {
        if (rng() % 8 == 0) {
          roots.emplace_back(0);
          vals.push_back(std::nullopt);
          continue;
        }
        const long v = static_cast<long>(rng() % 6) - 1;
        long u = 1 + static_cast<long>(rng() % 50);
        if (u % p == 0) ++u;
        Rational r(u * (rng() & 1 ? 1 : -1));
        r *= v >= 0 ? Rational(pow(BigInt(p), v)) : Rational(1) / Rational(pow(BigInt(p), -v));
        roots.push_back(r);
        vals.push_back(v);
      }
      const auto np = newton_polygon(poly_from_roots(roots), p);
      for (const Rational& lambda : {Rational(1), Rational(2), lambda3}) {
        std::size_t expect = 0;
        for (const auto& v : vals) expect += (!v || Rational(*v) >= lambda);
        CHECK(count_zeros(np, lambda) == expect);
      }
    }
  }
}

TEST_CASE("certified zero counts") {
  const BigInt p = 3;
  const std::size_t M = 40;
  // (t - 9) exp(t): one zero of valuation 2, nothing else in the disc.
  const auto f = RationalSeries({Rational(-9), Rational(1)}, M) * exp_series(p, M).series();
  const DividedSeries g(p, f);
  CHECK(is_pd_integral(g));
  CHECK(count_zeros_certified(g, 1) == 1);
  CHECK(count_zeros_certified(g, 2) == 1);
  CHECK(count_zeros_certified(g, 3) == 0);
  CHECK_THROWS_AS(count_zeros_certified(g, Rational(1, 2)), TruncationError);
  const DividedSeries short_g(p, f.truncated(0));
  CHECK(count_zeros_certified(DividedSeries(p, f.truncated(1)), Rational(3, 4)) == 1);
  CHECK_THROWS_AS(count_zeros_certified(short_g, Rational(3, 4)), TruncationError);

  // On polynomials the certified count agrees with the polygon.
  const auto c = poly_from_roots({0, 3, 9, Rational(1, 3)});
  std::vector<Rational> padded = c;
  padded.resize(30, Rational(0));
  const DividedSeries poly(p, RationalSeries(padded));
  for (const Rational& lambda : {Rational(1), Rational(2)}) {
    CHECK(count_zeros_certified(poly, lambda, -10) == count_zeros(newton_polygon(c, p), lambda));
  }
}

TEST_CASE("zero bound for nice operators") {
  CHECK(zero_bound_nice(1, {3, 1, 1}, 1) == 0);
  CHECK(zero_bound_nice(1, {7, 1, 1}, 5) == 0);
  CHECK(zero_bound_nice(4, {3, 1, 1}, 1) == 8);
  CHECK(zero_bound_nice(2, {2, 1, 1}, 2) == 2);
  CHECK_THROWS_AS(zero_bound_nice(3, {3, 1, 1}, Rational(1, 2)), DomainError);
  CHECK(zero_bound_nice(4, {3, 1, 1}, 1, 512) <= zero_bound_nice(4, {3, 1, 1}, 1));
}
