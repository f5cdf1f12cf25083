#include <random>

#include "doctest.h"
#include "eck/annihilator.hpp"
#include "eck/error.hpp"

using namespace eck;

namespace {

Polynomial poly(std::string_view s) { return Polynomial::parse(s); }

void check_kills(const DiffOp& op, const std::vector<RationalFunction>& fns, const Rational& a) {
  for (const auto& f : fns) {
    const auto out = apply(op, taylor_expand(f, a, op.order() + 40));
    CHECK(out.series.is_zero());
  }
}

}  // namespace

TEST_CASE("annihilator of constants and affine functions") {
  const auto one = annihilator_of_span({RationalFunction(1)}, 2, 5);
  CHECK(one.ladder == std::vector<std::size_t>{0});
  CHECK(one.op.order() == 1);
  CHECK(one.op.coeff(0).is_zero());
  CHECK(one.op.coeff(1) == RationalFunction(poly("z^2 - z")));

  for (long p : {3l, 5l, 7l}) {
    const auto lin = annihilator_of_span({RationalFunction(1), RationalFunction(poly("z"))}, 2, p);
    CHECK(lin.ladder == std::vector<std::size_t>{0, 1});
    CHECK(lin.op.order() == 2);
    CHECK(lin.op.coeff(0).is_zero());
    CHECK(lin.op.coeff(1).is_zero());
    CHECK(lin.op.coeff(2) == RationalFunction(poly("z - z^2").pow(3)));
  }
}

TEST_CASE("saturation finds the hidden ladder") {
  // At a = 2 the expansions are 1 and 11 + 5t; they agree modulo 5 but
  // their difference divided by 5 is 2 + t.
  const std::vector<RationalFunction> fns{RationalFunction(1), RationalFunction(poly("1 + 5*z"))};
  const auto r = annihilator_of_span(fns, 2, 5);
  CHECK(r.ladder == std::vector<std::size_t>{0, 1});
  CHECK(r.op.order() == 2);
  check_kills(r.op, fns, 2);
  CHECK(is_pd_nice(r.op, 2, 5, 40, PdCheck::raw));
  for (const auto& b : r.basis) {
    const DividedSeries d(5, taylor_series(b, 2, 10));
    CHECK(is_pd_integral(d));
  }
}

TEST_CASE("spans of polynomials") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 1 + rng() % 5;
    const std::size_t c = 1 + rng() % d;
    std::vector<RationalFunction> fns;
    for (std::size_t i = 0; i < c; ++i) {
      std::vector<Rational> coef(d + 1);
      for (auto& x : coef) x = static_cast<long>(rng() % 11) - 5;
      fns.emplace_back(Polynomial(coef));
    }
    AnnihilatorOptions opts;
    opts.pole_bound = P1Divisor(P1Point::infinity(), static_cast<long>(d));
    try {
      const auto r = annihilator_of_span(fns, 2, 5, DiffOp::default_unit(), opts);
      CHECK(r.op.order() <= d + 1);
      CHECK(r.ladder.size() == c);
      check_kills(r.op, fns, 2);
      CHECK(is_pd_nice(r.op, 2, 5, 60, PdCheck::raw));
      const DiffOp left = compose(DiffOp::derivation(), r.op);
      check_kills(left, fns, 2);
    } catch (const DomainError&) {
      // dependent random draw
      CHECK(c >= 2);
    }
  }
}

TEST_CASE("spans of rational functions") {
  const std::vector<RationalFunction> fns{RationalFunction(1, poly("z")),
                                          RationalFunction(1, poly("z - 1")),
                                          RationalFunction(poly("z"), poly("1 - z"))};
  for (long p : {3l, 5l, 7l}) {
    const auto r = annihilator_of_span(fns, 2, p);
    CHECK(r.op.order() == r.ladder.back() + 1);
    check_kills(r.op, fns, 2);
    CHECK(is_pd_nice(r.op, 2, p, 60, PdCheck::raw));
  }
}

TEST_CASE("annihilator errors") {
  CHECK_THROWS_AS(annihilator_of_span({RationalFunction(poly("z")), RationalFunction(poly("2*z"))}, 2, 5),
                  DomainError);
  CHECK_THROWS_AS(annihilator_of_span({RationalFunction()}, 2, 5), DomainError);
  // w(2) = -2 is not a unit at 2.
  CHECK_THROWS_AS(annihilator_of_span({RationalFunction(1)}, 2, 2), DomainError);
  AnnihilatorOptions opts;
  opts.pole_bound = P1Divisor();
  CHECK_THROWS_AS(annihilator_of_span({RationalFunction(1), RationalFunction(poly("z"))}, 2, 5,
                                      DiffOp::default_unit(), opts),
                  VerificationError);
  const auto empty = annihilator_of_span({}, 2, 5);
  CHECK(empty.op == DiffOp::identity());
}
