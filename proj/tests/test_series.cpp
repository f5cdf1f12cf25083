#include <random>

#include "doctest.h"
#include "eck/power_series.hpp"
#include "eck/selmer_dims.hpp"

using namespace eck;

namespace {

IntSeries ints(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntSeries(std::move(v));
}

IntSeries random_series(std::mt19937_64& rng, std::size_t n, int bits) {
  std::vector<BigInt> v(n + 1);
  for (auto& c : v) {
    c = 0;
    for (int b = 0; b < bits; b += 32) c = (c << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
    if (rng() & 1) c = -c;
  }
  return IntSeries(std::move(v));
}

std::vector<BigInt> schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                               std::size_t len) {
  std::vector<BigInt> out(len, BigInt(0));
  for (std::size_t i = 0; i < len && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntSeries geometric(long q, std::size_t n) { return geometric_inverse<BigInt>({1, -q}, n); }

}  // namespace

TEST_CASE("ExtNat arithmetic absorbs at infinity") {
  const ExtNat inf = ExtNat::infinity();
  CHECK(inf + ExtNat(3) == inf);
  CHECK(inf * ExtNat(2) == inf);
  CHECK(inf * ExtNat(0) == ExtNat(0));
  CHECK(ExtNat(0) * inf == ExtNat(0));
  CHECK(ExtNat(5) < inf);
  CHECK(ExtNat(2) + ExtNat(3) == ExtNat(5));
  CHECK(ExtNat::parse("inf").is_infinite());
  CHECK(ExtNat::parse("12") == ExtNat(12));
  CHECK_THROWS_AS(ExtNat::parse("-1"), DomainError);
  CHECK_THROWS_AS(ExtNat(-1), DomainError);
}

TEST_CASE("addition") {
  CHECK(ints({1, 1}) + ints({1, 1}) == ints({2, 2}));
  const auto f = ints({3, -1, 4});
  CHECK(f + IntSeries::zero(2) == f);
  CHECK((f + ints({1, 1})).trunc() == 1);

  const ExtNatSeries a({ExtNat(1), ExtNat::infinity()});
  const ExtNatSeries b({ExtNat(1), ExtNat(1)});
  CHECK(a + b == ExtNatSeries({ExtNat(2), ExtNat::infinity()}));
}

TEST_CASE("multiplication") {
  CHECK(geometric(1, 5) * ints({1, -1, 0, 0, 0, 0}) == IntSeries::one(5));
  CHECK(ints({1, 1, 0}) * ints({1, 1, 0}) == ints({1, 2, 1}));
  CHECK(geometric(1, 3) * geometric(2, 3) == ints({1, 3, 7, 15}));
}

TEST_CASE("multiplication is associative and commutative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 80;
    auto f = random_series(rng, n, 64);
    auto g = random_series(rng, n + rng() % 5, 96);
    auto h = random_series(rng, n + rng() % 5, 40);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("packed multiplication agrees with the schoolbook product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    auto f = random_series(rng, n, 1 + static_cast<int>(rng() % 300));
    auto g = random_series(rng, n, 1 + static_cast<int>(rng() % 300));
    CHECK(kronecker_multiply(f.coeffs(), g.coeffs(), n + 1) ==
          schoolbook(f.coeffs(), g.coeffs(), n + 1));
    CHECK(kronecker_multiply(f.coeffs(), f.coeffs(), n + 1) ==
          schoolbook(f.coeffs(), f.coeffs(), n + 1));
  }
  std::vector<BigInt> zeros(10, BigInt(0));
  CHECK(kronecker_multiply(zeros, zeros, 10) == zeros);
}

TEST_CASE("geometric inverse") {
  CHECK(geometric(1, 4) == ints({1, 1, 1, 1, 1}));
  CHECK(geometric_inverse<BigInt>({1, -2, 1}, 4) == ints({1, 2, 3, 4, 5}));
  const auto half = geometric_inverse<Rational>({2, -1}, 2);
  CHECK(half == RationalSeries({Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
  CHECK_THROWS_AS(geometric_inverse<BigInt>({2, -1}, 3), DomainError);
  CHECK_THROWS_AS(geometric_inverse<Rational>({0, 1}, 3), DomainError);
}

TEST_CASE("partial sums") {
  CHECK(partial_sums(ints({1, 1, 1})) == ints({1, 2, 3}));
  CHECK(partial_sums(IntSeries::zero(3)) == IntSeries::zero(3));
  CHECK(partial_sums(geometric(2, 3)) == ints({1, 3, 7, 15}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(rng, rng() % 60, 50);
    CHECK(partial_sums(f) == f * geometric(1, f.trunc()));
  }
}

TEST_CASE("preceq") {
  const auto f = ints({1, 2, 3});
  CHECK(preceq(f, f, 2));
  CHECK(preceq(geometric(1, 10), geometric(2, 10), 10));
  CHECK(!preceq(geometric(2, 10), geometric(1, 10), 10));
  CHECK(preceq(ints({0, 1}), ints({1, 0}), 1));
  CHECK_THROWS_AS(preceq(f, f, 3), DomainError);

  std::mt19937_64 rng(5);
  auto small = [&] {
    std::vector<BigInt> v(6);
    for (auto& c : v) c = static_cast<long>(rng() % 3);
    return IntSeries(std::move(v));
  };
  int antisymmetric = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto a = small(), b = small(), c = small();
    if (preceq(a, b, 5) && preceq(b, c, 5)) CHECK(preceq(a, c, 5));
    if (preceq(a, b, 5) && preceq(b, a, 5)) {
      CHECK(partial_sums(a) == partial_sums(b));
      ++antisymmetric;
    }
  }
  CHECK(antisymmetric > 0);
}

TEST_CASE("minimal strict m") {
  const std::size_t N = 12;
  const auto glob = weighted_product(SelmerDims{{1, 1}}, N);
  const auto loc = weighted_product(SelmerDims{{1, 1}, {2, 1}}, N);
  CHECK(minimal_strict_m(glob, loc, N) == std::optional<std::size_t>(2));
  CHECK(!minimal_strict_m(glob, glob, N).has_value());
  const auto g2 = weighted_product(SelmerDims{{1, 2}}, 5);
  const auto l2 = weighted_product(SelmerDims{{1, 2}, {2, 1}}, 5);
  CHECK(minimal_strict_m(g2, l2, 5) == std::optional<std::size_t>(2));
}

TEST_CASE("enlarging a local dimension never raises the minimal m") {
  std::mt19937_64 rng(17);
  const std::size_t N = 30;
  for (int trial = 0; trial < 40; ++trial) {
    SelmerDims glob, loc;
    for (unsigned n = 1; n <= 4; ++n) {
      glob.set(n, ExtNat(static_cast<long>(rng() % 4)));
      loc.set(n, ExtNat(static_cast<long>(rng() % 4)));
    }
    const auto g = weighted_product(glob, N);
    const auto before = minimal_strict_m(g, weighted_product(loc, N), N);
    const unsigned n = 1 + rng() % 4;
    loc.set(n, loc.at(n) + ExtNat(1 + static_cast<long>(rng() % 3)));
    const auto after = minimal_strict_m(g, weighted_product(loc, N), N);
    if (before) {
      REQUIRE(after.has_value());
      CHECK(*after <= *before);
    }
  }
}

TEST_CASE("weighted product") {
  CHECK(weighted_product(SelmerDims{{1, 2}}, 3) == ints({1, 2, 3, 4}));
  CHECK(weighted_product(SelmerDims{}, 5) == IntSeries::one(5));
  SelmerDims inf_high{{1, 1}, {9, ExtNat::infinity()}};
  CHECK(weighted_product(inf_high, 8) == geometric(1, 8));
  CHECK_THROWS_AS(weighted_product(inf_high, 9), DomainError);
}

TEST_CASE("weighted product strategies agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    SelmerDims dims;
    for (unsigned n = 1; n <= 10; ++n) dims.set(n, ExtNat(static_cast<long>(rng() % 40)));
    const std::size_t N = 5 + rng() % 60;
    const auto a = weighted_product(dims, N, FactorStrategy::geometric);
    CHECK(a == weighted_product(dims, N, FactorStrategy::binomial));
    CHECK(a == weighted_product(dims, N, FactorStrategy::automatic));
  }
}

TEST_CASE("weighted product of disjoint supports is the product") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    SelmerDims a, b;
    for (unsigned n = 1; n <= 8; ++n) {
      (rng() & 1 ? a : b).set(n, ExtNat(static_cast<long>(rng() % 6)));
    }
    const std::size_t N = 25;
    CHECK(weighted_product(SelmerDims::disjoint_union(a, b), N) ==
          weighted_product(a, N) * weighted_product(b, N));
  }
}

TEST_CASE("canonical text form") {
  CHECK(ints({1, -2, 0, 5}).str() == "1 + -2*t + 0*t^2 + 5*t^3");
  CHECK(RationalSeries({Rational(1, 2), Rational(3)}).str("tau") == "1/2 + 3*tau");
}

TEST_CASE("dimension file format") {
  const auto d = SelmerDims::parse("# local dims\n1 = 2\n\n2 = inf  # wild\n 3=0\n");
  CHECK(d.at(1) == ExtNat(2));
  CHECK(d.at(2).is_infinite());
  CHECK(d.at(3) == ExtNat(0));
  CHECK(d.at(7) == ExtNat(0));
  CHECK(SelmerDims::parse(d.str()).entries() == d.entries());

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      SelmerDims::parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("1 = 2\n2 3\n") == 2);
  CHECK(line_of("# c\n\n0 = 1\n") == 3);
  CHECK(line_of("1 = x\n") == 1);
  CHECK(line_of("1 = 2\n1 = 3\n") == 2);
  CHECK(line_of("1 = -2\n") == 1);
}
