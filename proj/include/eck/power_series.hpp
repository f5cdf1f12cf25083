#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "eck/bigint.hpp"
#include "eck/error.hpp"
#include "eck/ext_nat.hpp"
#include "eck/kronecker.hpp"

namespace eck {

template <class R>
concept Semiring = std::regular<R> && requires(const R& a, const R& b) {
  R(0);
  R(1);
  R(a + b);
  R(a * b);
};

template <class R>
concept Ring = Semiring<R> && requires(const R& a, const R& b) {
  R(a - b);
  R(-a);
};

template <class R>
concept OrderedSemiring = Semiring<R> && std::totally_ordered<R>;

template <class R>
struct UnitInverse;

template <>
struct UnitInverse<BigInt> {
  static std::optional<BigInt> of(const BigInt& x) {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }
};

template <>
struct UnitInverse<Rational> {
  static std::optional<Rational> of(const Rational& x) {
    if (x == 0) return std::nullopt;
    return Rational(1 / x);
  }
};

template <class R>
concept UnitInvertible = Ring<R> && requires(const R& x) {
  { UnitInverse<R>::of(x) } -> std::same_as<std::optional<R>>;
};

inline std::string coefficient_text(const BigInt& x) { return x.get_str(); }
inline std::string coefficient_text(const Rational& x) { return x.get_str(); }
inline std::string coefficient_text(const ExtNat& x) { return x.str(); }

// Truncated power series c_0 + c_1 t + ... + c_N t^N. The truncation order N
// is part of the value; binary operations keep the smaller one.
template <Semiring R>
class PowerSeries {
 public:
  using coefficient_type = R;

  PowerSeries() : c_{R(0)} {}

  explicit PowerSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("power series needs at least one coefficient");
  }

  // Pads with zeros or drops high terms so that the result has order trunc.
  PowerSeries(std::vector<R> coeffs, std::size_t trunc) : c_(std::move(coeffs)) {
    c_.resize(trunc + 1, R(0));
  }

  static PowerSeries zero(std::size_t trunc) {
    return PowerSeries(std::vector<R>(trunc + 1, R(0)));
  }
  static PowerSeries one(std::size_t trunc) { return monomial(R(1), 0, trunc); }
  static PowerSeries monomial(R c, std::size_t k, std::size_t trunc) {
    auto s = zero(trunc);
    if (k <= trunc) s.c_[k] = std::move(c);
    return s;
  }

  std::size_t trunc() const noexcept { return c_.size() - 1; }
  const R& operator[](std::size_t i) const { return c_.at(i); }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  PowerSeries truncated(std::size_t n) const {
    if (n > trunc()) throw DomainError("cannot raise truncation order");
    return PowerSeries(std::vector<R>(c_.begin(), c_.begin() + n + 1));
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return x == R(0); });
  }

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = std::min(f.trunc(), g.trunc());
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = R(f.c_[i] + g.c_[i]);
    return PowerSeries(std::move(out));
  }

  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g)
    requires Ring<R>
  {
    const std::size_t n = std::min(f.trunc(), g.trunc());
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = R(f.c_[i] - g.c_[i]);
    return PowerSeries(std::move(out));
  }

  PowerSeries operator-() const
    requires Ring<R>
  {
    std::vector<R> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = R(-c_[i]);
    return PowerSeries(std::move(out));
  }

  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    const std::size_t n = std::min(f.trunc(), g.trunc());
    if constexpr (std::is_same_v<R, BigInt>) {
      if (n >= kKroneckerThreshold) {
        return PowerSeries(kronecker_multiply(f.c_, g.c_, n + 1));
      }
    }
    std::vector<R> out(n + 1, R(0));
    for (std::size_t i = 0; i <= n; ++i) {
      if (f.c_[i] == R(0)) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        out[i + j] = R(out[i + j] + f.c_[i] * g.c_[j]);
      }
    }
    return PowerSeries(std::move(out));
  }

  PowerSeries scaled(const R& k) const {
    std::vector<R> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = R(k * c_[i]);
    return PowerSeries(std::move(out));
  }

  PowerSeries& operator+=(const PowerSeries& g) { return *this = *this + g; }
  PowerSeries& operator*=(const PowerSeries& g) { return *this = *this * g; }

  friend bool operator==(const PowerSeries& f, const PowerSeries& g) = default;

  // Canonical form "c0 + c1*t + c2*t^2 + ..." listing every retained term.
  std::string str(std::string_view var = "t") const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << " + ";
      os << coefficient_text(c_[i]);
      if (i >= 1) os << '*' << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

 private:
  static constexpr std::size_t kKroneckerThreshold = 48;
  std::vector<R> c_;
};

// Coefficient m of the result is c_0 + ... + c_m.
template <Semiring R>
PowerSeries<R> partial_sums(const PowerSeries<R>& f) {
  std::vector<R> out(f.coeffs());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = R(out[i - 1] + out[i]);
  return PowerSeries<R>(std::move(out));
}

// Multiplicative inverse to the series' own truncation order.
template <UnitInvertible R>
PowerSeries<R> inverse(const PowerSeries<R>& f) {
  const auto inv0 = UnitInverse<R>::of(f[0]);
  if (!inv0) throw DomainError("constant term is not a unit");
  const std::size_t n = f.trunc();
  std::vector<R> out(n + 1, R(0));
  out[0] = *inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (f[i] != R(0)) acc = R(acc + f[i] * out[k - i]);
    }
    out[k] = R(-(acc * *inv0));
  }
  return PowerSeries<R>(std::move(out));
}

// Inverse of a polynomial (coefficients beyond the list are exactly zero)
// expanded to order n.
template <UnitInvertible R>
PowerSeries<R> geometric_inverse(const std::vector<R>& poly, std::size_t n) {
  return inverse(PowerSeries<R>(poly, n));
}

// f ⪯ g: every partial sum of f up to degree up_to is at most that of g.
template <OrderedSemiring R>
bool preceq(const PowerSeries<R>& f, const PowerSeries<R>& g, std::size_t up_to) {
  if (up_to > f.trunc() || up_to > g.trunc()) {
    throw DomainError("preceq beyond truncation order");
  }
  R sf(0), sg(0);
  for (std::size_t m = 0; m <= up_to; ++m) {
    sf = R(sf + f[m]);
    sg = R(sg + g[m]);
    if (sg < sf) return false;
  }
  return true;
}

// Least m <= m_max with sum_{i<=m} glob_i < sum_{i<=m} loc_i.
template <OrderedSemiring R>
std::optional<std::size_t> minimal_strict_m(const PowerSeries<R>& glob,
                                            const PowerSeries<R>& loc,
                                            std::size_t m_max) {
  if (m_max > glob.trunc() || m_max > loc.trunc()) {
    throw DomainError("minimal_strict_m beyond truncation order");
  }
  R sg(0), sl(0);
  for (std::size_t m = 0; m <= m_max; ++m) {
    sg = R(sg + glob[m]);
    sl = R(sl + loc[m]);
    if (sg < sl) return m;
  }
  return std::nullopt;
}

using IntSeries = PowerSeries<BigInt>;
using RationalSeries = PowerSeries<Rational>;
using ExtNatSeries = PowerSeries<ExtNat>;

}  // namespace eck
