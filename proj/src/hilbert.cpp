#include "eck/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "eck/kronecker.hpp"

namespace eck {

int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("moebius(0) is undefined");
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

BigInt necklace(const BigInt& q, std::uint64_t n) {
  if (n == 0) throw DomainError("necklace length must be >= 1");
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu != 0) sum += mu * pow(q, d);
  }
  BigInt out;
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
    throw VerificationError("necklace sum not divisible by n");
  }
  mpz_divexact_ui(out.get_mpz_t(), sum.get_mpz_t(), n);
  return out;
}

IntSeries hs_surface(SurfaceSignature sig, std::size_t N) {
  if (sig.g == 0 && sig.r == 0) throw DomainError("surface signature (0,0)");
  const BigInt a = 2 * BigInt(sig.g);
  const BigInt b = BigInt(sig.r) - 1;
  std::vector<BigInt> c(N + 1, BigInt(0));
  c[0] = 1;
  for (std::size_t k = 1; k <= N; ++k) {
    c[k] = a * c[k - 1];
    if (k >= 2) c[k] += b * c[k - 2];
  }
  return IntSeries(std::move(c));
}

SelmerDims surface_lie_dims(SurfaceSignature sig, std::size_t N) {
  if (sig.g == 0 && sig.r == 0) throw DomainError("surface signature (0,0)");
  // Power sums of the reciprocal roots of 1 - 2g t - (r-1) t^2.
  const BigInt a = 2 * BigInt(sig.g);
  const BigInt b = BigInt(sig.r) - 1;
  std::vector<BigInt> p(N + 1);
  p[0] = 2;
  if (N >= 1) p[1] = a;
  for (std::size_t n = 2; n <= N; ++n) p[n] = a * p[n - 1] + b * p[n - 2];
  SelmerDims out;
  for (std::size_t k = 1; k <= N; ++k) {
    BigInt sum = 0;
    for (std::uint64_t d : divisors(k)) sum += moebius(k / d) * p[d];
    BigInt dk;
    mpz_divexact_ui(dk.get_mpz_t(), sum.get_mpz_t(), k);
    if (dk < 0) throw VerificationError("negative graded dimension");
    out.set(static_cast<unsigned>(k), ExtNat(dk));
  }
  return out;
}

BigInt labute_dims(unsigned long g, std::uint64_t k) {
  if (g < 1) throw DomainError("closed-surface dimensions need g >= 1");
  if (k < 1) throw DomainError("weight must be >= 1");
  const BigInt two_g = 2 * BigInt(g);
  Rational total = 0;
  for (std::uint64_t d : divisors(k)) {
    const int mu = moebius(k / d);
    if (mu == 0) continue;
    Rational inner = 0;
    for (std::uint64_t i = 0; 2 * i <= d; ++i) {
      Rational term(BigInt(d), BigInt(d - i));
      term.canonicalize();
      term *= binomial(BigInt(d - i), i);
      term *= pow(two_g, d - 2 * i);
      inner += (i % 2 ? -term : term);
    }
    total += mu * inner;
  }
  total /= BigInt(k);
  if (total.get_den() != 1) throw VerificationError("graded rank is not an integer");
  return total.get_num();
}

IntSeries hs_local(const SelmerDims& dims, std::size_t N) {
  return weighted_product(dims, N);
}

IntSeries hs_global(const GlobalSeriesSpec& spec, std::size_t N) {
  return std::visit(
      [&](const auto& v) -> IntSeries {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, NaiveVariant>) {
          return weighted_product(v.t0_dims, N);
        } else {
          SelmerDims dims = spec.global_dims;
          if constexpr (std::is_same_v<V, BalakrishnanDograVariant>) {
            dims.set(1, ExtNat(static_cast<long>(v.rank)));
          }
          std::vector<BigInt> f = weighted_product(dims, N).coeffs();
          multiply_by_power_of_geometric(f, 2, BigInt(spec.s));
          return IntSeries(std::move(f));
        }
      },
      spec.variant);
}

namespace {

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                             std::size_t len) {
  return kronecker_multiply(a, b, len);
}

// Quadratic recursion from comparing coefficients in the functional equation:
// 2 a_m = sum_{i<=m/2} b_{m-2i} a_i - sum_{0<i<m} a_i a_{m-i},
// b_0 = 1, b_j = 2^(j+1).
void extend_by_recursion(std::vector<BigInt>& a, std::size_t len) {
  if (a.empty()) a.push_back(1);
  std::vector<BigInt> b;
  BigInt acc, tmp;
  for (std::size_t m = a.size(); m < len; ++m) {
    acc = 0;
    for (std::size_t i = 0; 2 * i <= m; ++i) {
      const std::size_t j = m - 2 * i;
      if (j == 0) {
        acc += a[i];
      } else {
        mpz_mul_2exp(tmp.get_mpz_t(), a[i].get_mpz_t(), j + 1);
        acc += tmp;
      }
    }
    BigInt cross = 0;
    for (std::size_t i = 1; 2 * i < m; ++i) {
      mpz_addmul(cross.get_mpz_t(), a[i].get_mpz_t(), a[m - i].get_mpz_t());
    }
    cross *= 2;
    if (m % 2 == 0 && m > 0) mpz_addmul(cross.get_mpz_t(), a[m / 2].get_mpz_t(), a[m / 2].get_mpz_t());
    acc -= cross;
    if (mpz_odd_p(acc.get_mpz_t())) throw VerificationError("odd value in F recursion");
    mpz_fdiv_q_2exp(acc.get_mpz_t(), acc.get_mpz_t(), 1);
    a.push_back(acc);
  }
}

std::vector<BigInt> inverse_schoolbook(const std::vector<BigInt>& g, std::size_t len) {
  std::vector<BigInt> inv(len, BigInt(0));
  inv[0] = 1;
  for (std::size_t k = 1; k < len; ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k && i < g.size(); ++i) {
      mpz_addmul(acc.get_mpz_t(), g[i].get_mpz_t(), inv[k - i].get_mpz_t());
    }
    inv[k] = -acc;
  }
  return inv;
}

// Lifts F mod tau^k (and its inverse) to F mod tau^(k') for k' <= 2k using
// F = G + H with 2 G H = A - G^2 + O(tau^(2k)).
void lift_once(std::vector<BigInt>& G, std::vector<BigInt>& I, std::size_t target) {
  const std::size_t k = G.size();
  const std::size_t k2 = std::min(2 * k, target);
  if (k2 <= k) return;

  // A = (1 + 2 tau) / (1 - 2 tau) * F(tau^2) mod tau^k2.
  std::vector<BigInt> A(k2, BigInt(0));
  for (std::size_t i = 0; 2 * i < k2; ++i) A[2 * i] = G[i];
  BigInt prev = 0;
  for (std::size_t j = 0; j < k2; ++j) {
    mpz_addmul_ui(A[j].get_mpz_t(), prev.get_mpz_t(), 2);  // C = A / (1 - 2 tau)
    prev = A[j];
  }
  for (std::size_t j = k2; j-- > 1;) mpz_addmul_ui(A[j].get_mpz_t(), A[j - 1].get_mpz_t(), 2);

  std::vector<BigInt> sq = multiply(G, G, k2);
  for (std::size_t j = 0; j < k; ++j) {
    if (A[j] != sq[j]) throw VerificationError("F lift: lower coefficients disagree");
  }
  std::vector<BigInt> D(k2 - k);
  for (std::size_t j = k; j < k2; ++j) D[j - k] = A[j] - sq[j];
  sq.clear();
  std::vector<BigInt> H = multiply(D, I, k2 - k);
  D.clear();
  for (auto& h : H) {
    if (mpz_odd_p(h.get_mpz_t())) throw VerificationError("odd value in F lift");
    mpz_fdiv_q_2exp(h.get_mpz_t(), h.get_mpz_t(), 1);
  }
  G.insert(G.end(), std::make_move_iterator(H.begin()), std::make_move_iterator(H.end()));

  // I <- I - tau^k * (I * E_hi) where G I = 1 + tau^k E_hi.
  std::vector<BigInt> E = multiply(G, I, k2);
  for (std::size_t j = 1; j < k; ++j) {
    if (E[j] != 0) throw VerificationError("F lift: inverse drifted");
  }
  std::vector<BigInt> Ehi(E.begin() + static_cast<std::ptrdiff_t>(k), E.end());
  E.clear();
  std::vector<BigInt> corr = multiply(I, Ehi, k2 - k);
  I.resize(k2);
  for (std::size_t j = k; j < k2; ++j) I[j] = -corr[j - k];
}

class FCache {
 public:
  std::vector<BigInt> get(std::size_t len, FMethod method) {
    std::lock_guard<std::mutex> lock(mu_);
    if (method == FMethod::recursion) {
      if (rec_.size() < len) extend_by_recursion(rec_, len);
      return {rec_.begin(), rec_.begin() + static_cast<std::ptrdiff_t>(len)};
    }
    if (G_.empty()) {
      extend_by_recursion(G_, kSeed);
      I_ = inverse_schoolbook(G_, kSeed);
    }
    if (method == FMethod::automatic && len <= G_.size()) {
      return {G_.begin(), G_.begin() + static_cast<std::ptrdiff_t>(len)};
    }
    while (G_.size() < len) lift_once(G_, I_, len);
    return {G_.begin(), G_.begin() + static_cast<std::ptrdiff_t>(len)};
  }

 private:
  static constexpr std::size_t kSeed = 64;
  std::mutex mu_;
  std::vector<BigInt> rec_;
  std::vector<BigInt> G_, I_;
};

FCache& f_cache() {
  static FCache cache;
  return cache;
}

}  // namespace

IntSeries f_series(std::size_t N, FMethod method) {
  return IntSeries(f_cache().get(N + 1, method));
}

IntSeries hs_siegel_glob(unsigned long s, std::size_t N) {
  std::vector<BigInt> f = f_series(N).coeffs();
  if (s >= 2) {
    multiply_by_power_of_geometric(f, 1, BigInt(s - 2));
  } else {
    for (unsigned long r = 0; r < 2 - s; ++r) {
      for (std::size_t k = N; k >= 1; --k) f[k] -= f[k - 1];
    }
  }
  return IntSeries(std::move(f));
}

IntSeries hs_siegel_loc(std::size_t N) {
  std::vector<BigInt> c(N + 1);
  for (std::size_t i = 0; i <= N; ++i) mpz_setbit(c[i].get_mpz_t(), i);
  return IntSeries(std::move(c));
}

IntSeries tau_to_t(const IntSeries& f) {
  std::vector<BigInt> c(2 * f.trunc() + 1, BigInt(0));
  for (std::size_t i = 0; i <= f.trunc(); ++i) c[2 * i] = f[i];
  return IntSeries(std::move(c));
}

namespace {

// Least m <= limit with [tau^m] (1-tau)^(1-s) F < 2^(m+1) - 1; these are the
// partial sums of the global and local series respectively.
std::optional<std::size_t> search_prefix(unsigned long s, std::size_t limit) {
  std::vector<BigInt> g = f_series(limit).coeffs();
  if (s >= 1) {
    for (unsigned long r = 1; r < s; ++r) {
      for (std::size_t k = 1; k <= limit; ++k) g[k] += g[k - 1];
    }
  } else {
    for (std::size_t k = limit; k >= 1; --k) g[k] -= g[k - 1];
  }
  BigInt loc;
  for (std::size_t m = 0; m <= limit; ++m) {
    loc = 0;
    mpz_setbit(loc.get_mpz_t(), m + 1);
    loc -= 1;
    if (g[m] < loc) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> minimal_m_siegel(unsigned long s, SiegelSearch opts) {
  if (s >= 8 && !opts.allow_long) {
    throw DomainError("s >= 8 is long-running; enable it explicitly");
  }
  std::size_t m_max = opts.m_max.value_or(
      s < 31 ? std::size_t{1} << (2 * s) : std::numeric_limits<std::size_t>::max());
  std::size_t limit = std::min<std::size_t>(m_max, 64);
  for (;;) {
    if (auto m = search_prefix(s, limit)) return m;
    if (limit >= m_max) return std::nullopt;
    limit = std::min(m_max, limit + std::max<std::size_t>(limit / 4, 64));
  }
}

}  // namespace eck
