#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "eck/power_series.hpp"
#include "eck/selmer_dims.hpp"

namespace eck {

int moebius(std::uint64_t n);

// Number of primitive necklaces: (1/n) sum_{d|n} mu(n/d) q^d.
BigInt necklace(const BigInt& q, std::uint64_t n);

struct SurfaceSignature {
  unsigned long g = 0;
  unsigned long r = 0;
};

// 1 / (1 - 2g t - (r-1) t^2) to order N.
IntSeries hs_surface(SurfaceSignature sig, std::size_t N);

// Graded dimensions of the Lie algebra of the surface group, with the r-1
// puncture loops in weight 2 (r > 0) or via the closed-surface formula
// (r = 0). Their weighted product reproduces hs_surface.
SelmerDims surface_lie_dims(SurfaceSignature sig, std::size_t N);

// Closed-surface graded rank, evaluated literally as a Moebius-weighted
// binomial sum and checked for integrality.
BigInt labute_dims(unsigned long g, std::uint64_t k);

IntSeries hs_local(const SelmerDims& dims, std::size_t N);

struct StandardVariant {};
struct BalakrishnanDograVariant {
  unsigned long rank = 0;
};
struct NaiveVariant {
  SelmerDims t0_dims;
};

struct GlobalSeriesSpec {
  unsigned long s = 0;
  SelmerDims global_dims;
  std::variant<StandardVariant, BalakrishnanDograVariant, NaiveVariant> variant;
};

IntSeries hs_global(const GlobalSeriesSpec& spec, std::size_t N);

// Series in tau = t^2 for the thrice-punctured line.
//
// F(tau) = prod_{n odd} (1 - tau^n)^(-M(2,n)), the unique series with
// F(0) = 1 and F(tau)^2 = (1 + 2 tau) / (1 - 2 tau) * F(tau^2).
enum class FMethod { automatic, recursion, newton };
IntSeries f_series(std::size_t N, FMethod method = FMethod::automatic);

// (1 - tau)^(-s) * F(tau) * (1 - tau)^2.
IntSeries hs_siegel_glob(unsigned long s, std::size_t N);

// 1 / (1 - 2 tau), the local series in tau.
IntSeries hs_siegel_loc(std::size_t N);

// Substitutes tau = t^2.
IntSeries tau_to_t(const IntSeries& f);

struct SiegelSearch {
  std::optional<std::size_t> m_max;  // defaults to 4^s
  bool allow_long = false;           // required for s >= 8
};

// Least m with sum_{i<=m} glob_i < sum_{i<=m} loc_i for the Siegel series.
std::optional<std::size_t> minimal_m_siegel(unsigned long s, SiegelSearch opts = {});

}  // namespace eck
