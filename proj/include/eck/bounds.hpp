#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "eck/bigint.hpp"
#include "eck/directed_real.hpp"

namespace eck {

struct LocalFieldData {
  BigInt p;
  unsigned long e = 1;  // ramification index
  unsigned long f = 1;  // residue degree
};

// ceil((e + 1) / (p - 1))
unsigned long theta(const LocalFieldData& field);

// p^((theta-1) f) * (1 + e / ((theta - e/(p-1)) log p)), rounded upwards.
UpperBoundReal kappa(const LocalFieldData& field, mpfr_prec_t prec = kDefaultPrecision);

struct CurveBoundInput {
  unsigned long g = 0;
  unsigned long r = 0;
  unsigned long s = 0;
  BigInt p;
  std::vector<BigInt> n_ell_in_S;
  std::vector<BigInt> n_ell_out_S;
  BigInt points_mod_p;
  unsigned long m = 1;
  std::vector<BigInt> c_loc;  // c_1, ..., c_{m-1}; extra entries are ignored
};

struct BoundResult {
  BigInt integer_factor;  // everything except kappa
  UpperBoundReal kappa;
  BigInt bound;  // ceil(kappa * integer_factor)
};

// kappa * prod n_l * #X(F_p) * (4g-2)^m * prod_{i<m} (c_i + 1); needs r = s = 0.
BoundResult bound_main(const CurveBoundInput& in, mpfr_prec_t prec = kDefaultPrecision);

// kappa * prod_{l in S}(n_l + r) * prod_{l not in S} n_l * #Y(F_p)
//       * (4g+2r-2)^m * prod_{i<m}(c_i + 1)
BoundResult bound_refined(const CurveBoundInput& in, mpfr_prec_t prec = kDefaultPrecision);

// kappa_v * points * base^m * prod_{i<m}(c_i + 1)
BoundResult bound_weight(const LocalFieldData& field, const BigInt& points_special,
                         unsigned long m, const std::vector<BigInt>& c, const BigInt& base,
                         mpfr_prec_t prec = kDefaultPrecision);

BigInt weight_base_default(unsigned long g, unsigned long r);
// Base 2g + r + N available from an N-small differential.
BigInt weight_base_small(unsigned long g, unsigned long r, unsigned long N);

enum class CurveClass { genus0, genus1, hyperelliptic, general };

// Smallest N for which an N-small differential is known to exist.
unsigned long n_small(unsigned long g, unsigned long r, const BigInt& p, CurveClass cls);

struct CoarseOptions {
  std::size_t digit_cap = 100000;  // refuse to materialise larger bounds
  bool materialize = false;
  mpfr_prec_t prec = kDefaultPrecision;
};

struct CoarseBound {
  BigInt m;                 // n^((2g)^n)
  BigInt binomial_exponent; // C(m, 2)
  BigInt digits_first;      // decimal digits of (4g-2)^m
  BigInt digits_second;     // decimal digits of (2g)^C(m,2)
  BigInt digits_upper;      // upper bound on the digits of the whole bound
  UpperBoundReal kappa;
  std::optional<BigInt> value;
};

// kappa * prod n_l * #X(F_p) * (4g-2)^m * (2g)^C(m,2) with m = n^((2g)^n).
CoarseBound bound_coarse(unsigned long g, unsigned long n, const BigInt& n_ell_product,
                         const BigInt& points_mod_p, const LocalFieldData& field,
                         const CoarseOptions& opts = {});

// Exact decimal digit count of base^exponent for base >= 1.
BigInt digits_of_power(const BigInt& base, const BigInt& exponent,
                       mpfr_prec_t prec = kDefaultPrecision);

// 8 * 6^s * 2^(4^s)
BigInt bound_siegel(unsigned long s);

struct SiegelChain {
  BigInt p;  // least prime outside S; 0 when 2 is not in S
  std::optional<UpperBoundReal> kappa_times_pminus2;
  BigInt intermediate;  // ceil(kappa_p * 3^s * (p-2) * 2^(4^s+1))
  BigInt final_bound;   // 8 * 6^s * 2^(4^s)
};

SiegelChain bound_siegel_chain(const std::set<BigInt>& S, mpfr_prec_t prec = kDefaultPrecision);

struct RankExample {
  std::size_t minimal_m;        // least m with the strict partial-sum inequality
  // Least k with [t^k] 4(1-t)^-(g+2) < [t^k] (1-t)^-(g+3), the majorants of the
  // (1+t)^2/(1-t) multiples of glob and loc.
  std::size_t bounding_index;
  std::optional<std::size_t> window_m;  // least m in {3g+5, 3g+6, 3g+7} that works
};

// glob = (1-t)^-(g+1), loc = (1-t)^-g (1-t^2)^-2.
RankExample example_rank_gplus1_m(unsigned long g);

}  // namespace eck
