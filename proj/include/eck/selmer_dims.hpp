#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>

#include "eck/ext_nat.hpp"
#include "eck/power_series.hpp"

namespace eck {

// Weight index n >= 1 to dimension d_n; absent keys mean 0.
class SelmerDims {
 public:
  SelmerDims() = default;
  SelmerDims(std::initializer_list<std::pair<const unsigned, ExtNat>> init);

  void set(unsigned n, ExtNat d);
  ExtNat at(unsigned n) const;
  const std::map<unsigned, ExtNat>& entries() const noexcept { return dims_; }

  // Union of two maps with disjoint support.
  static SelmerDims disjoint_union(const SelmerDims& a, const SelmerDims& b);

  // Text format: one "n = d" per line, '#' starts a comment, d may be "inf".
  static SelmerDims parse(std::istream& in);
  static SelmerDims parse(const std::string& text);
  static SelmerDims load(const std::string& path);
  std::string str() const;

 private:
  std::map<unsigned, ExtNat> dims_;
};

enum class FactorStrategy { automatic, geometric, binomial };

// prod_{n<=N} (1 - t^n)^(-d_n) truncated at N.
IntSeries weighted_product(const SelmerDims& dims, std::size_t N,
                           FactorStrategy strategy = FactorStrategy::automatic);

// Multiplies f in place by (1 - t^n)^(-d).
void multiply_by_power_of_geometric(std::vector<BigInt>& f, std::size_t n,
                                    const BigInt& d,
                                    FactorStrategy strategy = FactorStrategy::automatic);

ExtNatSeries to_ext_nat(const IntSeries& f);

}  // namespace eck
