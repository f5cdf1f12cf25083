#pragma once

#include <cstddef>
#include <vector>

#include "eck/bigint.hpp"

namespace eck {

// First out_len coefficients of the product of two integer polynomials,
// computed with one big-integer multiplication by packing signed
// coefficients into fixed-width limb slots.
std::vector<BigInt> kronecker_multiply(const std::vector<BigInt>& a,
                                       const std::vector<BigInt>& b,
                                       std::size_t out_len);

}  // namespace eck
