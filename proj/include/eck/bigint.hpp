#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace eck {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

BigInt pow(const BigInt& base, unsigned long exp);
BigInt factorial(unsigned long n);
BigInt binomial(const BigInt& n, unsigned long k);

bool is_prime(const BigInt& n);
// Smallest prime strictly greater than n.
BigInt next_prime(const BigInt& n);

// Prime factorization by trial division, ascending primes with exponents.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Exact decimal digit count of |x| (1 for zero).
std::size_t decimal_digits(const BigInt& x);

Rational parse_rational(const std::string& text);

}  // namespace eck
