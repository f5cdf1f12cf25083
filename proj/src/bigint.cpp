#include "eck/bigint.hpp"

#include <algorithm>

#include "eck/error.hpp"

namespace eck {

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

bool is_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

BigInt next_prime(const BigInt& n) {
  BigInt r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.push_back({q, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [q, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t qk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      qk *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t decimal_digits(const BigInt& x) {
  if (x == 0) return 1;
  // mpz_sizeinbase is exact or one too large for base 10.
  std::size_t d = mpz_sizeinbase(x.get_mpz_t(), 10);
  BigInt ten_pow = pow(BigInt(10), d - 1);
  return abs(x) < ten_pow ? d - 1 : d;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty() || q.set_str(t, 10) != 0) {
    throw DomainError("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace eck
