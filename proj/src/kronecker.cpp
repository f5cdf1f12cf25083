#include "eck/kronecker.hpp"

#include <algorithm>
#include <cstring>

namespace eck {
namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t max_bits(const std::vector<BigInt>& v, std::size_t len) {
  std::size_t b = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (v[i] != 0) b = std::max(b, mpz_sizeinbase(v[i].get_mpz_t(), 2));
  }
  return b;
}

// Writes |v[i]| into slot i of either pos or neg according to the sign and
// returns pos - neg.
BigInt pack(const std::vector<BigInt>& v, std::size_t len, std::size_t slot) {
  const std::size_t limbs = len * slot;
  BigInt pos, neg;
  mp_limb_t* pp = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(limbs));
  mp_limb_t* np = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(limbs));
  std::memset(pp, 0, limbs * sizeof(mp_limb_t));
  std::memset(np, 0, limbs * sizeof(mp_limb_t));
  bool any_neg = false;
  for (std::size_t i = 0; i < len; ++i) {
    const int sg = sgn(v[i]);
    if (sg == 0) continue;
    mp_limb_t* dst = (sg > 0 ? pp : np) + i * slot;
    const std::size_t n = mpz_size(v[i].get_mpz_t());
    std::memcpy(dst, mpz_limbs_read(v[i].get_mpz_t()), n * sizeof(mp_limb_t));
    any_neg |= sg < 0;
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(limbs));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(limbs));
  if (any_neg) pos -= neg;
  return pos;
}

}  // namespace

std::vector<BigInt> kronecker_multiply(const std::vector<BigInt>& a,
                                       const std::vector<BigInt>& b,
                                       std::size_t out_len) {
  const std::size_t la = std::min(a.size(), out_len);
  const std::size_t lb = std::min(b.size(), out_len);
  std::vector<BigInt> out(out_len, BigInt(0));
  const std::size_t ba = max_bits(a, la);
  const std::size_t bb = max_bits(b, lb);
  if (ba == 0 || bb == 0 || out_len == 0) return out;

  // |c_k| < min(la,lb) * 2^(ba+bb); one extra bit for the sign offset.
  std::size_t terms_bits = 1;
  while ((std::size_t{1} << terms_bits) < std::min(la, lb)) ++terms_bits;
  const std::size_t bits = ba + bb + terms_bits + 2;
  const std::size_t slot = (bits + kLimbBits - 1) / kLimbBits;

  const bool same = &a == &b;
  BigInt x = pack(a, la, slot);
  BigInt prod;
  if (same) {
    prod = x * x;
  } else {
    BigInt y = pack(b, lb, slot);
    prod = x * y;
  }

  // Adding 2^(slot_bits-1) in each slot turns every signed digit into an
  // unsigned one; reduction mod 2^(out_len*slot_bits) discards higher slots.
  const std::size_t limbs = out_len * slot;
  BigInt offset;
  {
    mp_limb_t* op = mpz_limbs_write(offset.get_mpz_t(), static_cast<mp_size_t>(limbs));
    std::memset(op, 0, limbs * sizeof(mp_limb_t));
    const mp_limb_t top = mp_limb_t{1} << (kLimbBits - 1);
    for (std::size_t i = 0; i < out_len; ++i) op[i * slot + slot - 1] = top;
    mpz_limbs_finish(offset.get_mpz_t(), static_cast<mp_size_t>(limbs));
  }
  prod += offset;
  mpz_fdiv_r_2exp(prod.get_mpz_t(), prod.get_mpz_t(), limbs * kLimbBits);

  std::vector<mp_limb_t> buf(limbs, 0);
  const std::size_t have = mpz_size(prod.get_mpz_t());
  std::memcpy(buf.data(), mpz_limbs_read(prod.get_mpz_t()), have * sizeof(mp_limb_t));
  BigInt half;
  mpz_setbit(half.get_mpz_t(), slot * kLimbBits - 1);
  for (std::size_t i = 0; i < out_len; ++i) {
    const mp_limb_t* src = buf.data() + i * slot;
    std::size_t n = slot;
    while (n > 0 && src[n - 1] == 0) --n;
    BigInt& c = out[i];
    mp_limb_t* dst = mpz_limbs_write(c.get_mpz_t(), static_cast<mp_size_t>(slot));
    std::memcpy(dst, src, slot * sizeof(mp_limb_t));
    mpz_limbs_finish(c.get_mpz_t(), static_cast<mp_size_t>(n));
    c -= half;
  }
  return out;
}

}  // namespace eck
