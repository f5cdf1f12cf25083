#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "eck/bigint.hpp"

namespace eck {

// Non-negative integer or infinity. Infinity absorbs under + and *, except
// that 0 * infinity = 0.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(long v);  // NOLINT: natural literals convert implicitly
  explicit ExtNat(BigInt v);

  static ExtNat infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
  // Precondition: finite.
  const BigInt& value() const;

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b);
  ExtNat& operator+=(const ExtNat& b) { return *this = *this + b; }
  ExtNat& operator*=(const ExtNat& b) { return *this = *this * b; }

  friend bool operator==(const ExtNat& a, const ExtNat& b);
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

  std::string str() const;
  static ExtNat parse(const std::string& text);

 private:
  BigInt value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtNat& x);

}  // namespace eck
