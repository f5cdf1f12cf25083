#include "eck/ext_nat.hpp"

#include "eck/error.hpp"

namespace eck {

ExtNat::ExtNat(long v) : value_(v) {
  if (v < 0) throw DomainError("ExtNat must be non-negative");
}

ExtNat::ExtNat(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw DomainError("ExtNat must be non-negative");
}

ExtNat ExtNat::infinity() {
  ExtNat x;
  x.infinite_ = true;
  return x;
}

const BigInt& ExtNat::value() const {
  if (infinite_) throw DomainError("value() of infinite ExtNat");
  return value_;
}

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(BigInt(a.value_ + b.value_));
}

ExtNat operator*(const ExtNat& a, const ExtNat& b) {
  if (a.is_zero() || b.is_zero()) return ExtNat(0);
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(BigInt(a.value_ * b.value_));
}

bool operator==(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return cmp(a.value_, b.value_) <=> 0;
}

std::string ExtNat::str() const { return infinite_ ? "inf" : value_.get_str(); }

ExtNat ExtNat::parse(const std::string& text) {
  if (text == "inf") return infinity();
  BigInt v;
  if (text.empty() || text[0] == '-' || text[0] == '+' ||
      v.set_str(text, 10) != 0) {
    throw DomainError("not a natural number or 'inf': '" + text + "'");
  }
  return ExtNat(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const ExtNat& x) {
  return os << x.str();
}

}  // namespace eck
