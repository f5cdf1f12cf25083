#include "eck/divisor.hpp"

#include "eck/error.hpp"

namespace eck {

P1Point P1Point::cluster(const Polynomial& roots_of) {
  if (roots_of.degree() < 2) throw DomainError("cluster needs a polynomial of degree at least 2");
  P1Point x(Kind::cluster);
  x.poly_ = roots_of.monic();
  return x;
}

std::strong_ordering operator<=>(const P1Point& a, const P1Point& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == P1Point::Kind::finite) {
    const int c = cmp(a.value_, b.value_);
    return c <=> 0;
  }
  if (a.kind_ == P1Point::Kind::infinity) return std::strong_ordering::equal;
  if (a.poly_.degree() != b.poly_.degree()) return a.poly_.degree() <=> b.poly_.degree();
  for (std::size_t i = a.poly_.coeffs().size(); i-- > 0;) {
    const int c = cmp(a.poly_.coeffs()[i], b.poly_.coeffs()[i]);
    if (c != 0) return c <=> 0;
  }
  return std::strong_ordering::equal;
}

std::string P1Point::str() const {
  switch (kind_) {
    case Kind::finite:
      return value_.get_str();
    case Kind::infinity:
      return "inf";
    case Kind::cluster:
      return "roots(" + poly_.str() + ")";
  }
  return {};
}

void P1Divisor::add(const P1Point& x, long k) {
  if (k == 0) return;
  const long v = (m_[x] += k);
  if (v == 0) m_.erase(x);
}

long P1Divisor::at(const P1Point& x) const {
  auto it = m_.find(x);
  return it == m_.end() ? 0 : it->second;
}

long P1Divisor::degree() const {
  long d = 0;
  for (const auto& [x, k] : m_) d += k * x.weight();
  return d;
}

bool P1Divisor::is_effective() const {
  for (const auto& [x, k] : m_) {
    if (k < 0) return false;
  }
  return true;
}

P1Divisor operator+(const P1Divisor& a, const P1Divisor& b) {
  P1Divisor r = a;
  for (const auto& [x, k] : b.m_) r.add(x, k);
  return r;
}

P1Divisor operator-(const P1Divisor& a, const P1Divisor& b) { return a + (-1) * b; }

P1Divisor operator*(long k, const P1Divisor& a) {
  P1Divisor r;
  for (const auto& [x, v] : a.m_) r.add(x, k * v);
  return r;
}

std::string P1Divisor::str() const {
  if (m_.empty()) return "0";
  std::string s;
  for (const auto& [x, k] : m_) {
    if (s.empty()) {
      if (k < 0) s += "-";
    } else {
      s += k < 0 ? " - " : " + ";
    }
    const long mag = k < 0 ? -k : k;
    if (mag != 1) s += std::to_string(mag);
    s += "[" + x.str() + "]";
  }
  return s;
}

P1Divisor pointwise_min(const P1Divisor& a, const P1Divisor& b) {
  P1Divisor r;
  for (const auto& [x, k] : a.support()) r.add(x, std::min(k, b.at(x)));
  for (const auto& [x, k] : b.support()) {
    if (a.at(x) == 0) r.add(x, std::min(k, 0L));
  }
  return r;
}

namespace {

void add_zeros(P1Divisor& d, const Polynomial& f, long sign) {
  for (const auto& [part, k] : squarefree_decomposition(f)) {
    Polynomial rest = part;
    for (const auto& r : rational_roots(part)) {
      d.add(P1Point(r), sign * static_cast<long>(k));
      rest = Polynomial::exact_div(rest, Polynomial({Rational(-r), Rational(1)}));
    }
    if (rest.degree() >= 1) d.add(P1Point::cluster(rest), sign * static_cast<long>(k));
  }
}

}  // namespace

P1Divisor divisor_of(const RationalFunction& f) {
  if (f.is_zero()) throw DomainError("divisor of the zero function");
  P1Divisor d;
  add_zeros(d, f.num(), 1);
  add_zeros(d, f.den(), -1);
  d.add(P1Point::infinity(), f.den().degree() - f.num().degree());
  return d;
}

P1Divisor div_of_op(const DiffOp& op, const P1Divisor& omega_plus) {
  const auto h = unit_basis_coeffs(op);
  P1Divisor result;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    const P1Divisor dh = divisor_of(h[i]);
    for (const auto& [x, k] : dh.support()) {
      if (k < 0 && omega_plus.at(x) == 0) {
        throw DomainError("coefficient has a pole at " + x.str() + " outside the support of omega");
      }
    }
    result = pointwise_min(result, dh - static_cast<long>(i) * omega_plus);
  }
  return result;
}

}  // namespace eck
