#include "eck/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "eck/error.hpp"
#include "eck/kronecker.hpp"

namespace eck {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.c_.size() + b.c_.size() - 1;
  if (std::min(a.c_.size(), b.c_.size()) >= 24) {
    auto s = multiply_rational(RationalSeries(a.c_, n - 1), RationalSeries(b.c_, n - 1));
    return Polynomial(s.coeffs());
  }
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<Rational> q(r.size() - db, Rational(0));
  const Rational& lb = b.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational coef = r[k + db] / lb;
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= coef * b.c_[j];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  const Rational l = leading();
  for (auto& x : r.c_) x /= l;
  return r;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::shift(const Rational& a) const {
  std::vector<Rational> v = c_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) v[j - 1] += a * v[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result(1), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string Polynomial::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, std::string_view var) : s_(s), var_(var) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial acc;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = s_[pos_++] == '-';
      skip();
    }
    acc = neg ? -term() : term();
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      Polynomial t = term();
      acc = op == '+' ? acc + t : acc - t;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        const Rational d = number();
        if (d == 0) fail("zero denominator");
        coef /= d;
        skip();
      }
      if (peek() != '*') return Polynomial(coef);
      ++pos_;
      skip();
    }
    if (s_.substr(pos_, var_.size()) != var_) {
      fail(have_coef ? "expected variable after '*'" : "expected a term");
    }
    pos_ += var_.size();
    skip();
    unsigned long k = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      const Rational e = number();
      k = e.get_num().get_ui();
    }
    return Polynomial::monomial(coef, k);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(BigInt(std::string(s_.substr(start, pos_ - start))));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, what + " at column " + std::to_string(pos_ + 1) + " in '" +
                            std::string(s_) + "'");
  }

  std::string_view s_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::string_view var) {
  return PolyParser(text, var).run();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = Polynomial::divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& a) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (a.degree() < 1) return out;
  // Yun's algorithm.
  const Polynomial f = a.monic();
  const Polynomial df = f.derivative();
  Polynomial g = gcd(f, df);
  Polynomial b = Polynomial::exact_div(f, g);
  Polynomial d = Polynomial::exact_div(df, g) - b.derivative();
  unsigned k = 1;
  while (b.degree() >= 1) {
    Polynomial h = gcd(b, d);
    if (h.degree() >= 1) out.emplace_back(h, k);
    b = Polynomial::exact_div(b, h);
    d = Polynomial::exact_div(d, h) - b.derivative();
    ++k;
  }
  return out;
}

std::vector<Rational> rational_roots(const Polynomial& a) {
  std::vector<Rational> roots;
  if (a.degree() < 1) return roots;
  auto [ints, den] = to_integer_vector(a.coeffs());
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  ints.erase(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(low));
  if (ints.size() <= 1) return roots;
  const Polynomial reduced(std::vector<Rational>(ints.begin(), ints.end()));
  auto small_divisors = [](BigInt n) {
    n = abs(n);
    std::vector<BigInt> ds;
    if (!n.fits_ulong_p()) throw DomainError("coefficient too large for rational root search");
    for (auto d : divisors(n.get_ui())) ds.emplace_back(static_cast<unsigned long>(d));
    return ds;
  };
  for (const auto& num : small_divisors(ints.front())) {
    for (const auto& dd : small_divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rational r(num * sign, dd);
        r.canonicalize();
        if (reduced.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) {
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = Polynomial(1);
    return;
  }
  if (den.degree() > 0) {
    const Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = Polynomial::exact_div(num, g);
      den = Polynomial::exact_div(den, g);
    }
  }
  const Rational l = den.leading();
  num_ = num * Polynomial(1 / l);
  den_ = den.monic();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    return RationalFunction(a.num_ + b.num_, Polynomial(1), RationalFunction::Normalized{});
  }
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    return RationalFunction(a.num_ * b.num_, Polynomial(1), RationalFunction::Normalized{});
  }
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
  if (is_polynomial()) return RationalFunction(num_.derivative());
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d == 0) throw DomainError("rational function has a pole at " + x.get_str());
  return num_.eval(x) / d;
}

std::string RationalFunction::str(std::string_view var) const {
  std::string s = "(" + num_.str(var) + ")";
  if (!is_polynomial()) s += "/(" + den_.str(var) + ")";
  return s;
}

RationalSeries taylor_series(const RationalFunction& f, const Rational& a, std::size_t M) {
  const Polynomial n = f.num().shift(a), d = f.den().shift(a);
  if (d.coeff(0) == 0) throw DomainError("rational function has a pole at " + a.get_str());
  std::vector<Rational> q(M + 1, Rational(0));
  const Rational d0 = d.coeff(0);
  const auto& dc = d.coeffs();
  for (std::size_t k = 0; k <= M; ++k) {
    Rational acc = n.coeff(k);
    for (std::size_t j = 1; j < dc.size() && j <= k; ++j) acc -= dc[j] * q[k - j];
    q[k] = acc / d0;
  }
  return RationalSeries(std::move(q));
}

std::pair<std::vector<BigInt>, BigInt> to_integer_vector(const std::vector<Rational>& f) {
  BigInt den(1);
  for (const auto& x : f) {
    if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<BigInt> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = f[i].get_num() * (den / f[i].get_den());
  }
  return {std::move(out), den};
}

RationalSeries multiply_rational(const RationalSeries& f, const RationalSeries& g) {
  const std::size_t n = std::min(f.trunc(), g.trunc());
  auto [a, da] = to_integer_vector(f.coeffs());
  auto [b, db] = to_integer_vector(g.coeffs());
  a.resize(n + 1);
  b.resize(n + 1);
  const std::vector<BigInt> prod = kronecker_multiply(a, b, n + 1);
  const BigInt den = da * db;
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    out[i] = Rational(prod[i], den);
    out[i].canonicalize();
  }
  return RationalSeries(std::move(out));
}

}  // namespace eck
