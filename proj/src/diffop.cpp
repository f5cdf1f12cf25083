#include "eck/diffop.hpp"

#include <cctype>
#include <optional>

#include "eck/error.hpp"
#include "eck/kronecker.hpp"

namespace eck {

LocalExpansion taylor_expand(const RationalFunction& f, const Rational& a, std::size_t M) {
  RationalSeries s = taylor_series(f, a, M);
  return {a, std::move(s)};
}

DiffOp::DiffOp(std::vector<RationalFunction> coeffs, RationalFunction unit)
    : g_(std::move(coeffs)), w_(std::move(unit)) {
  while (!g_.empty() && g_.back().is_zero()) g_.pop_back();
  if (g_.empty()) throw DomainError("differential operator is zero");
  if (w_.is_zero()) throw DomainError("derivation unit is zero");
}

RationalFunction DiffOp::default_unit() {
  return RationalFunction(Polynomial({Rational(0), Rational(1), Rational(-1)}));
}

DiffOp DiffOp::identity(RationalFunction unit) { return multiplication(1, std::move(unit)); }

DiffOp DiffOp::multiplication(RationalFunction g, RationalFunction unit) {
  return DiffOp({std::move(g)}, std::move(unit));
}

DiffOp DiffOp::derivation(RationalFunction unit) {
  RationalFunction w = unit;
  return DiffOp({RationalFunction(), std::move(w)}, std::move(unit));
}

DiffOp DiffOp::derivation_power(std::size_t n, RationalFunction unit) {
  DiffOp d = derivation(unit);
  DiffOp result = identity(std::move(unit));
  for (std::size_t i = 0; i < n; ++i) result = compose(d, result);
  return result;
}

DiffOp DiffOp::left_multiply(const RationalFunction& h) const {
  std::vector<RationalFunction> out(g_.size());
  for (std::size_t i = 0; i < g_.size(); ++i) out[i] = h * g_[i];
  return DiffOp(std::move(out), w_);
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  if (!(a.w_ == b.w_)) throw DomainError("operators use different derivation units");
  std::vector<RationalFunction> out(std::max(a.g_.size(), b.g_.size()));
  for (std::size_t i = 0; i < a.g_.size(); ++i) out[i] = out[i] + a.g_[i];
  for (std::size_t i = 0; i < b.g_.size(); ++i) out[i] = out[i] + b.g_[i];
  return DiffOp(std::move(out), a.w_);
}

std::string DiffOp::str() const {
  std::string s;
  for (std::size_t i = 0; i < g_.size(); ++i) {
    if (g_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += g_[i].str();
    if (i == 1) s += "*d/dz";
    if (i > 1) s += "*d^" + std::to_string(i) + "/dz^" + std::to_string(i);
  }
  return s;
}

namespace {

class OpParser {
 public:
  explicit OpParser(std::string_view s) : s_(s) {}

  std::vector<RationalFunction> run() {
    std::vector<RationalFunction> g;
    skip();
    if (pos_ == s_.size()) fail("empty operator");
    while (true) {
      RationalFunction c = group();
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        c = c / group();
        skip();
      }
      std::size_t k = 0;
      if (peek() == '*') {
        ++pos_;
        skip();
        k = derivative_power();
        skip();
      }
      if (g.size() <= k) g.resize(k + 1);
      g[k] = g[k] + c;
      if (pos_ == s_.size()) break;
      if (peek() != '+') fail("expected '+'");
      ++pos_;
      skip();
    }
    return g;
  }

 private:
  RationalFunction group() {
    if (peek() != '(') fail("expected '('");
    const std::size_t start = ++pos_;
    int depth = 1;
    while (pos_ < s_.size() && depth > 0) {
      if (s_[pos_] == '(') ++depth;
      if (s_[pos_] == ')') --depth;
      ++pos_;
    }
    if (depth != 0) fail("unbalanced parentheses");
    return RationalFunction(Polynomial::parse(s_.substr(start, pos_ - 1 - start)));
  }

  std::size_t derivative_power() {
    expect("d");
    std::size_t k = 1;
    if (peek() == '^') {
      ++pos_;
      k = number();
    }
    expect("/dz");
    if (peek() == '^') {
      ++pos_;
      if (number() != k) fail("mismatched derivative exponents");
    } else if (k != 1) {
      fail("mismatched derivative exponents");
    }
    return k;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) != tok) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffOp DiffOp::parse(std::string_view text, RationalFunction unit) {
  return DiffOp(OpParser(text).run(), std::move(unit));
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (!(a.unit() == b.unit())) throw DomainError("operators use different derivation units");
  const std::size_t na = a.order(), nb = b.order();
  // derivs[j][r] = r-th derivative of b_j
  std::vector<std::vector<RationalFunction>> derivs(nb + 1);
  for (std::size_t j = 0; j <= nb; ++j) {
    derivs[j].push_back(b.coeff(j));
    for (std::size_t r = 1; r <= na; ++r) derivs[j].push_back(derivs[j].back().derivative());
  }
  std::vector<RationalFunction> out(na + nb + 1);
  for (std::size_t i = 0; i <= na; ++i) {
    const RationalFunction& ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (std::size_t k = 0; k <= i; ++k) {
      const Rational binom(binomial(i, k));
      for (std::size_t j = 0; j <= nb; ++j) {
        const RationalFunction& d = derivs[j][i - k];
        if (d.is_zero()) continue;
        out[j + k] += ai * d * RationalFunction(binom);
      }
    }
  }
  return DiffOp(std::move(out), a.unit());
}

LocalExpansion apply(const DiffOp& op, const LocalExpansion& f) {
  const std::size_t M = f.trunc(), N = op.order();
  if (M < N) throw DomainError("expansion is shorter than the operator order");
  const std::size_t R = M - N;
  auto [cur, fden] = to_integer_vector(f.series.coeffs());
  std::vector<BigInt> acc(R + 1, BigInt(0));
  BigInt acc_den(1);
  for (std::size_t i = 0; i <= N; ++i) {
    if (i > 0) {
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) cur[k] = cur[k + 1] * static_cast<unsigned long>(k + 1);
      cur.pop_back();
    }
    if (op.coeff(i).is_zero()) continue;
    auto [g, gden] = to_integer_vector(taylor_series(op.coeff(i), f.base, R).coeffs());
    std::vector<BigInt> fi(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(R + 1));
    const std::vector<BigInt> prod = kronecker_multiply(g, fi, R + 1);
    BigInt l;
    mpz_lcm(l.get_mpz_t(), acc_den.get_mpz_t(), gden.get_mpz_t());
    if (l != acc_den) {
      const BigInt s = l / acc_den;
      for (auto& x : acc) x *= s;
      acc_den = l;
    }
    const BigInt s = l / gden;
    for (std::size_t k = 0; k <= R; ++k) acc[k] += prod[k] * s;
  }
  const BigInt den = acc_den * fden;
  std::vector<Rational> out(R + 1);
  for (std::size_t k = 0; k <= R; ++k) {
    out[k] = Rational(acc[k], den);
    out[k].canonicalize();
  }
  return {f.base, RationalSeries(std::move(out))};
}

RationalFunction apply(const DiffOp& op, const RationalFunction& f) {
  RationalFunction acc, d = f;
  for (std::size_t i = 0; i <= op.order(); ++i) {
    if (i > 0) d = d.derivative();
    if (!op.coeff(i).is_zero()) acc += op.coeff(i) * d;
  }
  return acc;
}

std::vector<RationalFunction> unit_basis_coeffs(const DiffOp& op) {
  const std::size_t N = op.order();
  std::vector<DiffOp> powers{DiffOp::identity(op.unit())};
  const DiffOp d = DiffOp::derivation(op.unit());
  for (std::size_t n = 1; n <= N; ++n) powers.push_back(compose(d, powers.back()));
  std::vector<RationalFunction> rem = op.coeffs(), h(N + 1);
  for (std::size_t n = N + 1; n-- > 0;) {
    if (rem[n].is_zero()) continue;
    h[n] = rem[n] / powers[n].coeff(n);
    for (std::size_t k = 0; k <= n; ++k) rem[k] = rem[k] - h[n] * powers[n].coeff(k);
  }
  return h;
}

namespace {

std::vector<RationalSeries> expand_coeffs(const DiffOp& op, const Rational& a, std::size_t M) {
  std::vector<RationalSeries> out;
  for (const auto& g : op.coeffs()) out.push_back(taylor_series(g, a, M));
  return out;
}

// g_i / g_N, or nothing when g_N vanishes at the base point.
std::optional<std::vector<RationalSeries>> normalize(const std::vector<RationalSeries>& g) {
  const RationalSeries& lead = g.back();
  if (lead[0] == 0) return std::nullopt;
  const RationalSeries inv = inverse(lead);
  std::vector<RationalSeries> out;
  for (const auto& gi : g) out.push_back(multiply_rational(gi, inv));
  return out;
}

}  // namespace

bool is_pd_nice(const DiffOp& op, const Rational& a, const BigInt& p, std::size_t M,
                PdCheck mode) {
  const auto g = expand_coeffs(op, a, M);
  if (mode == PdCheck::raw) {
    if (!is_pd_unit(DividedSeries(p, g.back()))) return false;
    for (const auto& gi : g) {
      if (!is_pd_integral(DividedSeries(p, gi))) return false;
    }
    return true;
  }
  const auto h = normalize(g);
  if (!h) return false;
  for (const auto& hi : *h) {
    if (!is_pd_integral(DividedSeries(p, hi))) return false;
  }
  return true;
}

DividedSeries pd_primitives_solve(const DiffOp& op, const Rational& a, const BigInt& p,
                                  const std::vector<Rational>& initial, std::size_t M) {
  const std::size_t N = op.order();
  if (initial.size() != N) throw DomainError("need exactly one initial value per order");
  if (M + 1 < N) throw DomainError("depth is smaller than the operator order");
  for (const auto& x : initial) {
    if (vp(x, p) < Valuation(0)) throw DomainError("initial value is not p-integral");
  }
  if (!is_pd_nice(op, a, p, M)) throw DomainError("operator is not PD-nice at the base point");
  std::vector<Rational> av(M + 1, Rational(0));
  std::copy(initial.begin(), initial.end(), av.begin());
  if (N == 0 || M < N) return DividedSeries::from_divided(p, av);
  const std::size_t R = M - N;
  const auto h = *normalize(expand_coeffs(op, a, R));
  // b[l][i]: divided coefficients of the normalized g_l
  std::vector<std::vector<Rational>> b(N, std::vector<Rational>(R + 1));
  for (std::size_t l = 0; l < N; ++l) {
    BigInt fact(1);
    for (std::size_t i = 0; i <= R; ++i) {
      if (i > 0) fact *= static_cast<unsigned long>(i);
      b[l][i] = h[l][i] * fact;
    }
  }
  for (std::size_t k = 0; k <= R; ++k) {
    Rational acc(0);
    for (std::size_t i = 0; i <= k; ++i) {
      const Rational c(binomial(k, i));
      for (std::size_t l = 0; l < N; ++l) {
        if (b[l][i] == 0) continue;
        acc += c * b[l][i] * av[l + k - i];
      }
    }
    av[N + k] = -acc;
  }
  return DividedSeries::from_divided(p, av);
}

DiffOp explicit_line_operator(unsigned m) {
  const RationalFunction w = DiffOp::default_unit();
  DiffOp d = DiffOp::derivation(w);
  for (unsigned i = 1; i <= m; ++i) {
    const std::size_t k = std::size_t{1} << i;
    std::vector<RationalFunction> g(k + 1);
    g[k] = RationalFunction(w.num().pow(k));
    d = compose(DiffOp(std::move(g), w), d);
  }
  return d;
}

}  // namespace eck
