#include "eck/polylog.hpp"

#include "eck/error.hpp"

namespace eck {

std::string word_str(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += w[i] == Letter::e0 ? "e0" : "e1";
  }
  return s + ")";
}

namespace {

void check_base(const Rational& a) {
  if (a == 0 || a == 1) throw DomainError("base point must avoid 0 and 1");
}

// Antiderivative of form(l) * s vanishing at t = 0, plus c.
RationalSeries integrate_letter(Letter l, const Rational& a, const RationalSeries& s,
                                const Rational& c) {
  const std::size_t M = s.trunc();
  // form(e0) = 1/(a + t), form(e1) = 1/((1 - a) - t)
  const Rational b = l == Letter::e0 ? a : Rational(1 - a);
  const Rational sign = l == Letter::e0 ? Rational(1) : Rational(-1);
  std::vector<Rational> y(M + 1), out(M + 1);
  for (std::size_t k = 0; k <= M; ++k) {
    Rational acc = s[k];
    if (k > 0) acc -= sign * y[k - 1];
    y[k] = acc / b;
  }
  out[0] = c;
  for (std::size_t k = 1; k <= M; ++k) out[k] = y[k - 1] / static_cast<unsigned long>(k);
  return RationalSeries(std::move(out));
}

}  // namespace

LocalExpansion iterated_integral(const Word& w, const Rational& a, std::size_t M,
                                 const std::vector<Rational>& constants) {
  check_base(a);
  if (!constants.empty() && constants.size() != w.size()) {
    throw DomainError("need one integration constant per letter");
  }
  RationalSeries s = RationalSeries::one(M);
  for (std::size_t i = w.size(); i-- > 0;) {
    const std::size_t step = w.size() - 1 - i;
    s = integrate_letter(w[i], a, s, constants.empty() ? Rational(0) : constants[step]);
  }
  return {a, std::move(s)};
}

std::vector<Word> words_of_length(unsigned k) {
  std::vector<Word> out;
  const std::size_t count = std::size_t{1} << k;
  for (std::size_t bits = 0; bits < count; ++bits) {
    Word w(k);
    for (unsigned i = 0; i < k; ++i) {
      w[i] = (bits >> (k - 1 - i)) & 1 ? Letter::e1 : Letter::e0;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> words_up_to(unsigned m) {
  std::vector<Word> out;
  for (unsigned k = 0; k <= m; ++k) {
    auto level = words_of_length(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<LocalExpansion> basis_up_to(unsigned m, const Rational& a, std::size_t M) {
  check_base(a);
  std::vector<LocalExpansion> out{{a, RationalSeries::one(M)}};
  // Level k words are (l, u) with u of length k-1; prev holds level k-1 in
  // lexicographic order, so the new level stays lexicographic.
  std::vector<RationalSeries> prev{RationalSeries::one(M)};
  for (unsigned k = 1; k <= m; ++k) {
    std::vector<RationalSeries> level;
    for (Letter l : {Letter::e0, Letter::e1}) {
      for (const auto& u : prev) level.push_back(integrate_letter(l, a, u, 0));
    }
    for (const auto& s : level) out.push_back({a, s});
    prev = std::move(level);
  }
  return out;
}

LocalExpansion classical_polylog(unsigned n, const Rational& a, std::size_t M) {
  if (n == 0) throw DomainError("polylogarithm weight must be at least 1");
  Word w(n, Letter::e0);
  w.back() = Letter::e1;
  return iterated_integral(w, a, M);
}

BasisGenerator polylog_generator(const Rational& a) {
  return [a](unsigned weight, std::size_t M) { return basis_up_to(weight, a, M); };
}

AnnihilationReport verify_line_annihilation(unsigned m, const Rational& a, std::size_t M) {
  const DiffOp op = explicit_line_operator(m);
  AnnihilationReport r;
  r.m = m;
  r.order = op.order();
  if (M < r.order) throw DomainError("truncation is below the operator order");
  r.certified_depth = M - r.order;
  r.max_residual = 0;
  const auto basis = basis_up_to(m + 1, a, M);
  const std::size_t lower = (std::size_t{1} << (m + 1)) - 1;
  r.basis_size = lower;
  const long degree_cap = static_cast<long>(lower);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const LocalExpansion g = apply(op, basis[i]);
    if (i < lower) {
      for (const auto& x : g.series.coeffs()) r.max_residual = std::max(r.max_residual, Rational(abs(x)));
      continue;
    }
    ++r.witnesses;
    int deg = -1;
    for (std::size_t k = 0; k <= g.trunc(); ++k) {
      if (g.series[k] != 0) deg = static_cast<int>(k);
    }
    r.max_witness_degree = std::max(r.max_witness_degree, deg);
    if (deg >= 0 && deg <= degree_cap && static_cast<long>(g.trunc()) > degree_cap) ++r.witnesses_ok;
  }
  r.annihilates = r.max_residual == 0;
  return r;
}

}  // namespace eck
