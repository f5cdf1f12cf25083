#include "eck/annihilator.hpp"

#include <algorithm>

#include "eck/error.hpp"
#include "eck/hilbert.hpp"
#include "eck/padic.hpp"

namespace eck {

namespace {

struct LatticeRow {
  std::vector<Rational> v;       // divided coefficients
  std::vector<Rational> lambda;  // combination of the input functions
};

BigInt residue(const Rational& x, const BigInt& p) {
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()) == 0) {
    throw DomainError("entry is not p-integral");
  }
  BigInt r = x.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool is_unit(const Rational& x, const BigInt& p) { return x != 0 && vp(x, p) == Valuation(0); }

void make_primitive(LatticeRow& row, const BigInt& p) {
  Valuation m = Valuation::infinity();
  for (const auto& x : row.v) m = std::min(m, vp(x, p));
  if (m.is_infinite()) throw DomainError("zero row in lattice reduction");
  if (m.value() == 0) return;
  BigInt pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(m.value())));
  const Rational s = m.value() > 0 ? Rational(1, pk) : Rational(pk);
  for (auto& x : row.v) x *= s;
  for (auto& x : row.lambda) x *= s;
}

void axpy(LatticeRow& dst, const Rational& s, const LatticeRow& src) {
  for (std::size_t i = 0; i < dst.v.size(); ++i) dst.v[i] += s * src.v[i];
  for (std::size_t i = 0; i < dst.lambda.size(); ++i) dst.lambda[i] += s * src.lambda[i];
}

std::size_t rank_over_q(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// A nontrivial relation among the rows modulo p, if any.
std::optional<std::vector<BigInt>> relation_mod_p(const std::vector<LatticeRow>& rows,
                                                  const BigInt& p) {
  const std::size_t c = rows.size(), cols = rows[0].v.size();
  std::vector<std::vector<BigInt>> a(c, std::vector<BigInt>(cols + c, BigInt(0)));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = residue(rows[i].v[j], p);
    a[i][cols + i] = 1;
  }
  std::size_t done = 0;
  for (std::size_t col = 0; col < cols && done < c; ++col) {
    std::size_t piv = done;
    while (piv < c && a[piv][col] == 0) ++piv;
    if (piv == c) continue;
    std::swap(a[piv], a[done]);
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), a[done][col].get_mpz_t(), p.get_mpz_t());
    for (auto& x : a[done]) {
      x *= inv;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    }
    for (std::size_t r = 0; r < c; ++r) {
      if (r == done || a[r][col] == 0) continue;
      const BigInt f = a[r][col];
      for (std::size_t k = 0; k < cols + c; ++k) {
        a[r][k] -= f * a[done][k];
        mpz_mod(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), p.get_mpz_t());
      }
    }
    ++done;
  }
  if (done == c) return std::nullopt;
  return std::vector<BigInt>(a[done].begin() + static_cast<std::ptrdiff_t>(cols), a[done].end());
}

// Replaces the rows by a basis of their saturation in the p-integral
// lattice, then echelonizes so that first unit positions are distinct.
std::vector<std::size_t> reduce_lattice(std::vector<LatticeRow>& rows, const BigInt& p) {
  for (std::size_t iter = 0;; ++iter) {
    if (iter > 100000) throw VerificationError("lattice saturation did not terminate");
    for (auto& r : rows) make_primitive(r, p);
    const auto rel = relation_mod_p(rows, p);
    if (!rel) break;
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((*rel)[i] != 0) k = i;
    }
    LatticeRow sum = rows[k];
    for (auto& x : sum.v) x *= (*rel)[k];
    for (auto& x : sum.lambda) x *= (*rel)[k];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != k && (*rel)[i] != 0) axpy(sum, Rational((*rel)[i]), rows[i]);
    }
    rows[k] = std::move(sum);
  }

  const std::size_t c = rows.size(), cols = rows[0].v.size();
  std::vector<LatticeRow> ordered;
  std::vector<std::size_t> ladder;
  std::vector<bool> used(c, false);
  for (std::size_t col = 0; col < cols && ordered.size() < c; ++col) {
    std::size_t piv = c;
    for (std::size_t i = 0; i < c; ++i) {
      if (!used[i] && is_unit(rows[i].v[col], p)) {
        piv = i;
        break;
      }
    }
    if (piv == c) continue;
    used[piv] = true;
    for (std::size_t i = 0; i < c; ++i) {
      if (used[i] || rows[i].v[col] == 0) continue;
      axpy(rows[i], -rows[i].v[col] / rows[piv].v[col], rows[piv]);
    }
    ordered.push_back(rows[piv]);
    ladder.push_back(col);
  }
  if (ordered.size() != c) throw VerificationError("p-adic reduction lost rank");
  rows = std::move(ordered);
  return ladder;
}

RationalFunction determinant(std::vector<std::vector<RationalFunction>> a) {
  const std::size_t n = a.size();
  if (n == 0) return RationalFunction(1);
  // Bareiss elimination.
  RationalFunction prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return RationalFunction();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Valuation min_valuation(const RationalSeries& s, const BigInt& p) {
  Valuation m = Valuation::infinity();
  for (const auto& x : s.coeffs()) m = std::min(m, vp(x, p));
  return m;
}

}  // namespace

AnnihilatorResult annihilator_of_span(const std::vector<RationalFunction>& fns, const Rational& a,
                                      const BigInt& p, const RationalFunction& w,
                                      const AnnihilatorOptions& opts) {
  const std::size_t c = fns.size();
  if (c == 0) return {DiffOp::identity(w), {}, {}};
  const std::size_t wdeg = static_cast<std::size_t>(std::max(0, w.num().degree()));
  const RationalSeries wa = taylor_series(w, a, wdeg + 8);
  if (!is_unit(wa[0], p) || min_valuation(wa, p) < Valuation(0)) {
    throw DomainError("derivation unit is not a p-adic unit at the base point");
  }

  bool all_poly = true;
  std::size_t maxdeg = 0;
  for (const auto& f : fns) {
    if (f.is_zero()) throw DomainError("zero function in span");
    all_poly = all_poly && f.is_polynomial();
    maxdeg = std::max<std::size_t>(maxdeg, static_cast<std::size_t>(std::max(0, f.num().degree())));
  }
  const std::size_t M = opts.depth.value_or(all_poly ? maxdeg : 64);
  const bool exact = all_poly && M >= maxdeg;

  std::vector<LatticeRow> rows(c);
  for (std::size_t i = 0; i < c; ++i) {
    const DividedSeries ds(p, taylor_series(fns[i], a, M));
    for (std::size_t j = 0; j <= M; ++j) rows[i].v.push_back(ds.divided(j));
    rows[i].lambda.assign(c, Rational(0));
    rows[i].lambda[i] = 1;
  }
  {
    std::vector<std::vector<Rational>> m;
    for (const auto& r : rows) m.push_back(r.v);
    if (rank_over_q(std::move(m)) < c) {
      if (exact) throw DomainError("functions are linearly dependent");
      throw TruncationError("insufficient truncation to separate the functions");
    }
  }
  const std::vector<std::size_t> n = reduce_lattice(rows, p);
  for (std::size_t i = 1; i < n.size(); ++i) {
    if (n[i] <= n[i - 1]) throw VerificationError("ladder is not strictly increasing");
  }

  std::vector<RationalFunction> basis(c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < c; ++k) {
      if (rows[i].lambda[k] != 0) basis[i] += RationalFunction(rows[i].lambda[k]) * fns[k];
    }
  }

  std::vector<std::size_t> idx = n;
  idx.push_back(n.back() + 1);
  const std::size_t N = idx.back();
  // F[i][j] = (w d/dz)^{idx_j} basis_i
  std::vector<std::vector<RationalFunction>> F(c);
  for (std::size_t i = 0; i < c; ++i) {
    RationalFunction g = basis[i];
    std::size_t at = 0;
    for (std::size_t j = 0; j <= c; ++j) {
      while (at < idx[j]) {
        g = w * g.derivative();
        ++at;
      }
      F[i].push_back(g);
    }
  }
  std::vector<DiffOp> powers{DiffOp::identity(w)};
  const DiffOp d = DiffOp::derivation(w);
  for (std::size_t k = 1; k <= N; ++k) powers.push_back(compose(d, powers.back()));

  std::vector<RationalFunction> coeffs(N + 1);
  for (std::size_t j = 0; j <= c; ++j) {
    std::vector<std::vector<RationalFunction>> minor(c);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t k = 0; k <= c; ++k) {
        if (k != j) minor[i].push_back(F[i][k]);
      }
    }
    RationalFunction det = determinant(std::move(minor));
    if (det.is_zero()) continue;
    if (j % 2 == 1) det = -det;
    const DiffOp& pw = powers[idx[j]];
    for (std::size_t k = 0; k <= pw.order(); ++k) coeffs[k] += det * pw.coeff(k);
  }
  if (coeffs[N].is_zero()) throw TruncationError("leading minor vanishes; ladder not established");
  DiffOp op(std::move(coeffs), w);

  for (const auto& f : fns) {
    if (!apply(op, f).is_zero()) throw VerificationError("annihilator does not kill its span");
  }
  if (!is_pd_nice(op, a, p, std::max<std::size_t>(M, N + 8), PdCheck::raw)) {
    if (exact) throw VerificationError("annihilator is not PD-nice");
    throw TruncationError("insufficient truncation to establish the ladder");
  }
  if (opts.pole_bound) {
    const P1Divisor& E = *opts.pole_bound;
    if (static_cast<long>(N) > E.degree() + 1) {
      throw VerificationError("annihilator order exceeds deg(E) + 1");
    }
    const P1Divisor bound = (-static_cast<long>(c)) * E -
                            static_cast<long>((c + 1) * N) * opts.omega_plus;
    if (!(div_of_op(op, opts.omega_plus) >= bound)) {
      throw VerificationError("annihilator divisor is below -cE - (c+1)N omega+");
    }
  }
  return {std::move(op), n, std::move(basis)};
}

namespace {

std::vector<std::size_t> graded_dims(unsigned m) {
  const IntSeries hs = hs_surface({0, 3}, 2 * static_cast<std::size_t>(m) + 2);
  std::vector<std::size_t> c;
  for (unsigned i = 0; i <= m; ++i) c.push_back(hs[2 * i].get_ui());
  return c;
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// The unique polynomial in z of degree <= d with expansion s at a.
std::optional<Polynomial> recognize(const RationalSeries& s, const Rational& a, std::size_t d) {
  if (s.trunc() < d + 1) throw TruncationError("expansion too short to recognize a polynomial");
  for (std::size_t j = d + 1; j <= s.trunc(); ++j) {
    if (s[j] != 0) return std::nullopt;
  }
  std::vector<Rational> c(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(d + 1));
  return Polynomial(std::move(c)).shift(-a);
}

std::vector<Polynomial> independent_subset(const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> out;
  std::vector<std::vector<Rational>> rows;
  std::size_t width = 0;
  for (const auto& q : polys) width = std::max(width, q.coeffs().size());
  for (const auto& q : polys) {
    auto v = q.coeffs();
    v.resize(width, Rational(0));
    rows.push_back(v);
    if (rank_over_q(rows) == rows.size()) {
      out.push_back(q);
    } else {
      rows.pop_back();
    }
  }
  return out;
}

PipelineResult run_pipeline(unsigned m, const BasisGenerator& gen, const PipelineOptions& o,
                            std::size_t M) {
  const long delta = o.omega_plus.degree();
  const P1Point inf = P1Point::infinity();
  const auto c = graded_dims(m);
  PipelineResult res{DiffOp::derivation(o.w), {}, M};
  std::size_t prod_ci = 1;
  for (unsigned k = 0; k < m; ++k) {
    const unsigned weight = k + 1;
    const P1Divisor div_k = div_of_op(res.op, o.omega_plus);
    const long d = -div_k.at(inf);
    if (M < res.op.order() + static_cast<std::size_t>(d) + 1) {
      throw TruncationError("truncation too small for recognition");
    }
    std::vector<Polynomial> values;
    for (const auto& f : gen(weight, M)) {
      const LocalExpansion g = apply(res.op, f);
      const auto q = recognize(g.series, o.a, static_cast<std::size_t>(d));
      if (!q) throw VerificationError("recognition failure at weight " + std::to_string(weight));
      if (!q->is_zero()) values.push_back(*q);
    }
    const auto span = independent_subset(values);
    PipelineStage st;
    st.weight = weight;
    st.span_dim = span.size();
    st.span_bound = c[weight];
    if (st.span_dim > st.span_bound) {
      throw VerificationError("value span exceeds the graded dimension");
    }
    if (!span.empty()) {
      std::vector<RationalFunction> fns(span.begin(), span.end());
      AnnihilatorOptions ao;
      ao.pole_bound = P1Divisor(inf, d);
      ao.omega_plus = o.omega_plus;
      auto ann = annihilator_of_span(fns, o.a, o.p, o.w, ao);
      st.ladder = ann.ladder;
      res.op = compose(ann.op, res.op);
    }
    prod_ci *= c[weight] + 1;
    st.order = res.op.order();
    st.order_bound = ipow(static_cast<std::size_t>(delta + 2), weight) * (prod_ci / (c[weight] + 1));
    st.divisor = div_of_op(res.op, o.omega_plus);
    st.divisor_bound = -static_cast<long>(ipow(static_cast<std::size_t>(delta + 2), weight) * prod_ci) *
                       o.omega_plus;
    if (st.order > st.order_bound) throw VerificationError("order bound violated");
    if (!(st.divisor >= st.divisor_bound)) throw VerificationError("divisor bound violated");
    res.stages.push_back(std::move(st));
  }
  for (const auto& f : gen(m, M)) {
    if (!apply(res.op, f).series.is_zero()) {
      throw VerificationError("pipeline operator does not annihilate the basis");
    }
  }
  return res;
}

}  // namespace

std::size_t pipeline_order_bound(unsigned m, long delta) {
  const auto c = graded_dims(m);
  std::size_t b = ipow(static_cast<std::size_t>(delta + 2), m);
  for (unsigned i = 1; i < m; ++i) b *= c[i] + 1;
  return b;
}

PipelineResult kill_weight_pipeline(unsigned m, const BasisGenerator& gen,
                                    const PipelineOptions& opts) {
  for (const auto& [x, k] : opts.omega_plus.support()) {
    if (x.kind() != P1Point::Kind::infinity) {
      throw DomainError("pipeline recognition supports poles at infinity only");
    }
  }
  std::size_t M = opts.truncation.value_or(4 * pipeline_order_bound(m, opts.omega_plus.degree()) + 32);
  for (unsigned attempt = 0;; ++attempt) {
    try {
      return run_pipeline(m, gen, opts, M);
    } catch (const TruncationError&) {
      if (attempt >= opts.retries) throw;
      M *= 2;
    }
  }
}

}  // namespace eck
