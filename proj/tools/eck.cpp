#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eck/annihilator.hpp"
#include "eck/bounds.hpp"
#include "eck/divisor.hpp"
#include "eck/error.hpp"
#include "eck/hilbert.hpp"
#include "eck/padic.hpp"
#include "eck/polylog.hpp"
#include "eck/selmer_dims.hpp"

using namespace eck;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

class Output {
 public:
  bool records = false;
  std::size_t digits_cap = 0;

  void put(const std::string& key, const std::string& value) {
    std::cout << key << (records ? "\t" : ": ") << value << '\n';
  }
  void put(const std::string& key, const BigInt& v) { put(key, big(v)); }

  // Full digits, or leading and trailing digits plus the exact count.
  std::string big(const BigInt& v) const {
    std::string s = v.get_str();
    const std::size_t sign = s[0] == '-' ? 1 : 0;
    const std::size_t digits = s.size() - sign;
    if (digits_cap == 0 || digits <= digits_cap) return s;
    const std::size_t keep = std::max<std::size_t>(1, digits_cap / 2);
    return s.substr(0, sign + keep) + "..." + s.substr(s.size() - keep) + " (" +
           std::to_string(digits) + " digits)";
  }

  std::string series(const IntSeries& f) const {
    std::string s;
    for (std::size_t i = 0; i <= f.trunc(); ++i) {
      if (i) s += ',';
      s += big(f[i]);
    }
    return s;
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<BigInt> int_list(const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& s : split(text, ',')) {
    BigInt x;
    if (x.set_str(s, 10) != 0) throw UsageError("not an integer: '" + s + "'");
    out.push_back(x);
  }
  return out;
}

Rational rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError("not a rational number: '" + text + "'");
  }
}

// ---------------------------------------------------------------- hs
struct HsArgs {
  std::string surface, local, global, naive;
  unsigned long s = 0;
  std::optional<unsigned long> bd;
  std::size_t trunc = 10;
};

int run_hs(const HsArgs& a, Output& out) {
  const int sources = !a.surface.empty() + !a.local.empty() + !a.global.empty();
  if (sources != 1) throw UsageError("give exactly one of --surface, --local, --global");
  IntSeries f;
  if (!a.surface.empty()) {
    const auto gr = int_list(a.surface);
    if (gr.size() != 2 || gr[0] < 0 || gr[1] < 0) throw UsageError("--surface expects g,r");
    f = hs_surface({gr[0].get_ui(), gr[1].get_ui()}, a.trunc);
  } else if (!a.local.empty()) {
    f = hs_local(SelmerDims::load(a.local), a.trunc);
  } else {
    GlobalSeriesSpec spec;
    spec.s = a.s;
    spec.global_dims = SelmerDims::load(a.global);
    if (a.bd && !a.naive.empty()) throw UsageError("--bd and --naive are exclusive");
    if (a.bd) spec.variant = BalakrishnanDograVariant{*a.bd};
    if (!a.naive.empty()) spec.variant = NaiveVariant{SelmerDims::load(a.naive)};
    f = hs_global(spec, a.trunc);
  }
  out.put("coefficients", out.series(f));
  out.put("partial_sums", out.series(partial_sums(f)));
  return 0;
}

// ---------------------------------------------------------------- minm
struct MinmArgs {
  std::string glob, loc;
  std::size_t max = 0;
};

int run_minm(const MinmArgs& a, Output& out) {
  const IntSeries g = weighted_product(SelmerDims::load(a.glob), a.max);
  const IntSeries l = weighted_product(SelmerDims::load(a.loc), a.max);
  const auto m = minimal_strict_m(g, l, a.max);
  out.put("m", m ? std::to_string(*m) : std::string("none"));
  return 0;
}

// ---------------------------------------------------------------- siegel
struct SiegelArgs {
  unsigned long s = 0;
  std::string set;
  bool allow_long = false;
  std::optional<std::size_t> max;
};

int run_siegel(const SiegelArgs& a, Output& out) {
  if (a.s >= 8 && !a.allow_long) throw UsageError("s >= 8 needs --long");
  SiegelSearch opts;
  opts.allow_long = a.allow_long;
  opts.m_max = a.max;
  const auto m = minimal_m_siegel(a.s, opts);
  out.put("s", std::to_string(a.s));
  out.put("minimal_m", m ? std::to_string(*m) : std::string("none"));
  if (a.s <= 15) {
    out.put("bound", bound_siegel(a.s));
  } else {
    out.put("bound", "8*6^" + std::to_string(a.s) + "*2^(4^" + std::to_string(a.s) + ")");
  }
  if (!a.set.empty()) {
    const auto primes = int_list(a.set);
    const SiegelChain c = bound_siegel_chain(std::set<BigInt>(primes.begin(), primes.end()));
    if (c.p == 0) {
      out.put("chain_bound", "0");
    } else {
      out.put("chain_prime", c.p);
      out.put("chain_kappa_times_pminus2", c.kappa_times_pminus2->str());
      out.put("chain_intermediate", c.intermediate);
      out.put("chain_bound", c.final_bound);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- bound
struct BoundArgs {
  std::string kind = "main";
  unsigned long g = 2, r = 0, s = 0, m = 1, n = 1, e = 1, f = 1;
  std::string p = "3", points = "1", n_in, n_out, c, base;
};

int run_bound(const BoundArgs& a, Output& out) {
  LocalFieldData field{BigInt(a.p), a.e, a.f};
  if (a.kind == "coarse") {
    BigInt prod(1);
    for (const auto& x : int_list(a.n_out)) prod *= x;
    CoarseOptions opts;
    opts.materialize = true;
    const CoarseBound cb = bound_coarse(a.g, a.n, prod, BigInt(a.points), field, opts);
    out.put("m", cb.m);
    out.put("binomial_exponent", cb.binomial_exponent);
    out.put("digits_first", cb.digits_first);
    out.put("digits_second", cb.digits_second);
    out.put("digits_upper", cb.digits_upper);
    out.put("kappa", cb.kappa.str());
    out.put("bound", cb.value ? out.big(*cb.value) : std::string("not materialized"));
    return 0;
  }
  const auto compute = [&]() -> BoundResult {
    if (a.kind == "weight") {
      const BigInt base = a.base.empty() ? weight_base_default(a.g, a.r) : BigInt(a.base);
      return bound_weight(field, BigInt(a.points), a.m, int_list(a.c), base);
    }
    if (a.kind != "main" && a.kind != "refined") throw UsageError("unknown bound kind '" + a.kind + "'");
    CurveBoundInput in;
    in.g = a.g;
    in.r = a.r;
    in.s = a.s;
    in.p = BigInt(a.p);
    in.n_ell_in_S = int_list(a.n_in);
    in.n_ell_out_S = int_list(a.n_out);
    in.points_mod_p = BigInt(a.points);
    in.m = a.m;
    in.c_loc = int_list(a.c);
    return a.kind == "main" ? bound_main(in) : bound_refined(in);
  };
  const BoundResult res = compute();
  out.put("integer_factor", res.integer_factor);
  out.put("kappa", res.kappa.str());
  out.put("bound", res.bound);
  return 0;
}

// ---------------------------------------------------------------- operator
struct OperatorArgs {
  std::optional<unsigned> line;
  std::string span, parse, base = "2", p = "5";
};

int run_operator(const OperatorArgs& a, Output& out) {
  const int sources = a.line.has_value() + !a.span.empty() + !a.parse.empty();
  if (sources != 1) throw UsageError("give exactly one of --line, --span, --parse");
  const P1Divisor omega_plus(P1Point::infinity(), 2);
  std::optional<DiffOp> op;
  if (a.line) {
    op = explicit_line_operator(*a.line);
  } else if (!a.parse.empty()) {
    op = DiffOp::parse(a.parse);
  } else {
    std::vector<RationalFunction> fns;
    for (const auto& s : split(a.span, ';')) fns.emplace_back(Polynomial::parse(s));
    const auto r = annihilator_of_span(fns, rational_arg(a.base), BigInt(a.p));
    std::string ladder;
    for (auto n : r.ladder) ladder += (ladder.empty() ? "" : ",") + std::to_string(n);
    out.put("ladder", ladder);
    op = r.op;
  }
  out.put("order", std::to_string(op->order()));
  try {
    out.put("divisor", div_of_op(*op, omega_plus).str());
  } catch (const DomainError&) {
    out.put("divisor", "undefined (pole outside 2[inf])");
  }
  out.put("operator", op->str());
  return 0;
}

// ---------------------------------------------------------------- verify-polylog
struct VerifyArgs {
  unsigned m = 1;
  std::string base = "2";
  std::size_t trunc = 200;
  bool pipeline = false;
  bool allow_large = false;
  std::string p = "5";
};

int run_verify(const VerifyArgs& a, Output& out) {
  if (a.m > 4 && !a.allow_large) throw UsageError("--m above 4 needs --allow-large");
  const Rational base = rational_arg(a.base);
  out.put("m", std::to_string(a.m));
  out.put("base", base.get_str());
  if (!a.pipeline) {
    const auto r = verify_line_annihilation(a.m, base, a.trunc);
    out.put("mode", "explicit");
    out.put("order", std::to_string(r.order));
    out.put("basis_size", std::to_string(r.basis_size));
    out.put("certified_depth", std::to_string(r.certified_depth));
    out.put("max_residual", r.max_residual.get_str());
    out.put("witnesses", std::to_string(r.witnesses_ok) + "/" + std::to_string(r.witnesses));
    out.put("max_witness_degree", std::to_string(r.max_witness_degree));
    out.put("result", r.passed() ? "pass" : "fail");
    return r.passed() ? 0 : kExitFail;
  }
  PipelineOptions opts;
  opts.a = base;
  opts.p = BigInt(a.p);
  const auto r = kill_weight_pipeline(a.m, polylog_generator(base), opts);
  out.put("mode", "pipeline");
  out.put("truncation", std::to_string(r.truncation));
  for (const auto& st : r.stages) {
    const std::string k = "stage" + std::to_string(st.weight) + "_";
    out.put(k + "span", std::to_string(st.span_dim) + "/" + std::to_string(st.span_bound));
    out.put(k + "order", std::to_string(st.order) + " <= " + std::to_string(st.order_bound));
    out.put(k + "divisor", st.divisor.str() + " >= " + st.divisor_bound.str());
  }
  const auto basis = basis_up_to(a.m, base, a.trunc);
  Rational residual(0);
  for (const auto& f : basis) {
    if (f.trunc() < r.op.order()) throw UsageError("--trunc is below the operator order");
    const LocalExpansion g = apply(r.op, f);
    for (const auto& x : g.series.coeffs()) residual = std::max(residual, Rational(abs(x)));
  }
  out.put("order", std::to_string(r.op.order()));
  out.put("basis_size", std::to_string(basis.size()));
  out.put("max_residual", residual.get_str());
  out.put("result", residual == 0 ? "pass" : "fail");
  return residual == 0 ? 0 : kExitFail;
}

// ---------------------------------------------------------------- newton
struct NewtonArgs {
  std::string p = "3", coeffs, lambda;
};

int run_newton(const NewtonArgs& a, Output& out) {
  std::vector<Rational> c;
  for (const auto& s : split(a.coeffs, ',')) c.push_back(rational_arg(s));
  if (c.empty()) throw UsageError("--coeffs is empty");
  const NewtonPolygon poly = newton_polygon(c, BigInt(a.p));
  std::string v;
  for (const auto& x : poly.vertices) {
    v += (v.empty() ? "" : " ") + std::string("(") + std::to_string(x.index) + "," +
         std::to_string(x.valuation) + ")";
  }
  out.put("vertices", v);
  std::string seg;
  for (const auto& [slope, len] : poly.segments()) {
    seg += (seg.empty() ? "" : " ") + slope.get_str() + "x" + std::to_string(len);
  }
  out.put("root_valuations", seg.empty() ? std::string("none") : seg);
  if (!a.lambda.empty()) {
    out.put("zeros", std::to_string(count_zeros(poly, rational_arg(a.lambda))));
  }
  return 0;
}

constexpr const char* kFooter = R"(Records keys (--format records prints key<TAB>value per line):
  hs              coefficients, partial_sums
  minm            m
  siegel          s, minimal_m, bound, chain_prime, chain_kappa_times_pminus2,
                  chain_intermediate, chain_bound
  bound           integer_factor, kappa, bound; coarse adds m, binomial_exponent,
                  digits_first, digits_second, digits_upper
  operator        ladder, order, divisor, operator
  verify-polylog  m, base, mode, order, basis_size, certified_depth, truncation,
                  stageK_span, stageK_order, stageK_divisor, max_residual,
                  witnesses, max_witness_degree, result
  newton          vertices, root_valuations, zeros
Exit status: 0 success, 1 verification failure, 2 usage or input error.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hilbert series, bounds and differential operators"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Output out;
  std::string format = "plain";
  app.add_option("--format", format, "plain or records")
      ->check(CLI::IsMember({"plain", "records"}));
  app.add_option("--digits-cap", out.digits_cap, "elide integers with more digits (0: never)");

  HsArgs hs;
  auto* c_hs = app.add_subcommand("hs", "Hilbert series coefficients and partial sums");
  c_hs->add_option("--surface", hs.surface, "g,r");
  c_hs->add_option("--local", hs.local, "SelmerDims file");
  c_hs->add_option("--global", hs.global, "SelmerDims file");
  c_hs->add_option("--s", hs.s, "number of bad primes");
  c_hs->add_option("--bd", hs.bd, "rank for the refined global series");
  c_hs->add_option("--naive", hs.naive, "SelmerDims file of the T_0 dimensions");
  c_hs->add_option("--trunc", hs.trunc, "truncation order")->required();

  MinmArgs mm;
  auto* c_minm = app.add_subcommand("minm", "least m with strict partial-sum inequality");
  c_minm->add_option("--glob", mm.glob, "SelmerDims file")->required();
  c_minm->add_option("--loc", mm.loc, "SelmerDims file")->required();
  c_minm->add_option("--max", mm.max, "largest m to test")->required();

  SiegelArgs sg;
  auto* c_siegel = app.add_subcommand("siegel", "S-unit equation: minimal m, bound, chain");
  c_siegel->add_option("--s", sg.s, "size of S")->required();
  c_siegel->add_option("--set", sg.set, "comma-separated primes of S");
  c_siegel->add_option("--max", sg.max, "largest m to search");
  c_siegel->add_flag("--long", sg.allow_long, "allow the long searches s >= 8");

  BoundArgs bd;
  auto* c_bound = app.add_subcommand("bound", "upper bounds for the number of points");
  c_bound->add_option("--kind", bd.kind, "main, refined, weight or coarse")
      ->check(CLI::IsMember({"main", "refined", "weight", "coarse"}));
  c_bound->add_option("--g", bd.g, "genus");
  c_bound->add_option("--r", bd.r, "number of punctures");
  c_bound->add_option("--s", bd.s, "number of primes in S");
  c_bound->add_option("--p", bd.p, "auxiliary prime");
  c_bound->add_option("--e", bd.e, "ramification index");
  c_bound->add_option("--f", bd.f, "residue degree");
  c_bound->add_option("--points", bd.points, "points modulo p");
  c_bound->add_option("--n-in", bd.n_in, "n_l for l in S, comma-separated");
  c_bound->add_option("--n-out", bd.n_out, "n_l for l outside S, comma-separated");
  c_bound->add_option("--m", bd.m, "weight index m");
  c_bound->add_option("--c", bd.c, "c_1,...,c_{m-1}");
  c_bound->add_option("--base", bd.base, "weight base for --kind weight");
  c_bound->add_option("--n", bd.n, "depth n for --kind coarse");

  OperatorArgs op;
  auto* c_op = app.add_subcommand("operator", "build or normalize a differential operator");
  c_op->add_option("--line", op.line, "explicit operator killing weight <= m");
  c_op->add_option("--span", op.span, "polynomials separated by ';' to annihilate");
  c_op->add_option("--parse", op.parse, "operator text to normalize");
  c_op->add_option("--base", op.base, "base point");
  c_op->add_option("--p", op.p, "prime");

  VerifyArgs vp_args;
  auto* c_verify = app.add_subcommand("verify-polylog", "check annihilation of the polylog basis");
  c_verify->add_option("--m", vp_args.m, "weight")->required();
  c_verify->add_option("--base", vp_args.base, "base point, not 0 or 1");
  c_verify->add_option("--trunc", vp_args.trunc, "series truncation");
  c_verify->add_option("--p", vp_args.p, "prime for the pipeline");
  c_verify->add_flag("--pipeline", vp_args.pipeline, "build the operator recursively");
  c_verify->add_flag("--allow-large", vp_args.allow_large, "permit m above 4");

  NewtonArgs nw;
  auto* c_newton = app.add_subcommand("newton", "Newton polygon and zero count");
  c_newton->add_option("--p", nw.p, "prime");
  c_newton->add_option("--coeffs", nw.coeffs, "c_0,c_1,... as rationals")->required();
  c_newton->add_option("--lambda", nw.lambda, "count zeros with valuation >= lambda");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  out.records = format == "records";

  try {
    if (*c_hs) return run_hs(hs, out);
    if (*c_minm) return run_minm(mm, out);
    if (*c_siegel) return run_siegel(sg, out);
    if (*c_bound) return run_bound(bd, out);
    if (*c_op) return run_operator(op, out);
    if (*c_verify) return run_verify(vp_args, out);
    if (*c_newton) return run_newton(nw, out);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const TruncationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
