#include "eck/selmer_dims.hpp"

#include <fstream>
#include <sstream>

#include "eck/error.hpp"

namespace eck {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SelmerDims::SelmerDims(std::initializer_list<std::pair<const unsigned, ExtNat>> init) {
  for (const auto& [n, d] : init) set(n, d);
}

void SelmerDims::set(unsigned n, ExtNat d) {
  if (n == 0) throw DomainError("Selmer dimension index must be >= 1");
  if (d.is_zero()) {
    dims_.erase(n);
  } else {
    dims_[n] = std::move(d);
  }
}

ExtNat SelmerDims::at(unsigned n) const {
  const auto it = dims_.find(n);
  return it == dims_.end() ? ExtNat(0) : it->second;
}

SelmerDims SelmerDims::disjoint_union(const SelmerDims& a, const SelmerDims& b) {
  SelmerDims out = a;
  for (const auto& [n, d] : b.dims_) {
    if (out.dims_.count(n)) throw DomainError("supports are not disjoint");
    out.set(n, d);
  }
  return out;
}

SelmerDims SelmerDims::parse(std::istream& in) {
  SelmerDims out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'n = d'");
    const std::string key = trim(body.substr(0, eq));
    const std::string val = trim(body.substr(eq + 1));
    unsigned long n = 0;
    std::size_t used = 0;
    try {
      n = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size() || key[0] == '-' || n == 0 ||
        n > 0xffffffffUL) {
      throw ParseError(line, "weight index must be a positive integer, got '" + key + "'");
    }
    if (out.dims_.count(static_cast<unsigned>(n))) {
      throw ParseError(line, "duplicate weight index " + key);
    }
    try {
      out.set(static_cast<unsigned>(n), ExtNat::parse(val));
    } catch (const DomainError& e) {
      throw ParseError(line, e.what());
    }
  }
  return out;
}

SelmerDims SelmerDims::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

SelmerDims SelmerDims::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open dimensions file '" + path + "'");
  return parse(in);
}

std::string SelmerDims::str() const {
  std::ostringstream os;
  for (const auto& [n, d] : dims_) os << n << " = " << d << '\n';
  return os.str();
}

void multiply_by_power_of_geometric(std::vector<BigInt>& f, std::size_t n,
                                    const BigInt& d, FactorStrategy strategy) {
  if (d == 0 || f.empty()) return;
  const std::size_t N = f.size() - 1;
  if (n == 0) throw DomainError("weight index must be >= 1");
  if (n > N) return;
  const std::size_t steps = N / n;
  if (strategy == FactorStrategy::automatic) {
    strategy = d <= static_cast<unsigned long>(steps + 1) ? FactorStrategy::geometric
                                                          : FactorStrategy::binomial;
  }
  if (strategy == FactorStrategy::geometric) {
    if (!d.fits_ulong_p()) throw DomainError("exponent too large for repeated division");
    for (unsigned long r = d.get_ui(); r > 0; --r) {
      for (std::size_t k = n; k <= N; ++k) f[k] += f[k - n];
    }
    return;
  }
  // (1 - t^n)^(-d) = sum_j C(d+j-1, j) t^(nj)
  std::vector<BigInt> coef(steps + 1);
  coef[0] = 1;
  for (std::size_t j = 1; j <= steps; ++j) {
    coef[j] = coef[j - 1] * (d + static_cast<unsigned long>(j - 1));
    mpz_divexact_ui(coef[j].get_mpz_t(), coef[j].get_mpz_t(), j);
  }
  for (std::size_t k = N + 1; k-- > 0;) {
    BigInt acc = f[k];
    for (std::size_t j = 1; j * n <= k; ++j) acc += coef[j] * f[k - j * n];
    f[k] = std::move(acc);
  }
}

IntSeries weighted_product(const SelmerDims& dims, std::size_t N, FactorStrategy strategy) {
  std::vector<BigInt> f(N + 1, BigInt(0));
  f[0] = 1;
  for (const auto& [n, d] : dims.entries()) {
    if (n > N) break;
    if (d.is_infinite()) {
      throw DomainError("infinite dimension at weight " + std::to_string(n) +
                        " within truncation order");
    }
    multiply_by_power_of_geometric(f, n, d.value(), strategy);
  }
  return IntSeries(std::move(f));
}

ExtNatSeries to_ext_nat(const IntSeries& f) {
  std::vector<ExtNat> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return ExtNatSeries(std::move(out));
}

}  // namespace eck
