#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eck/annihilator.hpp"
#include "eck/bigint.hpp"
#include "eck/diffop.hpp"

namespace eck {

// e0 <-> dz/z, e1 <-> dz/(1-z)
enum class Letter { e0, e1 };
using Word = std::vector<Letter>;

// "()", "(e1)", "(e0,e1)"
std::string word_str(const Word& w);

// Iterated integral with the first letter outermost: the empty word is 1
// and (l, u) is the antiderivative of form(l) * series(u) vanishing at a.
// constants, if given, are added after each integration, innermost first.
LocalExpansion iterated_integral(const Word& w, const Rational& a, std::size_t M,
                                 const std::vector<Rational>& constants = {});

// All words of length <= m, shorter first, then lexicographic with e0 < e1.
std::vector<Word> words_up_to(unsigned m);
std::vector<Word> words_of_length(unsigned k);

std::vector<LocalExpansion> basis_up_to(unsigned m, const Rational& a, std::size_t M);

// Li_1 = -log(1-z) + const, Li_n' = Li_{n-1}/z, constants zero at a.
LocalExpansion classical_polylog(unsigned n, const Rational& a, std::size_t M);

BasisGenerator polylog_generator(const Rational& a);

struct AnnihilationReport {
  unsigned m = 0;
  std::size_t order = 0;
  std::size_t basis_size = 0;
  std::size_t certified_depth = 0;
  Rational max_residual;
  bool annihilates = false;
  // Length m+1 words sent to nonzero polynomials of degree <= 2^(m+1)-1.
  std::size_t witnesses = 0;
  std::size_t witnesses_ok = 0;
  int max_witness_degree = -1;

  bool passed() const { return annihilates && witnesses == witnesses_ok; }
};

AnnihilationReport verify_line_annihilation(unsigned m, const Rational& a, std::size_t M);

}  // namespace eck
