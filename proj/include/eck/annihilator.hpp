#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "eck/bigint.hpp"
#include "eck/diffop.hpp"
#include "eck/divisor.hpp"
#include "eck/polynomial.hpp"

namespace eck {

struct AnnihilatorOptions {
  // Expansion depth for the ladder; defaults to the largest degree for
  // polynomial input and 64 otherwise.
  std::optional<std::size_t> depth;
  // Pole divisor E of the span; enables the order and divisor audits.
  std::optional<P1Divisor> pole_bound;
  P1Divisor omega_plus{P1Point::infinity(), 2};
};

struct AnnihilatorResult {
  DiffOp op;
  // n_1 < ... < n_c
  std::vector<std::size_t> ladder;
  // Basis of the span whose expansions have first unit divided
  // coefficient at the ladder indices.
  std::vector<RationalFunction> basis;
};

// Wronskian-type operator of order n_c + 1 killing the span of fns, with
// leading coefficient a PD-unit at a. Annihilation is checked exactly.
AnnihilatorResult annihilator_of_span(const std::vector<RationalFunction>& fns, const Rational& a,
                                      const BigInt& p,
                                      const RationalFunction& w = DiffOp::default_unit(),
                                      const AnnihilatorOptions& opts = {});

// Expansions at the pipeline base spanning the functions of weight <= w'.
using BasisGenerator = std::function<std::vector<LocalExpansion>(unsigned weight, std::size_t M)>;

struct PipelineOptions {
  Rational a{2};
  BigInt p{5};
  RationalFunction w = DiffOp::default_unit();
  P1Divisor omega_plus{P1Point::infinity(), 2};
  // Defaults to 4 * (order bound) + 32.
  std::optional<std::size_t> truncation;
  unsigned retries = 3;
};

struct PipelineStage {
  unsigned weight = 0;
  std::size_t span_dim = 0;
  std::size_t span_bound = 0;
  std::vector<std::size_t> ladder;
  std::size_t order = 0;
  std::size_t order_bound = 0;
  P1Divisor divisor;
  P1Divisor divisor_bound;
};

struct PipelineResult {
  DiffOp op;
  std::vector<PipelineStage> stages;
  std::size_t truncation = 0;
};

// Order bound (delta+2)^m prod_{i<m} (c_i+1) with c_i = 2^i.
std::size_t pipeline_order_bound(unsigned m, long delta);

// Operator killing everything gen supplies in weight <= m on P^1 minus
// {0, 1, inf}, built stage by stage from annihilators of the rational
// values of the previous stage. Throws VerificationError when an audit fails.
PipelineResult kill_weight_pipeline(unsigned m, const BasisGenerator& gen,
                                    const PipelineOptions& opts = {});

}  // namespace eck
