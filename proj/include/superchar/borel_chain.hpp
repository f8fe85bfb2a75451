#pragma once

#include <vector>

#include "superchar/root_data.hpp"

namespace superchar {

// Simple root system of a Borel subgroup containing T. chain_index records the
// position in the canonical odd-reflection chain (0 = standard), -1 when the
// system was produced by an off-chain reflection. Equality is as unordered
// sets; the stored order follows construction order for reproducible printing.
struct SimpleSystem {
  std::vector<Root> roots;
  int chain_index = -1;

  bool contains(const Root& r) const;
  bool same_set(const SimpleSystem& o) const;
};

SimpleSystem standard_simple_system(const GLContext& ctx);

// Replace beta by -beta, keep roots orthogonal to beta and shift the others by
// +beta. beta must be an odd member of pi.
SimpleSystem odd_reflect(const GLContext& ctx, const SimpleSystem& pi, const Root& beta);

// The i-fold composite of odd_reflect along beta_1..beta_i, 0 <= i <= mn.
// Memoized per (m, n) behind an internally synchronized cache.
const SimpleSystem& simple_system(const GLContext& ctx, int i);

// Which of +-beta_j is positive in the chain system at index i.
struct OddPositiveSet {
  std::vector<bool> negated;  // negated[j] true when -beta_{j+1} is positive
};

OddPositiveSet xi_support(const GLContext& ctx, int i);

// lambda_0 = lambda, lambda_i = lambda_{i-1} - beta_i; length mn+1.
std::vector<Weight> lambda_chain(const GLContext& ctx, const Weight& lambda);

struct TypicalityWitness {
  bool value = false;
  int first_failing = 0;        // 1-based index of first failing beta_i, 0 if none
  std::vector<Int> pairings;    // (lambda + rho, beta_i) for every i
};

// (lambda+rho, beta_i) != 0 for all i; requires dominant lambda.
TypicalityWitness is_typical(const GLContext& ctx, const Weight& lambda);
// Same nonvanishing modulo p.
TypicalityWitness is_p_typical(const GLContext& ctx, const Weight& lambda);

struct TrackedHighest {
  Weight weight;
  bool nondominant_intermediate = false;
  int first_nondominant_step = 0;  // 1-based step where dominance first failed
};

// mu^(0) = mu; mu^(i) = mu^(i-1) unless (mu^(i-1), beta_i) is nonzero mod p,
// in which case beta_i is subtracted. Flags any non-dominant intermediate.
TrackedHighest track_highest(const GLContext& ctx, const Weight& mu);

struct HeadWeightResult {
  Weight gamma;       // -w0(lambda) + 2 rho1
  Weight head_label;  // -w0(track_highest(gamma))
  bool track_flag = false;
};

HeadWeightResult head_weight(const GLContext& ctx, const Weight& lambda);

// Applies the full odd-reflection chain and then block reversal to the
// standard simple system and checks the image is -Pi.
bool super_longest_check(const GLContext& ctx);

// (lambda + rho, beta_i) for i = 1..mn.
std::vector<Int> odd_pairings(const GLContext& ctx, const Weight& lambda);

}  // namespace superchar
