#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superchar/charring.hpp"

namespace superchar {

enum class OddIndexMode { Corollary, StrictPaper };

struct JantzenModes {
  OddIndexMode odd_index = OddIndexMode::Corollary;
  bool multiplicity = true;
};

struct EvenTerm {
  Root alpha;
  Int mp = 0;         // the multiple of p inside (0, <lambda+rho0, alpha^vee>)
  Int valuation = 0;  // nu_p(mp)
  Character term;     // valuation * chi(r_{alpha,mp}.lambda)
};

struct OddTerm {
  int i = 0;
  Int pairing = 0;    // (lambda + rho, beta_i)
  Int valuation = 0;  // nu_p(pairing)
  int k_max = 0;      // truncation bound used for the alternating tail
  Character term;     // already scaled when multiplicity is on
};

struct JantzenReport {
  Weight lambda;
  TypicalityWitness typical;
  std::vector<EvenTerm> even_terms;
  std::vector<OddTerm> odd_terms;
  Character total;
  JantzenModes modes;
  Weight head_gamma;
  Weight head_label;
};

struct SteinbergReduction {
  Weight lambda;               // mu + p^l * varpi, typical
  Weight varpi;                // sum of the first m-1 fundamental weights
  Int l = 0;
  std::vector<Weight> digits;  // p-adic digits of mu, all in X+_p(T)
};

// Carries the reduction suggestion when a typical weight was required.
class AtypicalError : public DomainError {
 public:
  AtypicalError(const std::string& what, int failing_index,
                std::optional<SteinbergReduction> hint)
      : DomainError(ErrorCode::Atypical, what),
        failing_index_(failing_index),
        hint_(std::move(hint)) {}
  int failing_index() const { return failing_index_; }
  const std::optional<SteinbergReduction>& hint() const { return hint_; }

 private:
  int failing_index_;
  std::optional<SteinbergReduction> hint_;
};

Int p_adic_valuation(Int p, Int x);

// r_{alpha,mp}.lambda = lambda - (<lambda+rho, alpha^vee> - mp) alpha.
// Requires even positive alpha and 0 < mp < <lambda+rho0, alpha^vee>.
Weight affine_reflect(const GLContext& ctx, const Weight& lambda, const Root& alpha, Int mp);

// Sum over even positive roots of nu_p(mp) chi(r_{alpha,mp}.lambda) for every
// multiple mp of p in the open interval.
std::vector<EvenTerm> even_terms(const GLContext& ctx, const Weight& lambda);
Character even_sum(const GLContext& ctx, const Weight& lambda);

// One odd summand; std::nullopt when p does not divide (lambda+rho, beta_i).
// The infinite alternating tail is truncated at k <= i+mn+1, checked against
// the delta-content grading and restricted to the content window.
std::optional<OddTerm> odd_term(const GLContext& ctx, const Weight& lambda, int i,
                                const JantzenModes& modes);

JantzenReport jantzen_sum(const GLContext& ctx, const Weight& lambda,
                          const JantzenModes& modes = {});

// p-adic digits mu_0..mu_r with mu = sum p^i mu_i, each in X+_p(T). The free
// trailing coordinates (a_m, b_n) are assigned entirely to mu_0.
std::vector<Weight> p_adic_digits(const GLContext& ctx, const Weight& mu);
bool in_restricted_region(const GLContext& ctx, const Weight& mu);  // X+_p(T)

// lambda = mu + p^l varpi with l minimal above the digit length making lambda
// typical. Fails when no padding can help: m = 1, or mu sits on a hyperplane
// attached to a delta_m - eps_t root, which varpi cannot move.
SteinbergReduction steinberg_reduce(const GLContext& ctx, const Weight& mu);

}  // namespace superchar
