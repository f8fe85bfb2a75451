#pragma once

#include <string>
#include <vector>

#include "superchar/error.hpp"
#include "superchar/rational.hpp"

namespace superchar {

// Element of the character lattice X(T): integer coefficients of
// delta_1..delta_m followed by eps_1..eps_n.
struct Weight {
  std::vector<Int> delta, eps;

  bool operator==(const Weight& o) const { return delta == o.delta && eps == o.eps; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  // Lexicographic on (delta, eps); the print order iterates descending.
  bool operator<(const Weight& o) const {
    if (delta != o.delta) return delta < o.delta;
    return eps < o.eps;
  }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(Int c, const Weight& a);

Int delta_sum(const Weight& w);
Int eps_sum(const Weight& w);

// A weight doubled into integer coordinates: `doubled` holds 2*mu as a single
// vector of length m+n. Used for the rho-vectors and rho-shifted weights,
// which may be half-integral.
struct HalfWeight {
  std::vector<Int> doubled;

  bool operator==(const HalfWeight& o) const { return doubled == o.doubled; }
};

HalfWeight operator+(const HalfWeight& a, const HalfWeight& b);
HalfWeight operator-(const HalfWeight& a, const HalfWeight& b);

// Root sigma_from - sigma_to with 1-based indices into (delta..., eps...).
struct Root {
  int from = 0, to = 0;
  bool odd = false;

  Root negated() const { return Root{to, from, odd}; }
  bool operator==(const Root& o) const { return from == o.from && to == o.to; }
  bool operator!=(const Root& o) const { return !(*this == o); }
  bool operator<(const Root& o) const {
    if (from != o.from) return from < o.from;
    return to < o.to;
  }
};

// GL(m|n) over an odd prime p: root data, bilinear form, rho-vectors and the
// canonical ordering beta_1..beta_{mn} of the positive odd roots.
class GLContext {
 public:
  GLContext(int m, int n, Int p);

  int m() const { return m_; }
  int n() const { return n_; }
  Int p() const { return p_; }
  int rank() const { return m_ + n_; }
  int odd_count() const { return m_ * n_; }

  Root make_root(int from, int to) const;
  // beta_i in the canonical order, 1 <= i <= mn.
  Root odd_root(int i) const;
  const std::vector<Root>& odd_positive() const { return odd_positive_; }
  const std::vector<Root>& even_positive() const { return even_positive_; }

  // Doubled rho-vectors: rho0 + rho1 halves of the positive even/odd roots,
  // rho = rho0 - rho1.
  const HalfWeight& rho0() const { return rho0_; }
  const HalfWeight& rho1() const { return rho1_; }
  const HalfWeight& rho() const { return rho_; }
  Weight two_rho1_weight() const;

  bool is_dominant(const Weight& w) const;
  void require_dominant(const Weight& w, const char* who) const;

  Weight root_weight(const Root& r) const;
  HalfWeight to_half(const Weight& w) const;
  Weight to_weight(const HalfWeight& h) const;  // requires all entries even

  // Signature (+..+,-..-) form; arguments are doubled, result is exact with
  // denominator dividing 4.
  Rational pairing(const HalfWeight& a, const HalfWeight& b) const;
  Rational pairing(const Weight& a, const Weight& b) const;
  Int root_pairing(const Root& a, const Root& b) const;

  // 2(mu,alpha)/(alpha,alpha) for even alpha; rejects odd (isotropic) roots.
  Rational coroot_pairing(const HalfWeight& mu, const Root& alpha) const;
  Int coroot_pairing_int(const HalfWeight& mu, const Root& alpha) const;

  // (mu, beta) for an odd root beta = delta_s - eps_t, i.e. a_s + b_t.
  Int odd_pairing(const Weight& mu, const Root& beta) const;
  // (lambda + rho, beta_i); always an integer.
  Int shifted_odd_pairing(const Weight& lambda, int i) const;

 private:
  int m_, n_;
  Int p_;
  std::vector<Root> odd_positive_;
  std::vector<Root> even_positive_;
  HalfWeight rho0_, rho1_, rho_;
};

// Weight literal syntax: "a1,a2,...,am|b1,...,bn".
Weight parse_weight(const std::string& text);
std::string format_weight(const Weight& w);
std::string format_root(const Root& r, int m);  // "d1-d2", "d2-e1", ...

}  // namespace superchar
