#pragma once

#include <functional>
#include <map>
#include <vector>

#include "superchar/borel_chain.hpp"
#include "superchar/root_data.hpp"

namespace superchar {

// Finitely supported integer function on X(T), an element of Z[X(T)].
// No zero coefficients are stored; iteration over `terms()` is ascending in
// the weight order, printing iterates descending.
class Character {
 public:
  using Map = std::map<Weight, Int>;

  Character() = default;
  static Character monomial(const Weight& w, Int c = 1);

  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Int coeff(const Weight& w) const;

  Character& add(const Weight& w, Int c);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character operator*(const Character& o) const;
  Character scaled(Int c) const;
  bool operator==(const Character& o) const { return terms_ == o.terms_; }
  bool operator!=(const Character& o) const { return !(*this == o); }

  // Weights negated (the character of the dual module).
  Character dual() const;
  // Substitute e^mu -> 1: the dimension when the character is a module's.
  Int evaluate_at_one() const;
  bool nonnegative() const;
  bool support_subset_of(const Character& o) const;
  Character restrict(const std::function<bool(const Weight&)>& keep) const;

 private:
  Map terms_;
};

// Laurent polynomial in one block of variables: exponent vector -> coefficient.
using BlockPoly = std::map<std::vector<Int>, Int>;

// Schur Laurent polynomial of a weakly decreasing integer vector, computed by
// the single-variable branching recursion. Negative entries are handled by a
// determinant twist. Empty result when the vector is not weakly decreasing.
BlockPoly schur_block(const std::vector<Int>& lambda);
// Same value through the alternant ratio A(lambda + staircase)/A(staircase);
// retained as an independent cross-check path.
BlockPoly schur_block_alternant(const std::vector<Int>& lambda);

// W(lambda) = ch of the even induced module: product of the two block Schur
// polynomials; zero when lambda is not dominant.
Character schur_even(const GLContext& ctx, const Weight& lambda);
Character schur_even_alternant(const GLContext& ctx, const Weight& lambda);

// Product of (1 + e^{-gamma_j}) over the positive odd roots selected by the
// support flags.
Character xi_product(const GLContext& ctx, const OddPositiveSet& support);
Character xi_chain(const GLContext& ctx, int i);  // Xi_i

// Euler characteristics: chi0 via the dominant regular conjugate with a sign,
// chi = chi0 * Xi.
Character euler_chi0(const GLContext& ctx, const Weight& mu);
Character euler_chi(const GLContext& ctx, const Weight& mu);

Character ch_h0(const GLContext& ctx, const Weight& lambda);
Character ch_weyl(const GLContext& ctx, const Weight& lambda);
// Serre-dual route: dualize W(-w0 lambda) * Xi_mn. Equal to ch_weyl.
Character ch_weyl_dual_path(const GLContext& ctx, const Weight& lambda);
// W(mu) * Xi_i, the induced character over the i-th chain Borel.
Character ch_h0_chain(const GLContext& ctx, int i, const Weight& mu);
// W(lambda - 2 rho1) * Xi_mn; requires dominant lambda.
Character ch_total(const GLContext& ctx, const Weight& lambda, bool* zero_warning = nullptr);
// Xi * evenChar; the even irreducible character is caller-supplied.
Character ch_kac(const GLContext& ctx, const Character& even_char);

}  // namespace superchar
