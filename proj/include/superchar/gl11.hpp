#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superchar/charring.hpp"
#include "superchar/rational.hpp"
#include "superchar/root_data.hpp"

namespace superchar {

enum class RingMode { Integers, ModP, Rationals };

struct GrassmannRing {
  RingMode mode = RingMode::Integers;
  Int p = 0;          // required for ModP
  int generators = 2; // anticommuting generators xi_1..xi_r

  bool operator==(const GrassmannRing& o) const {
    return mode == o.mode && p == o.p && generators == o.generators;
  }
};

// Element of the Grassmann algebra over the chosen base ring: coefficients
// indexed by subsets of the generators, parity graded by subset size.
class Grassmann {
 public:
  explicit Grassmann(const GrassmannRing& ring) : ring_(ring) {}
  static Grassmann scalar(const GrassmannRing& ring, const Rational& c);
  static Grassmann scalar(const GrassmannRing& ring, Int c) { return scalar(ring, Rational(c)); }
  static Grassmann generator(const GrassmannRing& ring, int k);  // xi_k, 1-based

  const GrassmannRing& ring() const { return ring_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_even() const;
  bool is_odd() const;
  Rational body() const;  // the xi-free coefficient
  Rational coeff(std::uint32_t mask) const;
  const std::map<std::uint32_t, Rational>& coeffs() const { return coeffs_; }

  Grassmann& set(std::uint32_t mask, const Rational& c);

  Grassmann operator+(const Grassmann& o) const;
  Grassmann operator-(const Grassmann& o) const;
  Grassmann operator-() const;
  Grassmann operator*(const Grassmann& o) const;
  bool operator==(const Grassmann& o) const;
  bool operator!=(const Grassmann& o) const { return !(*this == o); }

  // Inverse of an even unit: invert the body, then a terminating geometric
  // series in the nilpotent part. Over the integers the body must be +-1.
  Grassmann inverse() const;
  Grassmann pow(Int e) const;  // negative exponents go through inverse()

  std::string str() const;

 private:
  void normalize();
  GrassmannRing ring_;
  std::map<std::uint32_t, Rational> coeffs_;
};

// Point of GL(1|1)(R): matrix (a, m; n, b) with even invertible a, b and odd
// m, n.
struct GL11Point {
  Grassmann a, m_upper, n_lower, b;

  static GL11Point diagonal(const Grassmann& a, const Grassmann& b);
  static GL11Point upper(const Grassmann& a, const Grassmann& m, const Grassmann& b);
  static GL11Point lower(const Grassmann& a, const Grassmann& n, const Grassmann& b);
  static GL11Point identity(const GrassmannRing& ring);

  GL11Point operator*(const GL11Point& o) const;
  void validate() const;  // parities and unit bodies
};

// Which 2-dimensional induced module: +beta orientation has basis {C, Y},
// -beta orientation has basis {B, X}. C has weight lambda+beta, B has weight
// lambda-beta, X and Y have weight lambda.
enum class Orientation { PlusBeta, MinusBeta };

struct GL11Module {
  Orientation orient = Orientation::MinusBeta;
  Int i = 0, j = 0;  // the weight (i|j)
};

struct GL11Element {
  GL11Module mod;
  Grassmann c0, c1;  // c0 * (C or B) + c1 * (Y or X)

  bool operator==(const GL11Element& o) const;
};

GL11Element basis_element(const GrassmannRing& ring, const GL11Module& mod, int which);

// The six displayed generator actions, extended to arbitrary invertible points
// through the factorization g = lower * upper.
GL11Element act(const GL11Point& g, const GL11Element& v);

// Integer 2x2 matrices of the intertwiners in the declared bases.
struct Map2 {
  Int a00 = 0, a01 = 0, a10 = 0, a11 = 0;
  bool operator==(const Map2& o) const {
    return a00 == o.a00 && a01 == o.a01 && a10 == o.a10 && a11 == o.a11;
  }
};

// T: H0_{-beta}(lambda+beta) -> H0_beta(lambda), (B,X) -> (Y,C).
Map2 map_T(Int i, Int j);
// T': H0_beta(lambda) -> H0_{-beta}(lambda+beta), (C,Y) -> (X,B).
Map2 map_Tprime(Int i, Int j);
// Upsilon_{lambda,k beta}: H0_{-beta}(lambda+k beta) -> H0_{-beta}(lambda+(k-1) beta);
// requires p | i+j.
Map2 map_upsilon(Int i, Int j, Int k, Int p);

struct CompositionReport {
  bool irreducible = false;
  Int dimension = 2;
  Weight socle_weight;  // present when reducible
  Weight head_weight;
};

CompositionReport composition_analysis(Int i, Int j, Int p);

// Exact Jantzen sum for GL(1|1): Smith normal form of the integral chain map
// per weight space, summed with p-adic valuations.
Character jantzen_oracle(const GLContext& ctx, const Weight& lambda);

// Elementary divisors of an integer matrix (nonnegative, divisibility chain).
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> a);

}  // namespace superchar
