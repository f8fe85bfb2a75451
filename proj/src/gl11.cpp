#include "superchar/gl11.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "superchar/jantzen.hpp"

namespace superchar {

namespace {

Int mod_norm(Int x, Int p) {
  Int r = x % p;
  return r < 0 ? r + p : r;
}

Int mod_inverse(Int a, Int p) {
  a = mod_norm(a, p);
  check(a != 0, "mod-p inverse of zero");
  Int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    Int q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  check(r == 1, "mod-p inverse: not coprime");
  return mod_norm(t, p);
}

// Sign of xi_S * xi_T as (-1)^{#{(s,t) in S x T : s > t}}.
int merge_sign(std::uint32_t s, std::uint32_t t) {
  int inv = 0;
  while (t) {
    std::uint32_t low = t & (~t + 1);
    std::uint32_t above = s & ~(low | (low - 1));
    inv += std::popcount(above);
    t &= t - 1;
  }
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Grassmann Grassmann::scalar(const GrassmannRing& ring, const Rational& c) {
  Grassmann g(ring);
  g.set(0, c);
  return g;
}

Grassmann Grassmann::generator(const GrassmannRing& ring, int k) {
  check(k >= 1 && k <= ring.generators, "generator index out of range");
  Grassmann g(ring);
  g.set(1u << (k - 1), Rational(1));
  return g;
}

bool Grassmann::is_even() const {
  for (const auto& [mask, c] : coeffs_)
    if (std::popcount(mask) % 2 != 0) return false;
  return true;
}

bool Grassmann::is_odd() const {
  for (const auto& [mask, c] : coeffs_)
    if (std::popcount(mask) % 2 == 0) return false;
  return true;
}

Rational Grassmann::body() const { return coeff(0); }

Rational Grassmann::coeff(std::uint32_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Grassmann& Grassmann::set(std::uint32_t mask, const Rational& c) {
  check(mask < (1u << ring_.generators), "coefficient mask outside the generator range");
  coeffs_[mask] = c;
  normalize();
  return *this;
}

void Grassmann::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (ring_.mode == RingMode::ModP) {
      // Collapse to a canonical residue; denominators are invertible mod p.
      Int num = mod_norm(it->second.num(), ring_.p);
      Int den_inv = mod_inverse(it->second.den(), ring_.p);
      it->second = Rational(mod_norm(num * den_inv, ring_.p));
    } else if (ring_.mode == RingMode::Integers) {
      check(it->second.is_integer(), "non-integer coefficient over the integers");
    }
    if (it->second.is_zero()) it = coeffs_.erase(it);
    else ++it;
  }
}

Grassmann Grassmann::operator+(const Grassmann& o) const {
  check(ring_ == o.ring_, "mixed Grassmann rings");
  Grassmann r = *this;
  for (const auto& [mask, c] : o.coeffs_) {
    auto it = r.coeffs_.find(mask);
    if (it == r.coeffs_.end()) r.coeffs_[mask] = c;
    else it->second = it->second + c;
  }
  r.normalize();
  return r;
}

Grassmann Grassmann::operator-() const {
  Grassmann r = *this;
  for (auto& [mask, c] : r.coeffs_) c = -c;
  r.normalize();
  return r;
}

Grassmann Grassmann::operator-(const Grassmann& o) const { return *this + (-o); }

Grassmann Grassmann::operator*(const Grassmann& o) const {
  check(ring_ == o.ring_, "mixed Grassmann rings");
  Grassmann r(ring_);
  for (const auto& [s, cs] : coeffs_)
    for (const auto& [t, ct] : o.coeffs_) {
      if (s & t) continue;  // xi^2 = 0
      Rational c = cs * ct * Rational(merge_sign(s, t));
      auto it = r.coeffs_.find(s | t);
      if (it == r.coeffs_.end()) r.coeffs_[s | t] = c;
      else it->second = it->second + c;
    }
  r.normalize();
  return r;
}

bool Grassmann::operator==(const Grassmann& o) const {
  return ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

Grassmann Grassmann::inverse() const {
  check(is_even(), "only even elements are inverted");
  Rational c = body();
  if (c.is_zero())
    throw DomainError(ErrorCode::Range, "matrix entry body is zero, not invertible");
  Rational c_inv;
  switch (ring_.mode) {
    case RingMode::Integers:
      if (c != Rational(1) && c != Rational(-1))
        throw DomainError(ErrorCode::Range, "body " + c.str() + " is not a unit over the integers");
      c_inv = c;
      break;
    case RingMode::ModP:
      c_inv = Rational(mod_inverse(c.as_integer(), ring_.p));
      break;
    case RingMode::Rationals:
      c_inv = c.reciprocal();
      break;
  }
  Grassmann one = scalar(ring_, 1);
  Grassmann w = *this * scalar(ring_, c_inv) - one;  // nilpotent even part
  Grassmann acc = one;
  Grassmann power = one;
  for (int k = 0; 2 * k < ring_.generators; ++k) {
    power = power * (-w);
    if (power.is_zero()) break;
    acc = acc + power;
  }
  return acc * scalar(ring_, c_inv);
}

Grassmann Grassmann::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  Grassmann acc = scalar(ring_, 1);
  for (Int k = 0; k < e; ++k) acc = acc * (*this);
  return acc;
}

std::string Grassmann::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int k = 0; k < ring_.generators; ++k)
      if (mask & (1u << k)) os << "*x" << (k + 1);
  }
  return os.str();
}

GL11Point GL11Point::diagonal(const Grassmann& a, const Grassmann& b) {
  GL11Point g{a, Grassmann(a.ring()), Grassmann(a.ring()), b};
  g.validate();
  return g;
}

GL11Point GL11Point::upper(const Grassmann& a, const Grassmann& m, const Grassmann& b) {
  GL11Point g{a, m, Grassmann(a.ring()), b};
  g.validate();
  return g;
}

GL11Point GL11Point::lower(const Grassmann& a, const Grassmann& n, const Grassmann& b) {
  GL11Point g{a, Grassmann(a.ring()), n, b};
  g.validate();
  return g;
}

GL11Point GL11Point::identity(const GrassmannRing& ring) {
  return diagonal(Grassmann::scalar(ring, 1), Grassmann::scalar(ring, 1));
}

void GL11Point::validate() const {
  check(a.is_even() && b.is_even(), "diagonal entries must be even");
  check(m_upper.is_odd() || m_upper.is_zero(), "upper entry must be odd");
  check(n_lower.is_odd() || n_lower.is_zero(), "lower entry must be odd");
  if (a.body().is_zero() || b.body().is_zero())
    throw DomainError(ErrorCode::Range, "matrix is not invertible (zero body on the diagonal)");
}

GL11Point GL11Point::operator*(const GL11Point& o) const {
  GL11Point r{a * o.a + m_upper * o.n_lower, a * o.m_upper + m_upper * o.b,
              n_lower * o.a + b * o.n_lower, n_lower * o.m_upper + b * o.b};
  r.validate();
  return r;
}

bool GL11Element::operator==(const GL11Element& o) const {
  return mod.orient == o.mod.orient && mod.i == o.mod.i && mod.j == o.mod.j && c0 == o.c0 &&
         c1 == o.c1;
}

GL11Element basis_element(const GrassmannRing& ring, const GL11Module& mod, int which) {
  check(which == 0 || which == 1, "basis index must be 0 or 1");
  GL11Element v{mod, Grassmann(ring), Grassmann(ring)};
  (which == 0 ? v.c0 : v.c1) = Grassmann::scalar(ring, 1);
  return v;
}

namespace {

// One generator family acting on the 2-dimensional module; coefficients stay
// on the left of the basis symbols.
GL11Element act_generator(const GL11Point& g, const GL11Element& v) {
  const GrassmannRing& ring = g.a.ring();
  const Int i = v.mod.i, j = v.mod.j;
  Grassmann ai_bj = g.a.pow(i) * g.b.pow(j);
  GL11Element out{v.mod, Grassmann(ring), Grassmann(ring)};
  Grassmann scalar_ij = Grassmann::scalar(ring, i + j);

  if (v.mod.orient == Orientation::MinusBeta) {
    // basis (B, X): B -> a^{i-1} b^{j+1} B + m a^{i-1} b^j X
    //               X -> a^i b^j X + (i+j) n a^{i-1} b^j B
    Grassmann low = g.a.pow(i - 1) * g.b.pow(j + 1);
    Grassmann mix_m = g.m_upper * g.a.pow(i - 1) * g.b.pow(j);
    Grassmann mix_n = scalar_ij * g.n_lower * g.a.pow(i - 1) * g.b.pow(j);
    out.c0 = v.c0 * low + v.c1 * mix_n;
    out.c1 = v.c0 * mix_m + v.c1 * ai_bj;
  } else {
    // basis (C, Y): C -> a^{i+1} b^{j-1} C + n a^i b^{j-1} Y
    //               Y -> a^i b^j Y + (i+j) m a^i b^{j-1} C
    Grassmann high = g.a.pow(i + 1) * g.b.pow(j - 1);
    Grassmann mix_n = g.n_lower * g.a.pow(i) * g.b.pow(j - 1);
    Grassmann mix_m = scalar_ij * g.m_upper * g.a.pow(i) * g.b.pow(j - 1);
    out.c0 = v.c0 * high + v.c1 * mix_m;
    out.c1 = v.c0 * mix_n + v.c1 * ai_bj;
  }
  return out;
}

}  // namespace

GL11Element act(const GL11Point& g, const GL11Element& v) {
  g.validate();
  bool has_upper = !g.m_upper.is_zero();
  bool has_lower = !g.n_lower.is_zero();
  if (!has_upper || !has_lower) return act_generator(g, v);
  // g = lower(1, n a^{-1}, 1) * upper(a, m, b - n a^{-1} m); the action is a
  // right translation, so the lower factor acts last.
  const GrassmannRing& ring = g.a.ring();
  Grassmann a_inv = g.a.inverse();
  Grassmann one = Grassmann::scalar(ring, 1);
  GL11Point up = GL11Point::upper(g.a, g.m_upper, g.b - g.n_lower * a_inv * g.m_upper);
  GL11Point low = GL11Point::lower(one, g.n_lower * a_inv, one);
  return act_generator(low, act_generator(up, v));
}

Map2 map_T(Int i, Int j) { return Map2{1, 0, 0, i + j}; }

Map2 map_Tprime(Int i, Int j) { return Map2{1, 0, 0, i + j}; }

Map2 map_upsilon(Int i, Int j, Int k, Int p) {
  check(k >= 1, "upsilon level must be positive");
  if ((i + j) % p != 0)
    throw DomainError(ErrorCode::Range, "upsilon needs p | (i+j)");
  return Map2{0, 0, 1, 0};
}

CompositionReport composition_analysis(Int i, Int j, Int p) {
  CompositionReport rep;
  Weight lambda{{i}, {j}};
  if ((i + j) % p != 0) {
    rep.irreducible = true;
    rep.socle_weight = lambda;
    rep.head_weight = lambda;
    return rep;
  }
  rep.irreducible = false;
  rep.socle_weight = lambda;
  rep.head_weight = Weight{{i + 1}, {j - 1}};  // lambda + beta
  return rep;
}

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> a) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Int> divisors;
  size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    size_t pr = r, pc = c;
    Int best = 0;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c; j < cols; ++j) {
        Int v = a[i][j] < 0 ? -a[i][j] : a[i][j];
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    std::swap(a[r], a[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pc]);

    bool clean = true;
    for (size_t i = r + 1; i < rows; ++i)
      if (a[i][c] != 0) {
        Int q = a[i][c] / a[r][c];
        for (size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
    for (size_t j = c + 1; j < cols; ++j)
      if (a[r][j] != 0) {
        Int q = a[r][j] / a[r][c];
        for (size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
        if (a[r][j] != 0) clean = false;
      }
    if (!clean) continue;

    // Enforce the divisibility chain before accepting the pivot.
    bool divides_all = true;
    for (size_t i = r + 1; i < rows && divides_all; ++i)
      for (size_t j = c + 1; j < cols; ++j)
        if (a[i][j] % a[r][c] != 0) {
          for (size_t jj = c; jj < cols; ++jj) a[r][jj] += a[i][jj];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;

    divisors.push_back(a[r][c] < 0 ? -a[r][c] : a[r][c]);
    ++r;
    ++c;
  }
  return divisors;
}

Character jantzen_oracle(const GLContext& ctx, const Weight& lambda) {
  if (ctx.m() != 1 || ctx.n() != 1)
    throw DomainError(ErrorCode::Range, "jantzen_oracle only runs on the (1|1) context");
  Int i = lambda.delta[0], j = lambda.eps[0];
  if (i + j == 0)
    throw DomainError(ErrorCode::Atypical,
                      "jantzen_oracle: " + format_weight(lambda) +
                          " is atypical, the chain map is not injective over the rationals");

  // The chain map lands in the totally-odd induced module at lambda - beta:
  // T at target weight (i-1 | j+1), bases (B_lambda, X_lambda) -> (Y, C).
  Map2 t = map_T(i - 1, j + 1);
  Weight beta{{1}, {-1}};
  Weight lower = lambda - beta;

  // Both sides decompose into one-dimensional weight spaces: B and Y sit at
  // lambda - beta, X and C at lambda. Smith normal form per weight space.
  std::map<Weight, std::vector<std::vector<Int>>> blocks;
  blocks[lower] = {{t.a00}};
  blocks[lambda] = {{t.a11}};

  Character out;
  for (const auto& [w, block] : blocks) {
    for (Int d : smith_divisors(block)) {
      check(d != 0, "chain map degenerate on a weight space");
      out.add(w, p_adic_valuation(ctx.p(), d));
    }
  }
  return out;
}

}  // namespace superchar
