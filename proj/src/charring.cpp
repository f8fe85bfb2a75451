#include "superchar/charring.hpp"

#include <algorithm>
#include <numeric>

#include "superchar/weyl.hpp"

namespace superchar {

Character Character::monomial(const Weight& w, Int c) {
  Character ch;
  ch.add(w, c);
  return ch;
}

Int Character::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

Character& Character::add(const Weight& w, Int c) {
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Character Character::operator+(const Character& o) const {
  Character r = *this;
  r += o;
  return r;
}

Character Character::operator-(const Character& o) const {
  Character r = *this;
  r -= o;
  return r;
}

Character Character::operator*(const Character& o) const {
  Character r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add(w1 + w2, c1 * c2);
  return r;
}

Character Character::scaled(Int c) const {
  Character r;
  if (c == 0) return r;
  for (const auto& [w, cc] : terms_) r.add(w, c * cc);
  return r;
}

Character Character::dual() const {
  Character r;
  for (const auto& [w, c] : terms_) r.add(-w, c);
  return r;
}

Int Character::evaluate_at_one() const {
  Int s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

bool Character::nonnegative() const {
  for (const auto& [w, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Character::support_subset_of(const Character& o) const {
  for (const auto& [w, c] : terms_)
    if (o.coeff(w) == 0) return false;
  return true;
}

Character Character::restrict(const std::function<bool(const Weight&)>& keep) const {
  Character r;
  for (const auto& [w, c] : terms_)
    if (keep(w)) r.add(w, c);
  return r;
}

namespace {

bool weakly_decreasing(const std::vector<Int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

// Branching recursion over nonnegative partitions; the memo is keyed by the
// partition itself (its length identifies the recursion level).
using PartitionPoly = std::map<std::vector<Int>, BlockPoly>;

thread_local PartitionPoly g_schur_memo;

const BlockPoly& schur_partition(const std::vector<Int>& mu) {
  auto it = g_schur_memo.find(mu);
  if (it != g_schur_memo.end()) return it->second;
  BlockPoly poly;
  size_t k = mu.size();
  if (k == 1) {
    poly[{mu[0]}] = 1;
  } else {
    Int total = std::accumulate(mu.begin(), mu.end(), Int(0));
    std::vector<Int> nu(k - 1);
    // Enumerate interlacing nu: mu[i+1] <= nu[i] <= mu[i].
    std::function<void(size_t)> rec = [&](size_t pos) {
      if (pos == k - 1) {
        Int sub = std::accumulate(nu.begin(), nu.end(), Int(0));
        const BlockPoly& inner = schur_partition(nu);
        for (const auto& [e, c] : inner) {
          std::vector<Int> ext = e;
          ext.push_back(total - sub);
          poly[ext] += c;
        }
        return;
      }
      for (Int v = mu[pos + 1]; v <= mu[pos]; ++v) {
        nu[pos] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return g_schur_memo.emplace(mu, std::move(poly)).first->second;
}

BlockPoly shift_all(const BlockPoly& p, Int shift) {
  if (shift == 0) return p;
  BlockPoly out;
  for (const auto& [e, c] : p) {
    std::vector<Int> e2 = e;
    for (auto& x : e2) x += shift;
    out[e2] = c;
  }
  return out;
}

// Alternant A(v) = sum over permutations sgn(w) x^{w(v)} for strictly
// decreasing v.
BlockPoly alternant(const std::vector<Int>& v) {
  size_t k = v.size();
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  BlockPoly out;
  do {
    int inv = 0;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = i + 1; j < k; ++j)
        if (idx[i] > idx[j]) ++inv;
    std::vector<Int> e(k);
    for (size_t i = 0; i < k; ++i) e[i] = v[static_cast<size_t>(idx[i])];
    out[e] += (inv % 2 == 0) ? 1 : -1;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

// Exact division of Laurent polynomials by leading-term elimination in the
// lexicographic order. The divisor's leading coefficient must be a unit.
BlockPoly divide_exact(BlockPoly num, const BlockPoly& den) {
  check(!den.empty(), "division by zero polynomial");
  auto lead = std::prev(den.end());
  check(lead->second == 1 || lead->second == -1, "divisor leading coefficient must be a unit");
  BlockPoly q;
  size_t steps = 0;
  while (!num.empty()) {
    check(++steps < 2000000, "alternant division did not terminate");
    auto nl = std::prev(num.end());
    std::vector<Int> qe = nl->first;
    for (size_t i = 0; i < qe.size(); ++i) qe[i] -= lead->first[i];
    Int qc = nl->second / lead->second;
    check(qc * lead->second == nl->second, "alternant division is not exact");
    q[qe] += qc;
    for (const auto& [e, c] : den) {
      std::vector<Int> t = qe;
      for (size_t i = 0; i < t.size(); ++i) t[i] += e[i];
      auto it = num.find(t);
      if (it == num.end()) {
        num.emplace(std::move(t), -qc * c);
      } else {
        it->second -= qc * c;
        if (it->second == 0) num.erase(it);
      }
    }
  }
  return q;
}

Character assemble(const BlockPoly& pd, const BlockPoly& pe) {
  Character out;
  for (const auto& [ed, cd] : pd)
    for (const auto& [ee, ce] : pe) {
      Weight w;
      w.delta = ed;
      w.eps = ee;
      out.add(w, cd * ce);
    }
  return out;
}

}  // namespace

BlockPoly schur_block(const std::vector<Int>& lambda) {
  if (lambda.empty() || !weakly_decreasing(lambda)) return {};
  Int shift = lambda.back();
  std::vector<Int> mu = lambda;
  for (auto& x : mu) x -= shift;
  return shift_all(schur_partition(mu), shift);
}

BlockPoly schur_block_alternant(const std::vector<Int>& lambda) {
  if (lambda.empty() || !weakly_decreasing(lambda)) return {};
  size_t k = lambda.size();
  std::vector<Int> num(k), den(k);
  for (size_t i = 0; i < k; ++i) {
    den[i] = static_cast<Int>(k - 1 - i);
    num[i] = lambda[i] + den[i];
  }
  return divide_exact(alternant(num), alternant(den));
}

Character schur_even(const GLContext& ctx, const Weight& lambda) {
  if (!ctx.is_dominant(lambda)) return {};
  return assemble(schur_block(lambda.delta), schur_block(lambda.eps));
}

Character schur_even_alternant(const GLContext& ctx, const Weight& lambda) {
  if (!ctx.is_dominant(lambda)) return {};
  return assemble(schur_block_alternant(lambda.delta), schur_block_alternant(lambda.eps));
}

Character xi_product(const GLContext& ctx, const OddPositiveSet& support) {
  check(static_cast<int>(support.negated.size()) == ctx.odd_count(), "xi support size");
  Weight zero;
  zero.delta.assign(ctx.m(), 0);
  zero.eps.assign(ctx.n(), 0);
  Character out = Character::monomial(zero);
  for (int j = 0; j < ctx.odd_count(); ++j) {
    Weight beta = ctx.root_weight(ctx.odd_root(j + 1));
    Character factor = Character::monomial(zero);
    factor.add(support.negated[static_cast<size_t>(j)] ? beta : -beta, 1);
    out = out * factor;
  }
  return out;
}

Character xi_chain(const GLContext& ctx, int i) { return xi_product(ctx, xi_support(ctx, i)); }

Character euler_chi0(const GLContext& ctx, const Weight& mu) {
  HalfWeight shifted = ctx.to_half(mu) + ctx.rho0();
  auto dom = make_dominant_regular(ctx, shifted);
  if (!dom) return {};
  Weight rep = ctx.to_weight(dom->second - ctx.rho0());
  return schur_even(ctx, rep).scaled(dom->first.sign());
}

Character euler_chi(const GLContext& ctx, const Weight& mu) {
  return euler_chi0(ctx, mu) * xi_chain(ctx, 0);
}

Character ch_h0(const GLContext& ctx, const Weight& lambda) {
  return schur_even(ctx, lambda) * xi_chain(ctx, 0);
}

Character ch_weyl(const GLContext& ctx, const Weight& lambda) { return ch_h0(ctx, lambda); }

Character ch_weyl_dual_path(const GLContext& ctx, const Weight& lambda) {
  WeylElement w0 = longest_element(ctx.m(), ctx.n());
  Weight reversed = -act(ctx, w0, lambda);
  return (schur_even(ctx, reversed) * xi_chain(ctx, ctx.odd_count())).dual();
}

Character ch_h0_chain(const GLContext& ctx, int i, const Weight& mu) {
  return schur_even(ctx, mu) * xi_chain(ctx, i);
}

Character ch_total(const GLContext& ctx, const Weight& lambda, bool* zero_warning) {
  ctx.require_dominant(lambda, "ch_total");
  if (zero_warning) *zero_warning = false;
  Weight nu = lambda - ctx.two_rho1_weight();
  if (!ctx.is_dominant(nu)) {
    if (zero_warning) *zero_warning = true;
    return {};
  }
  return schur_even(ctx, nu) * xi_chain(ctx, ctx.odd_count());
}

Character ch_kac(const GLContext& ctx, const Character& even_char) {
  return xi_chain(ctx, 0) * even_char;
}

}  // namespace superchar
