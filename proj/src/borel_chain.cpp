#include "superchar/borel_chain.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "superchar/weyl.hpp"

namespace superchar {

bool SimpleSystem::contains(const Root& r) const {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

bool SimpleSystem::same_set(const SimpleSystem& o) const {
  if (roots.size() != o.roots.size()) return false;
  std::vector<Root> a = roots, b = o.roots;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SimpleSystem standard_simple_system(const GLContext& ctx) {
  SimpleSystem pi;
  pi.chain_index = 0;
  for (int i = 1; i < ctx.rank(); ++i) pi.roots.push_back(ctx.make_root(i, i + 1));
  return pi;
}

SimpleSystem odd_reflect(const GLContext& ctx, const SimpleSystem& pi, const Root& beta) {
  if (!beta.odd)
    throw DomainError(ErrorCode::Range,
                      "odd_reflect: " + format_root(beta, ctx.m()) + " is not odd");
  if (!pi.contains(beta))
    throw DomainError(ErrorCode::Range,
                      "odd_reflect: " + format_root(beta, ctx.m()) + " is not a simple root");

  SimpleSystem out;
  for (const Root& alpha : pi.roots) {
    if (alpha == beta) continue;
    Int pr = ctx.root_pairing(alpha, beta);
    if (pr == 0) {
      out.roots.push_back(alpha);
      continue;
    }
    // alpha + beta; within a simple system the summands share exactly one
    // index head-to-tail, so the sum is again a root.
    Root sum{0, 0, false};
    if (alpha.to == beta.from) sum = ctx.make_root(alpha.from, beta.to);
    else if (beta.to == alpha.from) sum = ctx.make_root(beta.from, alpha.to);
    else
      throw DomainError(ErrorCode::Range, "odd_reflect: sum of simple roots is not a root");
    out.roots.push_back(sum);
  }
  out.roots.push_back(beta.negated());

  if (pi.chain_index >= 0 && pi.chain_index < ctx.odd_count() &&
      beta == ctx.odd_root(pi.chain_index + 1))
    out.chain_index = pi.chain_index + 1;
  return out;
}

namespace {

std::mutex g_chain_mutex;
std::map<std::pair<int, int>, std::vector<SimpleSystem>> g_chain_cache;

}  // namespace

const SimpleSystem& simple_system(const GLContext& ctx, int i) {
  if (i < 0 || i > ctx.odd_count())
    throw DomainError(ErrorCode::Range, "simple_system: chain index out of range");
  std::lock_guard<std::mutex> lock(g_chain_mutex);
  auto& chain = g_chain_cache[{ctx.m(), ctx.n()}];
  if (chain.empty()) chain.push_back(standard_simple_system(ctx));
  while (static_cast<int>(chain.size()) <= i) {
    int next = static_cast<int>(chain.size());
    chain.push_back(odd_reflect(ctx, chain.back(), ctx.odd_root(next)));
    check(chain.back().chain_index == next, "chain index did not advance");
  }
  return chain[static_cast<size_t>(i)];
}

OddPositiveSet xi_support(const GLContext& ctx, int i) {
  if (i < 0 || i > ctx.odd_count())
    throw DomainError(ErrorCode::Range, "xi_support: chain index out of range");
  OddPositiveSet s;
  s.negated.resize(ctx.odd_count());
  for (int j = 0; j < ctx.odd_count(); ++j) s.negated[j] = j < i;
  return s;
}

std::vector<Weight> lambda_chain(const GLContext& ctx, const Weight& lambda) {
  std::vector<Weight> chain;
  chain.reserve(ctx.odd_count() + 1);
  chain.push_back(lambda);
  for (int i = 1; i <= ctx.odd_count(); ++i)
    chain.push_back(chain.back() - ctx.root_weight(ctx.odd_root(i)));
  return chain;
}

std::vector<Int> odd_pairings(const GLContext& ctx, const Weight& lambda) {
  std::vector<Int> out;
  out.reserve(ctx.odd_count());
  for (int i = 1; i <= ctx.odd_count(); ++i) out.push_back(ctx.shifted_odd_pairing(lambda, i));
  return out;
}

namespace {

TypicalityWitness typicality(const GLContext& ctx, const Weight& lambda, bool mod_p,
                             const char* who) {
  ctx.require_dominant(lambda, who);
  TypicalityWitness w;
  w.pairings = odd_pairings(ctx, lambda);
  w.value = true;
  auto chain = lambda_chain(ctx, lambda);
  for (int i = 1; i <= ctx.odd_count(); ++i) {
    Int v = w.pairings[static_cast<size_t>(i) - 1];
    check(v == ctx.odd_pairing(chain[static_cast<size_t>(i) - 1], ctx.odd_root(i)),
          "(lambda+rho, beta_i) must equal (lambda_{i-1}, beta_i)");
    bool fails = mod_p ? (v % ctx.p() == 0) : (v == 0);
    if (fails && w.value) {
      w.value = false;
      w.first_failing = i;
    }
  }
  return w;
}

}  // namespace

TypicalityWitness is_typical(const GLContext& ctx, const Weight& lambda) {
  return typicality(ctx, lambda, false, "is_typical");
}

TypicalityWitness is_p_typical(const GLContext& ctx, const Weight& lambda) {
  return typicality(ctx, lambda, true, "is_p_typical");
}

TrackedHighest track_highest(const GLContext& ctx, const Weight& mu) {
  ctx.require_dominant(mu, "track_highest");
  TrackedHighest r;
  r.weight = mu;
  for (int i = 1; i <= ctx.odd_count(); ++i) {
    Root beta = ctx.odd_root(i);
    if (ctx.odd_pairing(r.weight, beta) % ctx.p() != 0)
      r.weight = r.weight - ctx.root_weight(beta);
    if (!r.nondominant_intermediate && !ctx.is_dominant(r.weight)) {
      r.nondominant_intermediate = true;
      r.first_nondominant_step = i;
    }
  }
  return r;
}

HeadWeightResult head_weight(const GLContext& ctx, const Weight& lambda) {
  ctx.require_dominant(lambda, "head_weight");
  WeylElement w0 = longest_element(ctx.m(), ctx.n());
  HeadWeightResult r;
  r.gamma = -act(ctx, w0, lambda) + ctx.two_rho1_weight();
  TrackedHighest t = track_highest(ctx, r.gamma);
  r.track_flag = t.nondominant_intermediate;
  r.head_label = -act(ctx, w0, t.weight);
  return r;
}

bool super_longest_check(const GLContext& ctx) {
  const SimpleSystem& full = simple_system(ctx, ctx.odd_count());
  auto reverse_index = [&](int idx) {
    return idx <= ctx.m() ? ctx.m() + 1 - idx : ctx.m() + ctx.rank() + 1 - idx;
  };
  SimpleSystem image;
  for (const Root& r : full.roots)
    image.roots.push_back(ctx.make_root(reverse_index(r.from), reverse_index(r.to)));
  SimpleSystem minus_pi;
  for (const Root& r : standard_simple_system(ctx).roots) minus_pi.roots.push_back(r.negated());
  return image.same_set(minus_pi);
}

}  // namespace superchar
