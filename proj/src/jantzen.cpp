#include "superchar/jantzen.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>

#include "superchar/weyl.hpp"

namespace superchar {

Int p_adic_valuation(Int p, Int x) {
  check(x != 0, "p-adic valuation of zero");
  if (x < 0) x = -x;
  Int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Weight affine_reflect(const GLContext& ctx, const Weight& lambda, const Root& alpha, Int mp) {
  if (alpha.odd || alpha.from >= alpha.to)
    throw DomainError(ErrorCode::Range, "affine_reflect expects a positive even root");
  Int c0 = ctx.coroot_pairing_int(ctx.to_half(lambda) + ctx.rho0(), alpha);
  if (!(0 < mp && mp < c0))
    throw DomainError(ErrorCode::Range, "affine_reflect: mp outside (0, <lambda+rho0,alpha^vee>)");
  // (rho1, alpha^vee) = 0, so the rho- and rho0-shifted pairings agree.
  Int c = ctx.coroot_pairing_int(ctx.to_half(lambda) + ctx.rho(), alpha);
  check(c == c0, "rho and rho0 coroot pairings must agree on even roots");
  return lambda - ((c - mp) * ctx.root_weight(alpha));
}

std::vector<EvenTerm> even_terms(const GLContext& ctx, const Weight& lambda) {
  ctx.require_dominant(lambda, "even_terms");
  std::vector<EvenTerm> out;
  for (const Root& alpha : ctx.even_positive()) {
    Int c = ctx.coroot_pairing_int(ctx.to_half(lambda) + ctx.rho0(), alpha);
    for (Int mp = ctx.p(); mp < c; mp += ctx.p()) {
      EvenTerm t;
      t.alpha = alpha;
      t.mp = mp;
      t.valuation = p_adic_valuation(ctx.p(), mp);
      t.term = euler_chi(ctx, affine_reflect(ctx, lambda, alpha, mp)).scaled(t.valuation);
      out.push_back(std::move(t));
    }
  }
  return out;
}

Character even_sum(const GLContext& ctx, const Weight& lambda) {
  Character total;
  for (const auto& t : even_terms(ctx, lambda)) total += t.term;
  return total;
}

std::optional<OddTerm> odd_term(const GLContext& ctx, const Weight& lambda, int i,
                                const JantzenModes& modes) {
  if (i < 1 || i > ctx.odd_count())
    throw DomainError(ErrorCode::Range, "odd_term: index out of range");
  TypicalityWitness tw = is_typical(ctx, lambda);
  if (!tw.value)
    throw AtypicalError("odd_term requires a typical weight", tw.first_failing, std::nullopt);

  Int pairing = tw.pairings[static_cast<size_t>(i) - 1];
  if (pairing % ctx.p() != 0) return std::nullopt;  // skipped-term signal

  const int mn = ctx.odd_count();
  auto chain = lambda_chain(ctx, lambda);
  const Weight& nu =
      modes.odd_index == OddIndexMode::Corollary ? chain[static_cast<size_t>(i)]
                                                 : chain[static_cast<size_t>(i) - 1];
  Weight beta = ctx.root_weight(ctx.odd_root(i));

  Character acc = xi_chain(ctx, i) * schur_even(ctx, nu);
  Character xi_prev = xi_chain(ctx, i - 1);
  const int k_max = i + mn + 1;
  for (int k = 1; k <= k_max; ++k) {
    Character piece = xi_prev * schur_even(ctx, nu + k * beta);
    if (k % 2 == 0) acc += piece;
    else acc -= piece;
  }

  // Content window: the term lives where the ambient induced character does.
  // With the tail cut at k_max, every weight up to delta-content ds_nu + 2i has
  // received all of its contributions, so the band above the window must have
  // telescoped to zero already.
  const Int ds_nu = delta_sum(nu);
  const Int lo = ds_nu - (mn - i), hi = ds_nu + i, checked_hi = ds_nu + 2 * i;
  for (const auto& [w, c] : acc.terms()) {
    Int ds = delta_sum(w);
    check(ds >= lo, "odd term has mass below the content window");
    if (ds > hi && ds <= checked_hi)
      check(c == 0, "odd term tail failed to telescope to zero above the content window");
  }

  OddTerm t;
  t.i = i;
  t.pairing = pairing;
  t.valuation = p_adic_valuation(ctx.p(), pairing);
  t.k_max = k_max;
  t.term = acc.restrict([&](const Weight& w) {
    Int ds = delta_sum(w);
    return lo <= ds && ds <= hi;
  });
  if (modes.multiplicity) t.term = t.term.scaled(t.valuation);
  return t;
}

namespace {

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("SUPERCHAR_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1 && v < cap) cap = v;
  }
  return cap;
}

std::optional<SteinbergReduction> try_reduction(const GLContext& ctx, const Weight& mu) {
  try {
    return steinberg_reduce(ctx, mu);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

JantzenReport jantzen_sum(const GLContext& ctx, const Weight& lambda,
                          const JantzenModes& modes) {
  ctx.require_dominant(lambda, "jantzen_sum");
  JantzenReport rep;
  rep.lambda = lambda;
  rep.modes = modes;
  rep.typical = is_typical(ctx, lambda);
  if (!rep.typical.value)
    throw AtypicalError("jantzen_sum requires a typical weight: " + format_weight(lambda) +
                            " fails at i=" + std::to_string(rep.typical.first_failing),
                        rep.typical.first_failing, try_reduction(ctx, lambda));

  rep.even_terms = even_terms(ctx, lambda);

  std::vector<int> odd_indices;
  for (int i = 1; i <= ctx.odd_count(); ++i)
    if (rep.typical.pairings[static_cast<size_t>(i) - 1] % ctx.p() == 0) odd_indices.push_back(i);

  rep.odd_terms.resize(odd_indices.size());
  int workers = std::min<int>(thread_cap(), static_cast<int>(odd_indices.size()));
  if (workers > 1) {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int t = 0; t < workers; ++t)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (size_t j = next.fetch_add(1); j < odd_indices.size(); j = next.fetch_add(1))
          rep.odd_terms[j] = *odd_term(ctx, lambda, odd_indices[j], modes);
      }));
    for (auto& f : futs) f.get();
  } else {
    for (size_t j = 0; j < odd_indices.size(); ++j)
      rep.odd_terms[j] = *odd_term(ctx, lambda, odd_indices[j], modes);
  }

  for (const auto& t : rep.even_terms) rep.total += t.term;
  for (const auto& t : rep.odd_terms) rep.total += t.term;

  HeadWeightResult head = head_weight(ctx, lambda);
  rep.head_gamma = head.gamma;
  rep.head_label = head.head_label;
  return rep;
}

bool in_restricted_region(const GLContext& ctx, const Weight& mu) {
  if (!ctx.is_dominant(mu)) return false;
  for (size_t i = 1; i < mu.delta.size(); ++i)
    if (mu.delta[i - 1] - mu.delta[i] > ctx.p() - 1) return false;
  for (size_t i = 1; i < mu.eps.size(); ++i)
    if (mu.eps[i - 1] - mu.eps[i] > ctx.p() - 1) return false;
  return true;
}

std::vector<Weight> p_adic_digits(const GLContext& ctx, const Weight& mu) {
  ctx.require_dominant(mu, "p_adic_digits");
  const Int p = ctx.p();
  auto block_digits = [&](const std::vector<Int>& block) {
    // Base-p digits of the consecutive differences; the final coordinate goes
    // entirely into digit 0.
    std::vector<std::vector<Int>> diff_digits;  // [gap][digit]
    size_t levels = 1;
    for (size_t i = 1; i < block.size(); ++i) {
      Int d = block[i - 1] - block[i];
      std::vector<Int> digs;
      do {
        digs.push_back(d % p);
        d /= p;
      } while (d > 0);
      levels = std::max(levels, digs.size());
      diff_digits.push_back(std::move(digs));
    }
    return std::make_pair(diff_digits, levels);
  };

  auto [dd, levels_d] = block_digits(mu.delta);
  auto [de, levels_e] = block_digits(mu.eps);
  size_t levels = std::max(levels_d, levels_e);

  std::vector<Weight> digits;
  for (size_t t = 0; t < levels; ++t) {
    Weight w;
    w.delta.assign(ctx.m(), 0);
    w.eps.assign(ctx.n(), 0);
    auto fill = [&](std::vector<Int>& out, const std::vector<std::vector<Int>>& gaps,
                    Int tail) {
      size_t k = out.size();
      for (size_t i = 0; i < k; ++i) {
        Int suffix = 0;
        for (size_t g = i; g < gaps.size(); ++g)
          suffix += t < gaps[g].size() ? gaps[g][t] : 0;
        out[i] = suffix + (t == 0 ? tail : 0);
      }
    };
    fill(w.delta, dd, mu.delta.back());
    fill(w.eps, de, mu.eps.back());
    check(in_restricted_region(ctx, w), "p-adic digit left the restricted region");
    digits.push_back(std::move(w));
  }

  // Round trip.
  Weight sum = digits.back();
  for (size_t t = digits.size() - 1; t-- > 0;) sum = p * sum + digits[t];
  check(sum == mu, "p-adic digits do not reconstruct the weight");
  return digits;
}

SteinbergReduction steinberg_reduce(const GLContext& ctx, const Weight& mu) {
  ctx.require_dominant(mu, "steinberg_reduce");
  TypicalityWitness tw = is_typical(ctx, mu);
  if (tw.value)
    throw DomainError(ErrorCode::Atypical,
                      "steinberg_reduce: " + format_weight(mu) + " is already typical");

  SteinbergReduction red;
  red.varpi.delta.assign(ctx.m(), 0);
  red.varpi.eps.assign(ctx.n(), 0);
  for (int i = 0; i < ctx.m(); ++i) red.varpi.delta[i] = ctx.m() - 1 - i;

  // (varpi, delta_s - eps_t) = m - s, so a vanishing pairing along a
  // delta_m - eps_t root can never be repaired by the padding. This covers all
  // of GL(1|n).
  for (int i = 1; i <= ctx.odd_count(); ++i) {
    Root beta = ctx.odd_root(i);
    if (beta.from == ctx.m() && tw.pairings[static_cast<size_t>(i) - 1] == 0)
      throw DomainError(ErrorCode::Range,
                        "steinberg_reduce: no padding weight can move the pairing along " +
                            format_root(beta, ctx.m()));
  }

  red.digits = p_adic_digits(ctx, mu);
  Int r = static_cast<Int>(red.digits.size()) - 1;

  Int max_pairing = 1;
  for (Int v : tw.pairings) max_pairing = std::max(max_pairing, v < 0 ? -v : v);
  Int bound = r + 2;
  for (Int q = 1; q <= max_pairing; q *= ctx.p()) ++bound;

  for (Int l = r + 1; l <= bound; ++l) {
    Int scale = 1;
    for (Int t = 0; t < l; ++t) scale *= ctx.p();
    Weight candidate = mu + scale * red.varpi;
    if (is_typical(ctx, candidate).value) {
      red.lambda = candidate;
      red.l = l;
      return red;
    }
  }
  throw DomainError(ErrorCode::Range, "steinberg_reduce: no admissible exponent found");
}

}  // namespace superchar
