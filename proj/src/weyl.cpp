#include "superchar/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace superchar {

namespace {

int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

std::vector<int> iota_perm(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

WeylElement WeylElement::identity(int m, int n) {
  return WeylElement{iota_perm(m), iota_perm(n)};
}

bool WeylElement::is_identity() const {
  return perm_delta == iota_perm(static_cast<int>(perm_delta.size())) &&
         perm_eps == iota_perm(static_cast<int>(perm_eps.size()));
}

int WeylElement::length() const { return inversions(perm_delta) + inversions(perm_eps); }

int WeylElement::sign() const { return length() % 2 == 0 ? 1 : -1; }

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  check(a.perm_delta.size() == b.perm_delta.size() && a.perm_eps.size() == b.perm_eps.size(),
        "composing Weyl elements of different shapes");
  WeylElement r = a;
  for (size_t i = 0; i < r.perm_delta.size(); ++i)
    r.perm_delta[i] = b.perm_delta[a.perm_delta[i]];
  for (size_t i = 0; i < r.perm_eps.size(); ++i)
    r.perm_eps[i] = b.perm_eps[a.perm_eps[i]];
  return r;
}

WeylElement longest_element(int m, int n) {
  WeylElement w = WeylElement::identity(m, n);
  std::reverse(w.perm_delta.begin(), w.perm_delta.end());
  std::reverse(w.perm_eps.begin(), w.perm_eps.end());
  return w;
}

std::vector<WeylElement> all_weyl_elements(int m, int n) {
  std::vector<WeylElement> out;
  std::vector<int> pd = iota_perm(m);
  do {
    std::vector<int> pe = iota_perm(n);
    do {
      out.push_back(WeylElement{pd, pe});
    } while (std::next_permutation(pe.begin(), pe.end()));
  } while (std::next_permutation(pd.begin(), pd.end()));
  return out;
}

HalfWeight act(const WeylElement& w, const HalfWeight& v) {
  int m = static_cast<int>(w.perm_delta.size());
  int n = static_cast<int>(w.perm_eps.size());
  check(static_cast<int>(v.doubled.size()) == m + n, "act: shape mismatch");
  HalfWeight r = v;
  for (int i = 0; i < m; ++i) r.doubled[i] = v.doubled[w.perm_delta[i]];
  for (int i = 0; i < n; ++i) r.doubled[m + i] = v.doubled[m + w.perm_eps[i]];
  return r;
}

Weight act(const GLContext& ctx, const WeylElement& w, const Weight& v) {
  return ctx.to_weight(act(w, ctx.to_half(v)));
}

Weight dot_act(const GLContext& ctx, const WeylElement& w, const Weight& lambda) {
  HalfWeight shifted = ctx.to_half(lambda) + ctx.rho();
  HalfWeight moved = act(w, shifted) - ctx.rho();
  // 2rho is constant modulo 2 within each block, so the result is integral.
  return ctx.to_weight(moved);
}

std::optional<std::pair<WeylElement, HalfWeight>> make_dominant_regular(
    const GLContext& ctx, const HalfWeight& nu) {
  check(static_cast<int>(nu.doubled.size()) == ctx.rank(), "make_dominant_regular shape");
  auto sort_block = [&](int offset, int k) -> std::optional<std::vector<int>> {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return nu.doubled[offset + a] > nu.doubled[offset + b];
    });
    for (int i = 1; i < k; ++i)
      if (nu.doubled[offset + idx[i - 1]] == nu.doubled[offset + idx[i]]) return std::nullopt;
    return idx;
  };
  auto pd = sort_block(0, ctx.m());
  if (!pd) return std::nullopt;
  auto pe = sort_block(ctx.m(), ctx.n());
  if (!pe) return std::nullopt;
  WeylElement w{*pd, *pe};
  return std::make_pair(w, act(w, nu));
}

}  // namespace superchar
