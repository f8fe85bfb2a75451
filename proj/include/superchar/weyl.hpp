#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "superchar/root_data.hpp"

namespace superchar {

// Element of W = S_m x S_n acting by permuting the delta-entries and the
// eps-entries separately. Storage convention: act(w, v)[i] = v[perm[i]].
struct WeylElement {
  std::vector<int> perm_delta, perm_eps;

  static WeylElement identity(int m, int n);
  bool is_identity() const;
  int length() const;  // inversion count over both blocks
  int sign() const;    // (-1)^length

  bool operator==(const WeylElement& o) const {
    return perm_delta == o.perm_delta && perm_eps == o.perm_eps;
  }
};

// act(compose(a,b), v) == act(a, act(b, v)).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement longest_element(int m, int n);
std::vector<WeylElement> all_weyl_elements(int m, int n);

HalfWeight act(const WeylElement& w, const HalfWeight& v);
Weight act(const GLContext& ctx, const WeylElement& w, const Weight& v);

// Dot action w.lambda = w(lambda + rho) - rho with rho = rho0 - rho1.
Weight dot_act(const GLContext& ctx, const WeylElement& w, const Weight& lambda);

// Unique w with act(w, nu) strictly decreasing in both blocks, together with
// that dominant regular representative; empty when nu has a repeated entry in
// either block.
std::optional<std::pair<WeylElement, HalfWeight>> make_dominant_regular(
    const GLContext& ctx, const HalfWeight& nu);

}  // namespace superchar
