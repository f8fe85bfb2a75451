#include <doctest.h>

#include <random>
#include <set>

#include "superchar/root_data.hpp"

using namespace superchar;

namespace {

Weight W2_1(Int a, Int b, Int c) { return Weight{{a, b}, {c}}; }

}  // namespace

TEST_CASE("context validation") {
  CHECK_THROWS_AS(GLContext(0, 1, 3), DomainError);
  CHECK_THROWS_AS(GLContext(1, 1, 2), DomainError);
  CHECK_THROWS_AS(GLContext(1, 1, 9), DomainError);
  CHECK_NOTHROW(GLContext(3, 2, 7));
}

TEST_CASE("root counts") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      GLContext ctx(m, n, 3);
      CHECK(static_cast<int>(ctx.odd_positive().size()) == m * n);
      CHECK(static_cast<int>(ctx.even_positive().size()) ==
            m * (m - 1) / 2 + n * (n - 1) / 2);
    }
}

TEST_CASE("odd root ordering") {
  GLContext ctx23(2, 3, 3);
  CHECK(ctx23.odd_root(1) == ctx23.make_root(2, 3));  // d2-e1
  CHECK(ctx23.odd_root(4) == ctx23.make_root(1, 3));  // d1-e1
  CHECK(ctx23.odd_root(6) == ctx23.make_root(1, 5));  // d1-e3

  GLContext ctx11(1, 1, 3);
  CHECK(ctx11.odd_root(1) == ctx11.make_root(1, 2));

  GLContext ctx32(3, 2, 3);
  CHECK(ctx32.odd_root(3) == ctx32.make_root(2, 4));  // d2-e1

  CHECK_THROWS_AS(ctx32.odd_root(0), DomainError);
  CHECK_THROWS_AS(ctx32.odd_root(7), DomainError);
}

TEST_CASE("odd roots are distinct and exhaust the odd positives") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      GLContext ctx(m, n, 5);
      std::set<std::pair<int, int>> seen;
      for (int i = 1; i <= m * n; ++i) {
        Root b = ctx.odd_root(i);
        CHECK(b.odd);
        CHECK(b.from <= m);
        CHECK(b.to > m);
        seen.insert({b.from, b.to});
      }
      CHECK(static_cast<int>(seen.size()) == m * n);
    }
}

TEST_CASE("pairing on basis vectors and rho") {
  GLContext ctx(2, 1, 3);
  Weight d1{{1, 0}, {0}}, e1{{0, 0}, {1}};
  CHECK(ctx.pairing(d1, d1) == Rational(1));
  CHECK(ctx.pairing(d1, e1) == Rational(0));
  CHECK(ctx.pairing(e1, e1) == Rational(-1));

  // rho = (0,-1|1) for GL(2|1); it pairs to zero with d2-e1.
  HalfWeight rho = ctx.rho();
  CHECK(rho.doubled == std::vector<Int>{0, -2, 2});
  HalfWeight beta = ctx.to_half(ctx.root_weight(ctx.make_root(2, 3)));
  CHECK(ctx.pairing(rho, beta) == Rational(0));
}

TEST_CASE("rho closed forms") {
  GLContext ctx11(1, 1, 3);
  CHECK(ctx11.rho1().doubled == std::vector<Int>{1, -1});
  CHECK(ctx11.rho().doubled == std::vector<Int>{-1, 1});

  // 2rho = 2rho0 - 2rho1 exactly, and rho0/rho1 match the half sums.
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      GLContext ctx(m, n, 3);
      std::vector<Int> sum_even(m + n, 0), sum_odd(m + n, 0);
      auto accumulate = [&](const Root& r, std::vector<Int>& acc) {
        acc[r.from - 1] += 1;
        acc[r.to - 1] -= 1;
      };
      for (const Root& r : ctx.even_positive()) accumulate(r, sum_even);
      for (const Root& r : ctx.odd_positive()) accumulate(r, sum_odd);
      CHECK(ctx.rho0().doubled == sum_even);
      CHECK(ctx.rho1().doubled == sum_odd);
      CHECK(ctx.rho().doubled == (ctx.rho0() - ctx.rho1()).doubled);
    }
}

TEST_CASE("rho pairing integrality") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      GLContext ctx(m, n, 3);
      for (const Root& beta : ctx.odd_positive()) {
        Rational v = ctx.pairing(ctx.rho(), ctx.to_half(ctx.root_weight(beta)));
        CHECK(v.is_integer());
      }
      if (m <= 3 && n <= 3) {
        HalfWeight both = ctx.rho0() + ctx.rho1();
        for (const Root& r : ctx.even_positive())
          CHECK(ctx.pairing(both, ctx.to_half(ctx.root_weight(r))).is_integer());
        for (const Root& r : ctx.odd_positive())
          CHECK(ctx.pairing(both, ctx.to_half(ctx.root_weight(r))).is_integer());
      }
    }
}

TEST_CASE("coroot pairing") {
  GLContext ctx(2, 1, 3);
  Root alpha = ctx.make_root(1, 2);
  HalfWeight shifted = ctx.to_half(W2_1(3, 0, 1)) + ctx.rho0();
  CHECK(ctx.coroot_pairing(shifted, alpha) == Rational(4));

  GLContext ctx12(1, 2, 3);
  Root eps_alpha = ctx12.make_root(2, 3);
  CHECK(ctx12.coroot_pairing(ctx12.to_half(Weight{{0}, {1, 0}}), eps_alpha) == Rational(1));

  CHECK_THROWS_AS(ctx.coroot_pairing(shifted, ctx.make_root(2, 3)), DomainError);
}

TEST_CASE("rho1 is orthogonal to every even coroot") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      GLContext ctx(m, n, 3);
      for (const Root& alpha : ctx.even_positive()) {
        CHECK(ctx.coroot_pairing(ctx.rho1(), alpha) == Rational(0));
        // Hence rho- and rho0-shifts agree on even coroots.
        HalfWeight probe = ctx.to_half(ctx.root_weight(ctx.odd_root(1)));
        CHECK(ctx.coroot_pairing(probe + ctx.rho(), alpha) ==
              ctx.coroot_pairing(probe + ctx.rho0(), alpha));
      }
    }
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<Int> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 4);
    GLContext ctx(m, n, 3);
    auto random_half = [&]() {
      HalfWeight h;
      for (int i = 0; i < m + n; ++i) h.doubled.push_back(entry(rng));
      return h;
    };
    HalfWeight a = random_half(), b = random_half(), c = random_half();
    CHECK(ctx.pairing(a, b) == ctx.pairing(b, a));
    CHECK(ctx.pairing(a + b, c) == ctx.pairing(a, c) + ctx.pairing(b, c));
  }
}

TEST_CASE("dominance") {
  GLContext ctx(2, 1, 3);
  CHECK(ctx.is_dominant(W2_1(1, 0, 0)));
  CHECK_FALSE(ctx.is_dominant(W2_1(0, 1, 0)));
  GLContext ctx22(2, 2, 3);
  CHECK(ctx22.is_dominant(Weight{{3, 3}, {-1, -1}}));
}

TEST_CASE("half-weight round trip") {
  GLContext ctx(2, 2, 3);
  Weight w{{3, -1}, {0, 2}};
  CHECK(ctx.to_weight(ctx.to_half(w)) == w);
}

TEST_CASE("weight literals") {
  CHECK(parse_weight("1,1|0") == W2_1(1, 1, 0));
  CHECK(parse_weight("-3,0|12") == W2_1(-3, 0, 12));
  CHECK(format_weight(W2_1(-3, 0, 12)) == "-3,0|12");
  CHECK(format_weight(parse_weight("2|1")) == "2|1");
  CHECK_THROWS_AS(parse_weight("1,1"), DomainError);
  CHECK_THROWS_AS(parse_weight("1,|0"), DomainError);
  CHECK_THROWS_AS(parse_weight("a|0"), DomainError);
  CHECK_THROWS_AS(parse_weight("1x|0"), DomainError);
}

TEST_CASE("root formatting") {
  GLContext ctx(2, 2, 3);
  CHECK(format_root(ctx.make_root(1, 2), 2) == "d1-d2");
  CHECK(format_root(ctx.make_root(2, 3), 2) == "d2-e1");
  CHECK(format_root(ctx.make_root(3, 4), 2) == "e1-e2");
  CHECK(format_root(ctx.make_root(3, 2), 2) == "e1-d2");
}

TEST_CASE("delta sums are additive") {
  Weight a{{1, 2}, {3}}, b{{-1, 5}, {4}};
  CHECK(delta_sum(a + b) == delta_sum(a) + delta_sum(b));
  CHECK(eps_sum(a + b) == eps_sum(a) + eps_sum(b));
}
