#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "superchar/gl11.hpp"
#include "superchar/render.hpp"
#include "superchar/weyl.hpp"

namespace sc = superchar;

namespace {

struct OutputSink {
  std::string format = "text";
  std::string out_path;

  bool json() const { return format == "json"; }
  void emit(const std::string& text) const {
    if (out_path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw sc::DomainError(sc::ErrorCode::Range, "cannot open output file " + out_path);
    f << text << '\n';
  }
  void emit(const sc::Json& j) const { emit(sc::render_json(j)); }
};

// Argument-processing failures exit 2; failures of the computation itself
// exit 1 with a structured error in JSON mode.
struct UsageError {
  std::string message;
};

sc::Weight parse_weight_checked(const sc::GLContext& ctx, const std::string& text) {
  sc::Weight w = sc::parse_weight(text);
  if (static_cast<int>(w.delta.size()) != ctx.m() || static_cast<int>(w.eps.size()) != ctx.n())
    throw UsageError{"weight literal '" + text + "' does not match --m/--n"};
  return w;
}

std::unique_ptr<sc::GLContext> make_context(int m, int n, sc::Int p) {
  try {
    return std::make_unique<sc::GLContext>(m, n, p);
  } catch (const sc::DomainError& e) {
    throw UsageError{e.what()};
  }
}

int run_guarded(const OutputSink& sink, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const sc::AtypicalError& e) {
    if (sink.json()) {
      sc::Json j = sc::error_json(e.code(), e.what());
      j["error"]["firstFailing"] = e.failing_index();
      if (e.hint()) {
        j["error"]["steinbergHint"] =
            sc::Json{{"lambda", sc::weight_json(e.hint()->lambda)},
                     {"varpi", sc::weight_json(e.hint()->varpi)},
                     {"l", e.hint()->l}};
      }
      sink.emit(j);
    } else {
      std::ostringstream os;
      os << "error " << sc::error_code_name(e.code()) << ": " << e.what();
      if (e.hint())
        os << "\nhint: lambda=" << sc::format_weight(e.hint()->lambda)
           << " varpi=" << sc::format_weight(e.hint()->varpi) << " l=" << e.hint()->l;
      sink.emit(os.str());
    }
    return 1;
  } catch (const sc::DomainError& e) {
    if (sink.json()) sink.emit(sc::error_json(e.code(), e.what()));
    else sink.emit(std::string("error ") + sc::error_code_name(e.code()) + ": " + e.what());
    return 1;
  }
}

int run_selftest(sc::Int sweep_box) {
  int oracle_pass = 0, oracle_fail = 0;
  for (sc::Int p : {3, 5, 7}) {
    sc::GLContext ctx(1, 1, p);
    for (sc::Int i = -sweep_box; i <= sweep_box; ++i)
      for (sc::Int j = -sweep_box; j <= sweep_box; ++j) {
        if (i + j == 0) continue;
        sc::Weight lambda{{i}, {j}};
        sc::Character expected = sc::jantzen_oracle(ctx, lambda);
        sc::Character got = sc::jantzen_sum(ctx, lambda).total;
        (got == expected ? oracle_pass : oracle_fail)++;
      }
  }

  int fixture_pass = 0, fixture_fail = 0;
  auto fixture = [&](bool ok) { (ok ? fixture_pass : fixture_fail)++; };

  {
    sc::GLContext ctx(1, 1, 3);
    sc::Character h0 = sc::ch_h0(ctx, sc::Weight{{2}, {1}});
    sc::Character want;
    want.add(sc::Weight{{2}, {1}}, 1);
    want.add(sc::Weight{{1}, {2}}, 1);
    fixture(h0 == want);
    fixture(sc::character_text(h0) == "1 * e[2|1]\n1 * e[1|2]");
  }
  {
    sc::GLContext ctx(2, 1, 3);
    fixture(sc::schur_even(ctx, sc::Weight{{2, 1}, {1}}) ==
            sc::schur_even_alternant(ctx, sc::Weight{{2, 1}, {1}}));
    const sc::SimpleSystem& pi1 = sc::simple_system(ctx, 1);
    sc::SimpleSystem want;
    want.roots = {ctx.make_root(3, 2), ctx.make_root(1, 3)};  // e1-d2, d1-e1
    fixture(pi1.same_set(want));
    sc::JantzenReport rep = sc::jantzen_sum(ctx, sc::Weight{{3, 0}, {1}});
    sc::Character even_only =
        sc::euler_chi(ctx, sc::Weight{{2, 1}, {1}});
    fixture(rep.total == even_only && rep.odd_terms.empty());
  }
  {
    sc::GLContext ctx(2, 2, 3);
    fixture(sc::super_longest_check(ctx));
    sc::Weight lam{{3, 1}, {0, -2}};
    fixture(sc::ch_weyl(ctx, lam) == sc::ch_weyl_dual_path(ctx, lam));
    fixture(sc::ch_weyl(ctx, lam) == sc::ch_total(ctx, lam));
  }

  std::cout << "selftest: oracle sweep " << oracle_pass << "/" << (oracle_pass + oracle_fail)
            << " passed; fixtures " << fixture_pass << "/" << (fixture_pass + fixture_fail)
            << " passed\n";
  return (oracle_fail == 0 && fixture_fail == 0) ? 0 : 1;
}

std::string map2_str(const sc::Map2& m) {
  std::ostringstream os;
  os << "[[" << m.a00 << "," << m.a01 << "],[" << m.a10 << "," << m.a11 << "]]";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character combinatorics of GL(m|n) in odd characteristic"};
  app.require_subcommand(1);

  int m = 1, n = 1;
  sc::Int p = 3;
  std::string lambda_text, mu_text;
  OutputSink sink;

  auto add_common = [&](CLI::App* cmd, bool need_p) {
    cmd->add_option("--m", m, "delta block size")->required();
    cmd->add_option("--n", n, "eps block size")->required();
    auto* popt = cmd->add_option("--p", p, "odd prime characteristic");
    if (need_p) popt->required();
    cmd->add_option("--format", sink.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", sink.out_path, "write output to a file");
  };

  auto* cmd_typ = app.add_subcommand("typicality", "typicality and p-typicality of a weight");
  add_common(cmd_typ, true);
  cmd_typ->add_option("--lambda", lambda_text, "weight literal a1,..,am|b1,..,bn")->required();

  auto* cmd_chain = app.add_subcommand("borel-chain", "simple systems along the odd-reflection chain");
  int upto = -1;
  add_common(cmd_chain, false);
  cmd_chain->add_option("--upto", upto, "largest chain index to print");

  auto* cmd_char = app.add_subcommand("char", "characters of induced modules");
  std::string char_kind;
  int chain_index = 0;
  cmd_char->add_option("kind", char_kind, "h0|weyl|total|kac|chi")
      ->required()
      ->check(CLI::IsMember({"h0", "weyl", "total", "kac", "chi"}));
  add_common(cmd_char, false);
  cmd_char->add_option("--lambda", lambda_text, "weight literal")->required();
  cmd_char->add_option("--chain-index", chain_index, "Borel chain index for h0");

  auto* cmd_jan = app.add_subcommand("jantzen", "Jantzen sum formula for a typical weight");
  std::string mode_text = "corollary", mult_text = "on";
  add_common(cmd_jan, true);
  cmd_jan->add_option("--lambda", lambda_text, "weight literal")->required();
  cmd_jan->add_option("--mode", mode_text, "odd-term index convention")
      ->check(CLI::IsMember({"corollary", "strict-paper"}));
  cmd_jan->add_option("--multiplicity", mult_text, "scale odd terms by the pairing valuation")
      ->check(CLI::IsMember({"on", "off"}));

  auto* cmd_st = app.add_subcommand("steinberg", "reduce an atypical weight");
  add_common(cmd_st, true);
  cmd_st->add_option("--mu", mu_text, "weight literal")->required();

  auto* cmd_gl11 = app.add_subcommand("gl11", "exact GL(1|1) module engine");
  cmd_gl11->require_subcommand(1);
  std::string gl11_lambda, gl11_module = "minus", gl11_gen = "diag", gl11_ring = "q";
  sc::Int gl11_p = 3, gen_a = 1, gen_b = 1, gen_mcoef = 0, gen_ncoef = 0;
  int gl11_r = 2;
  auto add_gl11_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", gl11_p, "odd prime")->required();
    cmd->add_option("--lambda", gl11_lambda, "weight literal i|j")->required();
    cmd->add_option("--format", sink.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", sink.out_path, "write output to a file");
  };
  auto* gl11_act = cmd_gl11->add_subcommand("act", "apply a generator to the basis vectors");
  add_gl11_common(gl11_act);
  gl11_act->add_option("--module", gl11_module, "plus (C,Y basis) or minus (B,X basis)")
      ->check(CLI::IsMember({"plus", "minus"}));
  gl11_act->add_option("--gen", gl11_gen, "generator family")
      ->check(CLI::IsMember({"diag", "upper", "lower"}));
  gl11_act->add_option("--a", gen_a, "diagonal entry a");
  gl11_act->add_option("--b", gen_b, "diagonal entry b");
  gl11_act->add_option("--mcoef", gen_mcoef, "coefficient of xi_1 in the upper odd entry");
  gl11_act->add_option("--ncoef", gen_ncoef, "coefficient of xi_2 in the lower odd entry");
  gl11_act->add_option("--ring", gl11_ring, "base ring")->check(CLI::IsMember({"z", "q", "modp"}));
  gl11_act->add_option("--r", gl11_r, "number of Grassmann generators");
  auto* gl11_maps = cmd_gl11->add_subcommand("maps", "intertwiner matrices at a weight");
  add_gl11_common(gl11_maps);
  auto* gl11_analyze = cmd_gl11->add_subcommand("analyze", "socle and head of the induced module");
  add_gl11_common(gl11_analyze);
  auto* gl11_oracle = cmd_gl11->add_subcommand("oracle", "exact Jantzen sum from the chain map");
  add_gl11_common(gl11_oracle);

  auto* cmd_self = app.add_subcommand("selftest", "oracle sweep and fixture comparisons");
  sc::Int sweep_box = 10;
  cmd_self->add_option("--box", sweep_box, "sweep |i|,|j| <= box");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_self->parsed()) return run_selftest(sweep_box);

    if (cmd_typ->parsed()) {
      auto ctx = make_context(m, n, p);
      sc::Weight lambda = parse_weight_checked(*ctx, lambda_text);
      return run_guarded(sink, [&]() {
        auto t = sc::is_typical(*ctx, lambda);
        auto tp = sc::is_p_typical(*ctx, lambda);
        if (sink.json()) sink.emit(sc::typicality_json(*ctx, lambda, t, tp));
        else sink.emit(sc::typicality_text(t, tp));
      });
    }

    if (cmd_chain->parsed()) {
      auto ctx = make_context(m, n, p);
      int top = upto < 0 ? ctx->odd_count() : upto;
      if (top > ctx->odd_count()) throw UsageError{"--upto exceeds mn"};
      return run_guarded(sink, [&]() {
        std::ostringstream os;
        for (int i = 0; i <= top; ++i) {
          const sc::SimpleSystem& pi = sc::simple_system(*ctx, i);
          os << "Pi_" << i << ":";
          for (size_t k = 0; k < pi.roots.size(); ++k)
            os << (k ? ", " : " ") << sc::format_root(pi.roots[k], ctx->m());
          if (i < top) os << '\n';
        }
        sink.emit(os.str());
      });
    }

    if (cmd_char->parsed()) {
      auto ctx = make_context(m, n, p);
      sc::Weight lambda = parse_weight_checked(*ctx, lambda_text);
      if (chain_index < 0 || chain_index > ctx->odd_count())
        throw UsageError{"--chain-index out of range"};
      return run_guarded(sink, [&]() {
        sc::Character ch;
        bool assumed_even_irreducible = false;
        if (char_kind == "h0") {
          ch = sc::ch_h0_chain(*ctx, chain_index, lambda);
        } else if (char_kind == "weyl") {
          ch = sc::ch_weyl(*ctx, lambda);
        } else if (char_kind == "total") {
          ch = sc::ch_total(*ctx, lambda);
        } else if (char_kind == "kac") {
          // No modular even irreducible characters here: substitute W(lambda)
          // and say so.
          ctx->require_dominant(lambda, "char kac");
          ch = sc::ch_kac(*ctx, sc::schur_even(*ctx, lambda));
          assumed_even_irreducible = true;
        } else {
          ch = sc::euler_chi(*ctx, lambda);
        }
        if (sink.json()) {
          sc::Json j = sc::character_json(*ctx, ch);
          if (assumed_even_irreducible) j["evenIrreducibilityAssumed"] = true;
          sink.emit(j);
        } else {
          std::string text = sc::character_text(ch);
          if (assumed_even_irreducible) text = "even-irreducibility assumed\n" + text;
          sink.emit(text);
        }
      });
    }

    if (cmd_jan->parsed()) {
      auto ctx = make_context(m, n, p);
      sc::Weight lambda = parse_weight_checked(*ctx, lambda_text);
      sc::JantzenModes modes;
      modes.odd_index = mode_text == "corollary" ? sc::OddIndexMode::Corollary
                                                 : sc::OddIndexMode::StrictPaper;
      modes.multiplicity = mult_text == "on";
      return run_guarded(sink, [&]() {
        sc::JantzenReport rep = sc::jantzen_sum(*ctx, lambda, modes);
        if (sink.json()) sink.emit(sc::jantzen_report_json(*ctx, rep));
        else sink.emit(sc::jantzen_report_text(*ctx, rep));
      });
    }

    if (cmd_st->parsed()) {
      auto ctx = make_context(m, n, p);
      sc::Weight mu = parse_weight_checked(*ctx, mu_text);
      return run_guarded(sink, [&]() {
        sc::SteinbergReduction red = sc::steinberg_reduce(*ctx, mu);
        if (sink.json()) sink.emit(sc::steinberg_json(*ctx, red));
        else sink.emit(sc::steinberg_text(red));
      });
    }

    if (cmd_gl11->parsed()) {
      auto ctx = make_context(1, 1, gl11_p);
      sc::Weight lambda = parse_weight_checked(*ctx, gl11_lambda);
      sc::Int wi = lambda.delta[0], wj = lambda.eps[0];

      if (gl11_oracle->parsed())
        return run_guarded(sink, [&]() {
          sc::Character ch = sc::jantzen_oracle(*ctx, lambda);
          if (sink.json()) sink.emit(sc::character_json(*ctx, ch));
          else sink.emit(sc::character_text(ch));
        });

      if (gl11_analyze->parsed())
        return run_guarded(sink, [&]() {
          sc::CompositionReport rep = sc::composition_analysis(wi, wj, gl11_p);
          if (sink.json()) {
            sc::Json j;
            j["irreducible"] = rep.irreducible;
            j["dimension"] = rep.dimension;
            j["socle"] = sc::weight_json(rep.socle_weight);
            j["head"] = sc::weight_json(rep.head_weight);
            sink.emit(j);
          } else {
            std::ostringstream os;
            if (rep.irreducible) os << "irreducible, dim 2";
            else
              os << "socle weight: " << sc::format_weight(rep.socle_weight)
                 << "; head weight: " << sc::format_weight(rep.head_weight);
            sink.emit(os.str());
          }
        });

      if (gl11_maps->parsed())
        return run_guarded(sink, [&]() {
          sc::Map2 t = sc::map_T(wi, wj);
          sc::Map2 tp = sc::map_Tprime(wi, wj);
          std::ostringstream os;
          os << "T (B,X)->(Y,C): " << map2_str(t) << '\n';
          os << "T' (C,Y)->(X,B): " << map2_str(tp) << '\n';
          os << "T'*T = " << (wi + wj) << " * id";
          if ((wi + wj) % gl11_p == 0)
            os << "\nUpsilon (B,X)->(B,X): " << map2_str(sc::map_upsilon(wi, wj, 1, gl11_p));
          sink.emit(os.str());
        });

      // gl11 act
      return run_guarded(sink, [&]() {
        sc::GrassmannRing ring;
        ring.generators = gl11_r;
        if (gl11_ring == "z") ring.mode = sc::RingMode::Integers;
        else if (gl11_ring == "modp") { ring.mode = sc::RingMode::ModP; ring.p = gl11_p; }
        else ring.mode = sc::RingMode::Rationals;

        sc::Grassmann a = sc::Grassmann::scalar(ring, gen_a);
        sc::Grassmann b = sc::Grassmann::scalar(ring, gen_b);
        sc::GL11Point g = sc::GL11Point::identity(ring);
        if (gl11_gen == "diag") {
          g = sc::GL11Point::diagonal(a, b);
        } else if (gl11_gen == "upper") {
          sc::Grassmann mm =
              sc::Grassmann::scalar(ring, gen_mcoef) * sc::Grassmann::generator(ring, 1);
          g = sc::GL11Point::upper(a, mm, b);
        } else {
          sc::Grassmann nn =
              sc::Grassmann::scalar(ring, gen_ncoef) * sc::Grassmann::generator(ring, 2);
          g = sc::GL11Point::lower(a, nn, b);
        }
        sc::GL11Module mod{gl11_module == "plus" ? sc::Orientation::PlusBeta
                                                 : sc::Orientation::MinusBeta,
                           wi, wj};
        const char* names = gl11_module == "plus" ? "CY" : "BX";
        std::ostringstream os;
        for (int which = 0; which < 2; ++which) {
          sc::GL11Element v = sc::basis_element(ring, mod, which);
          sc::GL11Element gv = sc::act(g, v);
          os << "g." << names[which] << " = (" << gv.c0.str() << ") " << names[0] << " + ("
             << gv.c1.str() << ") " << names[1] << '\n';
        }
        std::string text = os.str();
        text.pop_back();
        sink.emit(text);
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << '\n';
    return 2;
  }
  return 2;
}
