#include "superchar/render.hpp"

#include <sstream>

namespace superchar {

std::string character_text(const Character& ch) {
  if (ch.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& terms = ch.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << '\n';
    first = false;
    os << it->second << " * e[" << format_weight(it->first) << ']';
  }
  return os.str();
}

Json weight_json(const Weight& w) {
  Json j;
  j["delta"] = w.delta;
  j["eps"] = w.eps;
  return j;
}

Weight weight_from_json(const Json& j) {
  Weight w;
  w.delta = j.at("delta").get<std::vector<Int>>();
  w.eps = j.at("eps").get<std::vector<Int>>();
  return w;
}

Json character_json(const GLContext& ctx, const Character& ch) {
  Json j;
  j["m"] = ctx.m();
  j["n"] = ctx.n();
  Json terms = Json::array();
  const auto& map = ch.terms();
  for (auto it = map.rbegin(); it != map.rend(); ++it) {
    Json t;
    t["weight"] = weight_json(it->first);
    t["coeff"] = it->second;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Character character_from_json(const Json& j) {
  Character ch;
  for (const auto& t : j.at("terms"))
    ch.add(weight_from_json(t.at("weight")), t.at("coeff").get<Int>());
  return ch;
}

namespace {

std::string pairing_list(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string typicality_text(const TypicalityWitness& t, const TypicalityWitness& tp) {
  std::ostringstream os;
  os << "typical: " << yesno(t.value);
  if (!t.value) os << " (first failing i=" << t.first_failing << ")";
  os << "; p-typical: " << yesno(tp.value);
  if (!tp.value && t.value) os << " (first failing i=" << tp.first_failing << ")";
  os << "; pairings: " << pairing_list(t.pairings);
  return os.str();
}

Json typicality_json(const GLContext& ctx, const Weight& lambda, const TypicalityWitness& t,
                     const TypicalityWitness& tp) {
  Json j;
  j["m"] = ctx.m();
  j["n"] = ctx.n();
  j["p"] = ctx.p();
  j["lambda"] = weight_json(lambda);
  j["typical"] = t.value;
  j["pTypical"] = tp.value;
  j["firstFailing"] = t.value ? 0 : t.first_failing;
  j["firstFailingModP"] = tp.value ? 0 : tp.first_failing;
  j["pairings"] = t.pairings;
  return j;
}

Json jantzen_report_json(const GLContext& ctx, const JantzenReport& rep) {
  Json j;
  j["m"] = ctx.m();
  j["n"] = ctx.n();
  j["p"] = ctx.p();
  j["lambda"] = weight_json(rep.lambda);
  j["typical"] = Json{{"value", rep.typical.value},
                      {"firstFailing", rep.typical.first_failing},
                      {"pairings", rep.typical.pairings}};
  j["modes"] = Json{
      {"oddIndex", rep.modes.odd_index == OddIndexMode::Corollary ? "corollary" : "strict-paper"},
      {"multiplicity", rep.modes.multiplicity ? "on" : "off"}};
  Json evens = Json::array();
  for (const auto& t : rep.even_terms) {
    Json e;
    e["alpha"] = format_root(t.alpha, ctx.m());
    e["mp"] = t.mp;
    e["valuation"] = t.valuation;
    e["term"] = character_json(ctx, t.term);
    evens.push_back(std::move(e));
  }
  j["evenTerms"] = std::move(evens);
  Json odds = Json::array();
  Json trunc = Json::array();
  for (const auto& t : rep.odd_terms) {
    Json o;
    o["i"] = t.i;
    o["pairing"] = t.pairing;
    o["valuation"] = t.valuation;
    o["kMax"] = t.k_max;
    o["term"] = character_json(ctx, t.term);
    odds.push_back(std::move(o));
    trunc.push_back(Json{{"i", t.i}, {"kMax", t.k_max}});
  }
  j["oddTerms"] = std::move(odds);
  j["truncation"] = std::move(trunc);
  j["total"] = character_json(ctx, rep.total);
  j["head"] = Json{{"gamma", weight_json(rep.head_gamma)}, {"label", weight_json(rep.head_label)}};
  return j;
}

std::string jantzen_report_text(const GLContext& ctx, const JantzenReport& rep) {
  std::ostringstream os;
  os << "lambda: " << format_weight(rep.lambda) << '\n';
  os << "typical: " << yesno(rep.typical.value)
     << "; pairings: " << pairing_list(rep.typical.pairings) << '\n';
  os << "mode: "
     << (rep.modes.odd_index == OddIndexMode::Corollary ? "corollary" : "strict-paper")
     << "; multiplicity: " << (rep.modes.multiplicity ? "on" : "off") << '\n';
  if (rep.even_terms.empty()) {
    os << "even terms: none\n";
  } else {
    for (const auto& t : rep.even_terms) {
      os << "even term alpha=" << format_root(t.alpha, ctx.m()) << " mp=" << t.mp
         << " valuation=" << t.valuation << ":\n";
      std::istringstream lines(character_text(t.term));
      std::string line;
      while (std::getline(lines, line)) os << "  " << line << '\n';
    }
  }
  if (rep.odd_terms.empty()) {
    os << "odd terms: none\n";
  } else {
    for (const auto& t : rep.odd_terms) {
      os << "odd term i=" << t.i << " pairing=" << t.pairing << " valuation=" << t.valuation
         << " kMax=" << t.k_max << ":\n";
      std::istringstream lines(character_text(t.term));
      std::string line;
      while (std::getline(lines, line)) os << "  " << line << '\n';
    }
  }
  os << "total:\n";
  std::istringstream lines(character_text(rep.total));
  std::string line;
  while (std::getline(lines, line)) os << "  " << line << '\n';
  os << "head: gamma=" << format_weight(rep.head_gamma)
     << " label=" << format_weight(rep.head_label);
  return os.str();
}

Json steinberg_json(const GLContext& ctx, const SteinbergReduction& red) {
  Json j;
  j["m"] = ctx.m();
  j["n"] = ctx.n();
  j["p"] = ctx.p();
  j["lambda"] = weight_json(red.lambda);
  j["varpi"] = weight_json(red.varpi);
  j["l"] = red.l;
  Json digits = Json::array();
  for (const auto& d : red.digits) digits.push_back(weight_json(d));
  j["digits"] = std::move(digits);
  return j;
}

std::string steinberg_text(const SteinbergReduction& red) {
  std::ostringstream os;
  os << "lambda: " << format_weight(red.lambda) << '\n';
  os << "varpi: " << format_weight(red.varpi) << '\n';
  os << "l: " << red.l << '\n';
  os << "digits:";
  for (const auto& d : red.digits) os << ' ' << format_weight(d);
  return os.str();
}

Json error_json(ErrorCode code, const std::string& message) {
  Json j;
  j["error"] = Json{{"code", error_code_name(code)}, {"message", message}};
  return j;
}

std::string render_json(const Json& j) { return j.dump(); }

}  // namespace superchar
