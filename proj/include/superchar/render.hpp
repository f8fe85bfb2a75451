#pragma once

#include <string>

#include <json.hpp>

#include "superchar/charring.hpp"
#include "superchar/jantzen.hpp"

namespace superchar {

using Json = nlohmann::ordered_json;

// Text form: one "<coeff> * e[<weight>]" line per term, weights descending in
// the (delta, eps) lexicographic order; "0" for the zero character.
std::string character_text(const Character& ch);

// {"m":M,"n":N,"terms":[{"weight":{"delta":[...],"eps":[...]},"coeff":C},...]}
// with terms sorted as in text mode.
Json character_json(const GLContext& ctx, const Character& ch);
Character character_from_json(const Json& j);

Json weight_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json typicality_json(const GLContext& ctx, const Weight& lambda, const TypicalityWitness& t,
                     const TypicalityWitness& tp);
std::string typicality_text(const TypicalityWitness& t, const TypicalityWitness& tp);

Json jantzen_report_json(const GLContext& ctx, const JantzenReport& rep);
std::string jantzen_report_text(const GLContext& ctx, const JantzenReport& rep);

Json steinberg_json(const GLContext& ctx, const SteinbergReduction& red);
std::string steinberg_text(const SteinbergReduction& red);

Json error_json(ErrorCode code, const std::string& message);

std::string render_json(const Json& j);  // fixed dump settings, byte-stable

}  // namespace superchar
