// SPDX-License-Identifier: Apache-2.0
//
// JSON shapes for fields, recipes and certificates. Elements are written as
// their packed integers.
//
//   field:       {"p", "m", "modulus": [c_0 .. c_m], "theta"}
//   recipe:      {"kind", "p", "m", "s"?, "l"?, "t"?, "e1"?, "e2"?}
//   certificate: {"field", "recipe"?, "n", "k", "extended", "points", "twist",
//                 "self_dual": {"pass", "reason"?},
//                 "criterion": {"clause", "pass", "characters"},
//                 "mds": {"verdict", "minors", "structured"?, "reason"?, "witness"?},
//                 "timings_ms"?: {stage: ms}}
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mdssd/constructions.hpp"
#include "mdssd/gf.hpp"
#include "mdssd/verify.hpp"

namespace mdssd {

using json = nlohmann::ordered_json;

inline json to_json(const Field& F) {
  return json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}, {"theta", F.theta().packed()}};
}

inline json to_json(const std::vector<Element>& xs) {
  json a = json::array();
  for (Element x : xs) a.push_back(x.packed());
  return a;
}

inline json to_json(const Recipe& r) {
  json j{{"kind", std::string(to_string(r.kind))}, {"p", r.p}, {"m", r.m}};
  if (r.s) j["s"] = *r.s;
  if (r.l) j["l"] = *r.l;
  if (r.t) j["t"] = *r.t;
  if (r.e1) j["e1"] = *r.e1;
  if (r.e2) j["e2"] = *r.e2;
  return j;
}

inline Recipe recipe_from_json(const json& j) {
  Recipe r;
  try {
    const auto kind = parse_recipe_kind(j.at("kind").get<std::string>());
    if (!kind) throw Error(Errc::ParseError, "unknown recipe kind " + j.at("kind").dump());
    r.kind = *kind;
    r.p = j.value("p", 0u);
    r.m = j.value("m", 0u);
    if (j.contains("s")) r.s = j["s"].get<unsigned>();
    if (j.contains("l")) r.l = j["l"].get<unsigned>();
    if (j.contains("t")) r.t = j["t"].get<std::uint64_t>();
    if (j.contains("e1")) r.e1 = j["e1"].get<std::uint64_t>();
    if (j.contains("e2")) r.e2 = j["e2"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return r;
}

inline json to_json(const MdsVerdict& v) {
  json j{{"verdict", std::string(to_string(v.kind))}, {"minors", v.minors}};
  if (v.kind == MdsVerdict::Kind::Sampled || v.structured) j["structured"] = v.structured;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.kind == MdsVerdict::Kind::Failed) j["witness"] = v.witness;
  return j;
}

inline json to_json(const Certificate& c, bool include_timings = true) {
  json j;
  j["field"] = to_json(c.field);
  if (c.recipe) j["recipe"] = to_json(*c.recipe);
  j["n"] = c.n;
  j["k"] = c.k;
  j["extended"] = c.extended;
  j["points"] = to_json(c.points);
  j["twist"] = to_json(c.twist.entries());
  json sd{{"pass", c.self_dual.pass}};
  if (!c.self_dual.reason.empty()) sd["reason"] = c.self_dual.reason;
  j["self_dual"] = sd;
  j["criterion"] = json{{"clause", c.criterion.clause}, {"pass", c.criterion.pass}, {"characters", c.criterion.characters}};
  j["mds"] = to_json(c.mds);
  if (include_timings) {
    json t = json::object();
    for (const auto& [name, ms] : c.timings_ms) t[name] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

}  // namespace mdssd
