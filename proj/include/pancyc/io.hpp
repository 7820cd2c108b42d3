#pragma once

// JSON views of the library's result types.

#include <string>

#include "json.hpp"
#include "pancyc/arc_system.hpp"
#include "pancyc/error.hpp"
#include "pancyc/surgery.hpp"
#include "pancyc/witness.hpp"

namespace pancyc {

using json = nlohmann::ordered_json;

inline json to_json(const CycleWitness& w) {
  return json{{"cycle", w.cycle},
              {"length", w.length},
              {"kind", w.kind == CycleKind::Contradicting ? "contradicting" : "plain"}};
}

inline json to_json(const ArcSystem& sys) {
  json arcs = json::array();
  for (const auto& a : sys.arcs()) arcs.push_back(a.vertices());
  return json{{"arcs", arcs}, {"independent", sys.independent()}, {"simple", sys.simple()}};
}

inline std::string kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::IndependentSet: return "independent_set";
    case Witness::Kind::Contradicting: return "contradicting";
    case Witness::Kind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

inline json to_json(const Witness& w, const json& trace = json::array()) {
  json j{{"kind", kind_name(w.kind)},
         {"vertices", w.vertices},
         {"cycle", w.cycle ? to_json(*w.cycle) : json(nullptr)},
         {"trace", trace}};
  if (!w.reason.empty()) j["reason"] = w.reason;
  return j;
}

inline CycleWitness cycle_from_json(const json& j) {
  try {
    CycleWitness w;
    w.cycle = j.at("cycle").get<std::vector<Vertex>>();
    w.length = j.at("length").get<int>();
    w.contains = w.cycle;
    std::sort(w.contains.begin(), w.contains.end());
    w.kind = j.value("kind", std::string("plain")) == "contradicting" ? CycleKind::Contradicting : CycleKind::Plain;
    return w;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, std::string("bad cycle JSON: ") + e.what());
  }
}

inline Witness witness_from_json(const json& j) {
  try {
    Witness w;
    auto kind = j.at("kind").get<std::string>();
    if (kind == "independent_set")
      w.kind = Witness::Kind::IndependentSet;
    else if (kind == "contradicting")
      w.kind = Witness::Kind::Contradicting;
    else if (kind == "inconclusive")
      w.kind = Witness::Kind::Inconclusive;
    else
      throw Error(Errc::MalformedFile, "unknown witness kind `" + kind + "`");
    if (j.contains("vertices")) w.vertices = j.at("vertices").get<std::vector<Vertex>>();
    if (j.contains("cycle") && !j.at("cycle").is_null()) w.cycle = cycle_from_json(j.at("cycle"));
    w.reason = j.value("reason", std::string());
    return w;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, std::string("bad witness JSON: ") + e.what());
  }
}

/// Arcs listed as vertex arrays, as produced by to_json(ArcSystem).
inline ArcSystem arc_system_from_json(GraphPtr g, ProfilePtr prof, const json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(*g, a.get<std::vector<Vertex>>());
    return ArcSystem(std::move(g), std::move(prof), std::move(arcs));
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedFile, std::string("bad arc-system JSON: ") + e.what());
  }
}

}  // namespace pancyc
