#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pancyc/graph.hpp"
#include "pancyc/surgery.hpp"

namespace pancyc {

/// Result of an engine run: a refutation of one of the two hypotheses, or an
/// explicit statement that the desk-scale constants ran out.
struct Witness {
  enum class Kind { IndependentSet, Contradicting, Inconclusive };

  Kind kind = Kind::Inconclusive;
  // IndependentSet: the set. Inconclusive: best verified independent set found, possibly empty.
  std::vector<Vertex> vertices;
  std::optional<CycleWitness> cycle;
  std::string reason;

  static Witness independent(std::vector<Vertex> vs) {
    Witness w;
    w.kind = Kind::IndependentSet;
    w.vertices = std::move(vs);
    return w;
  }
  static Witness contradicting(CycleWitness c) {
    Witness w;
    w.kind = Kind::Contradicting;
    c.kind = CycleKind::Contradicting;
    w.cycle = std::move(c);
    return w;
  }
  static Witness inconclusive(std::string why, std::vector<Vertex> best = {}) {
    Witness w;
    w.kind = Kind::Inconclusive;
    w.reason = std::move(why);
    w.vertices = std::move(best);
    return w;
  }
};

inline bool is_independent_set(const CycledGraph& g, const std::vector<Vertex>& vs) {
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace pancyc
