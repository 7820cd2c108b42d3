#pragma once

// The recursive independent-set argument run as an algorithm. Every branch
// ends in a machine-checked witness: an independent set, a contradicting
// cycle, or an Inconclusive value naming the guarantee that lapsed.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pancyc/arc_system.hpp"
#include "pancyc/constants.hpp"
#include "pancyc/error.hpp"
#include "pancyc/expansion.hpp"
#include "pancyc/io.hpp"
#include "pancyc/surgery.hpp"
#include "pancyc/witness.hpp"

namespace pancyc {

/// Stage records, appended in execution order.
using Trace = json;

// ---------------------------------------------------------------------------
// Main / leftover parts

struct ArcSplit {
  Arc main;
  Arc leftover;
};

/// Main part = last floor(|A|/2) vertices in closure order; leftover = the rest.
inline ArcSplit main_leftover_split(const CycledGraph& g, const Arc& a) {
  require(a.size() >= 2, Errc::TooSmall, "an arc of size " + std::to_string(a.size()) + " has no main part");
  const auto& vs = a.vertices();
  const auto cut = vs.begin() + (a.size() - a.size() / 2);
  return {Arc(g, {cut, vs.end()}), Arc(g, {vs.begin(), cut})};
}

// ---------------------------------------------------------------------------
// Independent set from a simple system: drop one covering vertex per arc-edge.

inline std::vector<Vertex> lemma34_extract(const ArcSystem& sys) {
  require(sys.simple(), Errc::NotSimple, "lemma34_extract needs a simple arc system");
  const auto& g = sys.graph();
  std::vector<char> removed(g.n(), 0);
  for (int i = 0; i < sys.size(); ++i)
    for (int j = i + 1; j < sys.size(); ++j) {
      auto r = detect_m2(g, sys.arc(i), sys.arc(j));
      require(r.m2_free, Errc::NotSimple, "arcs " + std::to_string(i) + "," + std::to_string(j) + " carry an M2");
      bool has_edges = !edges_between(g, sys.arc(i), sys.arc(j)).empty();
      require(!has_edges || r.cover.has_value(), Errc::CoverMissing, "M2-free pair with edges but no cover");
      if (r.cover) removed[*r.cover] = 1;
    }
  std::vector<Vertex> out;
  for (const auto& a : sys.arcs())
    for (Vertex v : a.vertices())
      if (!removed[v]) out.push_back(v);
  require(is_independent_set(g, out), Errc::VerificationFailed,
          "extracted set is not independent (an arc carries an internal edge)");
  return out;
}

// ---------------------------------------------------------------------------
// Peeling process

struct PeelRecord {
  int arc = -1;                 // index in the input system
  std::vector<Vertex> expanding;
  std::vector<Vertex> removed;  // B = A \ X
  int nb_degree = 0;            // |N(B)| in the current system
  Count nb_bound = 0;           // 2 |A| t
  int tight_sets = 0;
  int tight_union_size = 0;
  int tight_union_degree = 0;   // |N(T)|
  Count tight_union_bound = 0;  // (|T| + i) t
};

struct Lemma41Outcome {
  enum class Kind { IndependentSet, GoodSystem, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<Vertex> vertices;           // independent set (or best effort)
  std::vector<int> good_arcs;             // indices into the input system
  std::vector<GoodResult> certificates;   // aligned with good_arcs; arc ids index the good subsystem
  std::vector<PeelRecord> peels;
  int collection_size = 0;
  int collection_edges = 0;
  std::string reason;
};

inline json peel_json(const PeelRecord& r) {
  return json{{"arc", r.arc},
              {"expanding", r.expanding.size()},
              {"removed", r.removed.size()},
              {"nb_degree", r.nb_degree},
              {"nb_bound", r.nb_bound},
              {"tight_sets", r.tight_sets},
              {"tight_union_degree", r.tight_union_degree},
              {"tight_union_bound", r.tight_union_bound}};
}

/// While some arc is bad, move A \ X (X its maximal expanding set) to the
/// collection B and drop A. Ends with a non-empty all-good subsystem, or
/// with an independent set drawn from a low-edge sub-collection of B.
inline Lemma41Outcome lemma41_process(const ArcSystem& sys, const Constants& c, Trace* trace = nullptr) {
  Lemma41Outcome out;
  const auto& g = sys.graph();
  const Threshold t{static_cast<long long>(std::min<Count>(c.t_good, 1LL << 40))};
  std::vector<int> active(sys.size());
  std::iota(active.begin(), active.end(), 0);
  std::vector<Arc> collected;

  while (!active.empty()) {
    ArcSystem cur = sys.subsystem(active);
    std::vector<GoodResult> results;
    int bad = -1;
    for (int i = 0; i < cur.size() && bad < 0; ++i) {
      results.push_back(classify_good(cur, i, t));
      if (!results.back().good) bad = i;
    }
    if (bad < 0) {
      out.kind = Lemma41Outcome::Kind::GoodSystem;
      out.good_arcs = active;
      out.certificates = std::move(results);
      break;
    }

    const Arc& A = cur.arc(bad);
    PeelRecord rec;
    rec.arc = active[bad];
    rec.expanding = results.back().expanding;
    for (Vertex v : A.vertices())
      if (std::find(rec.expanding.begin(), rec.expanding.end(), v) == rec.expanding.end()) rec.removed.push_back(v);

    std::vector<Vertex> T;
    for (Vertex v : rec.removed) {
      auto tv = find_tight_set(cur, rec.expanding, v, t);
      T.insert(T.end(), tv.begin(), tv.end());
    }
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    rec.tight_sets = static_cast<int>(rec.removed.size());
    rec.tight_union_size = static_cast<int>(T.size());
    rec.tight_union_degree = arc_degree(cur, T);
    rec.tight_union_bound = sat_mul(static_cast<Count>(T.size() + rec.removed.size()), static_cast<Count>(t.t));
    rec.nb_degree = arc_degree(cur, rec.removed);
    rec.nb_bound = sat_mul(2 * static_cast<Count>(A.size()), static_cast<Count>(t.t));
    require(static_cast<Count>(rec.tight_union_degree) <= rec.tight_union_bound, Errc::InvariantViolation,
            "tight-set union bound violated");
    require(static_cast<Count>(rec.nb_degree) <= rec.nb_bound, Errc::InvariantViolation,
            "peeled set exceeds |N(B)| <= 2|A|t");
    collected.emplace_back(g, rec.removed);
    out.peels.push_back(std::move(rec));
    active.erase(active.begin() + bad);
  }
  if (trace) {
    json peels = json::array();
    for (const auto& r : out.peels) peels.push_back(peel_json(r));
    trace->push_back({{"stage", "lemma41_peel"}, {"level", c.p}, {"t", t.t}, {"peels", peels}});
  }
  if (out.kind == Lemma41Outcome::Kind::GoodSystem) {
    if (trace) trace->push_back({{"stage", "lemma41_good"}, {"level", c.p}, {"good_arcs", out.good_arcs.size()}});
    return out;
  }

  // Everything was peeled: thin the collection by deleting max-degree arcs.
  ArcSystem bsys = sys.with_arcs(collected);
  std::vector<int> keep(bsys.size());
  std::iota(keep.begin(), keep.end(), 0);
  const std::size_t goal = static_cast<std::size_t>(std::min<Count>(c.collection, static_cast<Count>(bsys.size())));
  ArcGraph ag = build_arc_graph(bsys);
  std::vector<char> alive(bsys.size(), 1);
  while (keep.size() > goal) {
    int worst = -1, worst_deg = -1;
    for (int i : keep) {
      int d = 0;
      for (int j : ag.adj[i]) d += alive[j];
      if (d > worst_deg) {
        worst = i;
        worst_deg = d;
      }
    }
    alive[worst] = 0;
    keep.erase(std::find(keep.begin(), keep.end(), worst));
  }
  ArcSystem csys = bsys.subsystem(keep);
  out.collection_size = csys.size();
  out.collection_edges = build_arc_graph(csys).m();
  out.vertices = lemma34_extract(csys);
  const bool enough = static_cast<Count>(out.vertices.size()) >= c.target;
  out.kind = enough ? Lemma41Outcome::Kind::IndependentSet : Lemma41Outcome::Kind::Inconclusive;
  if (!enough)
    out.reason = "low-edge collection yields only " + std::to_string(out.vertices.size()) +
                 " independent vertices, target " + std::to_string(c.target);
  if (trace)
    trace->push_back({{"stage", "lemma41_collection"},
                      {"level", c.p},
                      {"collected", bsys.size()},
                      {"kept", csys.size()},
                      {"arc_edges", out.collection_edges},
                      {"independent", out.vertices.size()},
                      {"target", c.target}});
  return out;
}

// ---------------------------------------------------------------------------
// Semi-triangle search

struct SemiTriangleOutcome {
  enum class Kind { IndependentSet, SemiTriangle, Contradicting, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::vector<Vertex> vertices;
  SemiTriangle triangle;
  std::optional<CycleWitness> cycle;
  std::string reason;
};

Witness main_induction(const ArcSystem& sys, const Constants& c, Trace* trace = nullptr);

namespace detail {

inline int step_index(int i, int b, Orientation dir) {
  return dir == Orientation::Forward ? (i + 1) % b : (i - 1 + b) % b;
}

/// Arcs strictly between `from` and `to` walking in direction dir.
inline int arcs_between(int from, int to, int b, Orientation dir) {
  int d = dir == Orientation::Forward ? to - from : from - to;
  d = ((d % b) + b) % b;
  return d == 0 ? b - 1 : d - 1;
}

/// Frame offset of arc j from arc i (0 for i itself).
inline int arc_offset(int i, int j, int b, Orientation dir) {
  int d = dir == Orientation::Forward ? j - i : i - j;
  return ((d % b) + b) % b;
}

inline int frame_offset(const CycledGraph& g, Vertex origin, Vertex v, Orientation dir) {
  int d = oriented_pos(g, v, dir) - oriented_pos(g, origin, dir);
  return ((d % g.n()) + g.n()) % g.n();
}

/// First vertex of M(arc) adjacent to v.
inline Vertex main_neighbor(const ArcSystem& sys, int arc, Vertex v) {
  const auto& g = sys.graph();
  auto split = main_leftover_split(g, sys.arc(arc));
  for (Vertex w : split.main.vertices())
    if (g.adjacent(v, w)) return w;
  return -1;
}

}  // namespace detail

/// Given an arc A and disjoint assignments of main-part neighbour arcs to
/// vertices of A, look for a semi-triangle (A,B,C) or an independent set of
/// the target size assembled from recursive sets in the leftover parts.
inline SemiTriangleOutcome lemma42_semitriangle(const ArcSystem& sys, int arc_a, const Assignment& assign,
                                                const Constants& c, Orientation dir = Orientation::Reverse,
                                                Trace* trace = nullptr) {
  using K = SemiTriangleOutcome::Kind;
  const auto& g = sys.graph();
  const int b = sys.size();
  SemiTriangleOutcome out;
  const int after = detail::step_index(arc_a, b, dir);

  std::vector<std::pair<Vertex, std::vector<int>>> usable;
  for (const auto& [v, arcs] : assign) {
    std::vector<int> kept;
    for (int x : arcs)
      if (x != after && x != arc_a && sys.arc(x).size() >= 2) kept.push_back(x);
    if (static_cast<Count>(kept.size()) >= c.t_assign) usable.emplace_back(v, std::move(kept));
  }
  json rec{{"stage", "lemma42"}, {"level", c.p}, {"arc", arc_a}, {"assigned_vertices", usable.size()}};
  auto finish = [&](SemiTriangleOutcome o, const std::string& result) {
    rec["result"] = result;
    if (trace) trace->push_back(rec);
    return o;
  };
  if (usable.empty()) {
    out.reason = "no vertex of arc " + std::to_string(arc_a) + " keeps " + std::to_string(c.t_assign) +
                 " assigned arcs";
    return finish(out, "inconclusive");
  }

  const Constants sub = c.at_level(c.p - 1);
  std::vector<Vertex> pool;      // union of the J_v found so far
  std::map<Vertex, Vertex> src;  // pool vertex -> the A-vertex whose J it came from
  std::vector<int> j_sizes;
  for (const auto& [v, arcs] : usable) {
    std::vector<Arc> left;
    for (int x : arcs) left.push_back(main_leftover_split(g, sys.arc(x)).leftover);
    Witness jw = main_induction(sys.with_arcs(left), sub, trace);
    if (jw.kind == Witness::Kind::Contradicting) {
      out.kind = K::Contradicting;
      out.cycle = jw.cycle;
      return finish(out, "contradicting");
    }
    const auto& J = jw.vertices;
    j_sizes.push_back(static_cast<int>(J.size()));
    rec["j_sizes"] = j_sizes;

    for (Vertex bv : J) {
      for (Vertex cv : g.neighbors(bv)) {
        auto it = src.find(cv);
        if (it == src.end()) continue;
        Vertex u = it->second;
        int B = sys.owner(bv), C = sys.owner(cv);
        Vertex vb = detail::main_neighbor(sys, B, v);
        Vertex uc = detail::main_neighbor(sys, C, u);
        require(vb >= 0 && uc >= 0 && B != C, Errc::InvariantViolation, "assignment without witnessing edge");
        Vertex av = v, au = u, lb = bv, lc = cv;
        if (detail::arc_offset(arc_a, B, b, dir) > detail::arc_offset(arc_a, C, b, dir)) {
          std::swap(av, au);
          std::swap(lb, lc);
          std::swap(vb, uc);
          std::swap(B, C);
        }
        // av-vb, au-uc, lb-lc are the three edges.
        SemiTriangle t;
        t.dir = dir;
        auto ordered = [&](Vertex p, Vertex q) {
          return detail::frame_offset(g, p, q, dir) < detail::frame_offset(g, q, p, dir) ? std::pair{p, q}
                                                                                         : std::pair{q, p};
        };
        std::tie(t.a1, t.a2) = ordered(av, au);
        std::tie(t.b1, t.b2) = ordered(lb, vb);
        std::tie(t.c1, t.c2) = ordered(lc, uc);
        t.arc_a = arc_a;
        t.arc_b = B;
        t.arc_c = C;
        t.length = detail::arcs_between(arc_a, B, b, dir);
        auto same = [](Chord x, Vertex p, Vertex q) { return (x.u == p && x.v == q) || (x.u == q && x.v == p); };
        auto matches = [&](int type) {
          t.type = type;
          auto w = t.witness_edges();
          return std::all_of(w.begin(), w.end(), [&](Chord x) {
            return same(x, av, vb) || same(x, au, uc) || same(x, lb, lc);
          });
        };
        if (!matches(1) && !matches(2)) {
          out.reason = "edge pattern matches neither semi-triangle type";
          return finish(out, "inconclusive");
        }
        require(is_semi_triangle(g, t), Errc::InvariantViolation, "assembled semi-triangle fails re-validation");
        rec["triangle"] = {{"type", t.type}, {"arcs", {t.arc_a, t.arc_b, t.arc_c}}, {"length", t.length}};
        out.triangle = t;
        if (t.type == 1) {
          out.kind = K::SemiTriangle;
          return finish(out, "type1");
        }
        try {
          auto w = semi_triangle_surgery(g, t);
          if (validate_contradicting(g, sys.profile(), w)) {
            out.kind = K::Contradicting;
            w.kind = CycleKind::Contradicting;
            out.cycle = std::move(w);
            return finish(out, "contradicting");
          }
          out.reason = "Type 2 surgery gave a cycle of length " + std::to_string(w.length) +
                       " that is not contradicting";
        } catch (const Error& e) {
          out.reason = std::string("Type 2 surgery failed: ") + e.what();
        }
        out.kind = K::Inconclusive;
        out.vertices = pool;
        return finish(out, "inconclusive");
      }
    }
    for (Vertex x : J) {
      pool.push_back(x);
      src[x] = v;
    }
    if (static_cast<Count>(pool.size()) >= c.target) break;
  }

  std::sort(pool.begin(), pool.end());
  require(is_independent_set(g, pool), Errc::InvariantViolation, "union of recursive sets is not independent");
  out.vertices = pool;
  if (static_cast<Count>(pool.size()) >= c.target) {
    out.kind = K::IndependentSet;
    return finish(out, "independent_set");
  }
  out.reason = "recursive sets total " + std::to_string(pool.size()) + ", target " + std::to_string(c.target);
  return finish(out, "inconclusive");
}

// ---------------------------------------------------------------------------

namespace detail {

inline Witness sized(std::vector<Vertex> vs, const Constants& c, const std::string& what) {
  std::sort(vs.begin(), vs.end());
  if (static_cast<Count>(vs.size()) >= c.target) return Witness::independent(std::move(vs));
  auto n = vs.size();
  return Witness::inconclusive(what + " gives " + std::to_string(n) + " independent vertices, target " +
                                   std::to_string(c.target),
                               std::move(vs));
}

/// An arc with an internal edge: the longer H-path plus that edge.
inline std::optional<Witness> internal_edge_check(const ArcSystem& sys, Trace* trace, std::string* why) {
  const auto& g = sys.graph();
  for (const auto& a : sys.arcs()) {
    const auto& vs = a.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (!g.adjacent(vs[i], vs[j])) continue;
        auto w = chord_shortcut(g, {vs[i], vs[j]});
        bool ok = validate_contradicting(g, sys.profile(), w);
        if (trace)
          trace->push_back({{"stage", "internal_edge"}, {"edge", {vs[i], vs[j]}}, {"contradicting", ok},
                            {"length", w.length}});
        if (ok) return Witness::contradicting(std::move(w));
        *why = "arc carries internal edge {" + std::to_string(vs[i]) + "," + std::to_string(vs[j]) +
               "} whose shortcut cycle is not contradicting";
        return Witness::inconclusive(*why);
      }
  }
  return std::nullopt;
}

inline Witness from_semi(const SemiTriangleOutcome& o) {
  using K = SemiTriangleOutcome::Kind;
  switch (o.kind) {
    case K::IndependentSet: return Witness::independent(o.vertices);
    case K::Contradicting: return Witness::contradicting(*o.cycle);
    default: return Witness::inconclusive(o.reason, o.vertices);
  }
}

}  // namespace detail

/// Recursive search for an independent set of size x^p + 1 in a simple system.
inline Witness main_induction(const ArcSystem& sys, const Constants& c, Trace* trace) {
  using K = SemiTriangleOutcome::Kind;
  require(sys.simple(), Errc::NotSimple, "main_induction needs a simple arc system");
  if (trace)
    trace->push_back({{"stage", "main_induction"}, {"level", c.p}, {"arcs", sys.size()}, {"length", sys.length()},
                      {"target", c.target}});
  if (sys.size() == 0) return Witness::inconclusive("empty arc system at level " + std::to_string(c.p));
  std::string why;
  if (auto w = detail::internal_edge_check(sys, trace, &why)) return *w;
  const auto& g = sys.graph();

  if (c.p <= 1) {
    const Arc* best = &sys.arc(0);
    for (const auto& a : sys.arcs())
      if (a.size() > best->size()) best = &a;
    return detail::sized(best->vertices(), c, "longest arc");
  }
  if (c.p == 2) return detail::sized(lemma34_extract(sys), c, "covering-vertex extraction");

  // Level >= 3: work with main parts.
  std::vector<int> keep;
  for (int i = 0; i < sys.size(); ++i)
    if (sys.arc(i).size() >= 2) keep.push_back(i);
  if (keep.empty()) return Witness::inconclusive("no arc of size >= 2 at level " + std::to_string(c.p));
  ArcSystem base = sys.subsystem(keep);
  std::vector<Arc> mains;
  for (const auto& a : base.arcs()) mains.push_back(main_leftover_split(g, a).main);
  ArcSystem msys = base.with_arcs(mains);

  auto l41 = lemma41_process(msys, c, trace);
  if (l41.kind == Lemma41Outcome::Kind::IndependentSet) return Witness::independent(l41.vertices);
  if (l41.kind == Lemma41Outcome::Kind::Inconclusive) return Witness::inconclusive(l41.reason, l41.vertices);

  ArcSystem sysA = base.subsystem(l41.good_arcs);
  const int b = sysA.size();
  const auto dir = Orientation::Reverse;
  std::vector<Assignment> assign(b);
  for (int i = 0; i < b; ++i) assign[i] = l41.certificates[i].assignment;

  std::optional<SemiTriangle> best;
  std::vector<Vertex> best_effort;
  for (int i = 0; i < b; ++i) {
    auto o = lemma42_semitriangle(sysA, i, assign[i], c, dir, trace);
    if (o.kind == K::IndependentSet || o.kind == K::Contradicting) return detail::from_semi(o);
    if (o.kind == K::SemiTriangle && (!best || o.triangle.length < best->length)) best = o.triangle;
    if (o.kind == K::Inconclusive && o.vertices.size() > best_effort.size()) best_effort = o.vertices;
  }
  if (!best) return Witness::inconclusive("no Type 1 semi-triangle and no large independent set", best_effort);

  SemiTriangle cur = *best;
  for (int guard = 0; guard <= b; ++guard) {
    const int A = cur.arc_a, B = cur.arc_b, C = cur.arc_c;
    const int D = detail::step_index(A, b, dir);
    const int offB = detail::arc_offset(A, B, b, dir), offC = detail::arc_offset(A, C, b, dir);
    auto region_of = [&](int x) {
      int o = detail::arc_offset(A, x, b, dir);
      if (o > 0 && o < offB) return 0;
      if (o > offB && o < offC) return 1;
      if (o > offC) return 2;
      return -1;
    };
    std::array<Assignment, 3> split;
    for (const auto& [v, arcs] : assign[D]) {
      std::array<std::vector<int>, 3> parts;
      for (int x : arcs)
        if (int r = region_of(x); r >= 0) parts[r].push_back(x);
      for (int r = 0; r < 3; ++r)
        if (static_cast<Count>(parts[r].size()) >= c.t_assign) split[r].emplace_back(v, parts[r]);
    }
    int region = 0;
    for (int r = 1; r < 3; ++r)
      if (split[r].size() > split[region].size()) region = r;
    if (trace)
      trace->push_back({{"stage", "pigeonhole"},
                        {"level", c.p},
                        {"triangle", {A, B, C}},
                        {"length", cur.length},
                        {"d", D},
                        {"region_counts", {split[0].size(), split[1].size(), split[2].size()}},
                        {"chosen", region == 0 ? "A" : region == 1 ? "B" : "C"}});
    if (split[region].empty())
      return Witness::inconclusive("no region receives " + std::to_string(c.t_assign) +
                                       " assigned arcs from the arc after the minimal semi-triangle",
                                   best_effort);

    auto o = lemma42_semitriangle(sysA, D, split[region], c, dir, trace);
    if (o.kind != K::SemiTriangle) return detail::from_semi(o);
    const SemiTriangle& t2 = o.triangle;
    if (region == 0) {
      require(t2.length < cur.length, Errc::InvariantViolation, "semi-triangle length did not decrease");
      cur = t2;
      continue;
    }
    try {
      auto w = double_type1_surgery(g, cur, t2, region == 1 ? TriangleCase::B : TriangleCase::C);
      bool ok = validate_contradicting(g, sys.profile(), w);
      if (trace)
        trace->push_back({{"stage", "double_type1_surgery"}, {"case", region == 1 ? "B" : "C"}, {"length", w.length},
                          {"contradicting", ok}});
      if (ok) return Witness::contradicting(std::move(w));
      return Witness::inconclusive("double Type 1 surgery cycle of length " + std::to_string(w.length) +
                                       " is not contradicting",
                                   best_effort);
    } catch (const Error& e) {
      return Witness::inconclusive(std::string("double Type 1 surgery failed: ") + e.what(), best_effort);
    }
  }
  return Witness::inconclusive("semi-triangle descent did not terminate", best_effort);
}

// ---------------------------------------------------------------------------

struct EngineConfig {
  int arc_len = 2;
  int want = 4;
  Constants constants = desk_constants(2, 1);
};

struct EngineResult {
  Witness witness;
  Trace trace = json::array();
};

/// Failure of a pipeline stage, with the trace up to that point.
class EngineFailure : public Error {
 public:
  EngineFailure(Errc code, const std::string& what, Trace trace) : Error(code, what), trace_(std::move(trace)) {}
  const Trace& trace() const { return trace_; }

 private:
  Trace trace_;
};

/// True iff the witness re-verifies from scratch against g and the profile.
inline bool witness_sound(const CycledGraph& g, const ProblemProfile& prof, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::IndependentSet: return !w.vertices.empty() && is_independent_set(g, w.vertices);
    case Witness::Kind::Contradicting: return w.cycle && validate_contradicting(g, prof, *w.cycle);
    case Witness::Kind::Inconclusive: return w.vertices.empty() || is_independent_set(g, w.vertices);
  }
  return false;
}

/// problematic vertices -> arc system -> simplification -> recursive search.
inline EngineResult run_engine(GraphPtr g, std::vector<Vertex> W, int k, const EngineConfig& cfg) {
  EngineResult res;
  auto& tr = res.trace;
  auto prof = std::make_shared<const ProblemProfile>(mark_problematic(*g, std::move(W), k));
  tr.push_back({{"stage", "mark_problematic"},
                {"n", g->n()},
                {"k", k},
                {"problematic", prof->size()},
                {"sanity_bound", prof->sanity_bound()}});
  auto finish = [&](Witness w) {
    require(witness_sound(*g, *prof, w), Errc::InvariantViolation, "engine produced an unsound witness");
    res.witness = std::move(w);
    tr.push_back({{"stage", "result"}, {"kind", kind_name(res.witness.kind)}, {"size", res.witness.vertices.size()}});
    return res;
  };

  std::optional<ArcSystem> sys;
  try {
    sys = build_arc_system(g, prof, cfg.arc_len, cfg.want);
  } catch (const InsufficientMaterialError& e) {
    tr.push_back({{"stage", "build_arc_system"}, {"arcs", e.got()}, {"want", cfg.want}, {"error", e.what()}});
    throw EngineFailure(Errc::InsufficientMaterial,
                        "only " + std::to_string(e.got()) + " arcs available, wanted " + std::to_string(cfg.want), tr);
  }
  tr.push_back({{"stage", "build_arc_system"},
                {"arcs", sys->size()},
                {"arc_len", cfg.arc_len},
                {"independent", sys->independent()},
                {"simple", sys->simple()}});
  if (!sys->independent())
    return finish(Witness::inconclusive("arc closures exceed k = " + std::to_string(k) +
                                        "; choose arc_len with 2*arc_len - 1 <= k"));

  std::string why;
  if (auto w = detail::internal_edge_check(*sys, &tr, &why)) return finish(*w);

  auto simp = simplify(*sys);
  tr.push_back({{"stage", "simplify"},
                {"conflict_edges", simp.conflict_edges},
                {"colors", simp.colors},
                {"surgery_attempts", simp.surgery_attempts},
                {"kept", simp.system ? simp.system->size() : 0},
                {"surgery", simp.surgery}});
  if (simp.cycle) return finish(Witness::contradicting(*simp.cycle));

  return finish(main_induction(*simp.system, cfg.constants, &tr));
}

}  // namespace pancyc
