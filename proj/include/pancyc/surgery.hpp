#pragma once

// Cycle rerouting. Every construction that turns a handful of chords into a
// long cycle is expressed as a SurgeryPlan: cut the shorter H-path between
// each pair of segment endpoints, drop its interior vertices, splice in the
// chords, and check that what is left is one cycle.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "pancyc/error.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

struct Segment {
  Vertex from;
  Vertex to;
};

struct SurgeryPlan {
  std::vector<Segment> delete_segments;
  std::vector<Chord> add_chords;
};

enum class CycleKind { Plain, Contradicting };

struct CycleWitness {
  std::vector<Vertex> cycle;
  int length = 0;
  std::vector<Vertex> contains;  // sorted
  CycleKind kind = CycleKind::Plain;
};

/// Direction in which "before"/"after" are read on the Hamilton cycle.
enum class Orientation { Forward, Reverse };

inline int oriented_pos(const CycledGraph& g, Vertex v, Orientation dir) {
  return dir == Orientation::Forward ? g.pos(v) : (g.n() - g.pos(v)) % g.n();
}

/// Three arcs (A,B,C) in the order given by `dir`, with a1<a2 in A, b1<b2 in
/// B, c1<c2 in C and three chords in one of two patterns.
struct SemiTriangle {
  int type = 1;
  Orientation dir = Orientation::Forward;
  Vertex a1 = -1, a2 = -1, b1 = -1, b2 = -1, c1 = -1, c2 = -1;
  // Indices into the arc system the triangle was found in; -1 when built by hand.
  int arc_a = -1, arc_b = -1, arc_c = -1;
  // Number of arcs strictly between A and B, when known.
  int length = -1;

  std::array<Chord, 3> witness_edges() const {
    if (type == 1) return {Chord{a1, c1}, Chord{a2, b1}, Chord{b2, c2}};
    return {Chord{a1, b1}, Chord{a2, c1}, Chord{b2, c2}};
  }
};

// ---------------------------------------------------------------------------

/// Structural check of a cycle witness against g: distinct entries, every
/// consecutive pair an edge, and contains a subset of the entries.
inline bool is_valid_cycle(const CycledGraph& g, const CycleWitness& w) {
  const auto& c = w.cycle;
  if (c.size() < 3 || static_cast<int>(c.size()) != w.length) return false;
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : c) {
    if (v < 0 || v >= g.n() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
  return std::all_of(w.contains.begin(), w.contains.end(),
                     [&](Vertex v) { return v >= 0 && v < g.n() && seen[v]; });
}

inline CycleWitness apply_surgery(const CycledGraph& g, const SurgeryPlan& plan) {
  const int n = g.n();
  std::vector<char> deleted(n, 0), endpoint(n, 0);
  std::vector<char> cut(n, 0);  // cut[p]: H-edge between positions p and p+1 removed

  for (const auto& s : plan.delete_segments) {
    require(s.from != s.to, Errc::PreconditionViolation, "segment endpoints must differ");
    for (Vertex v : {s.from, s.to}) {
      require(v >= 0 && v < n, Errc::PreconditionViolation, "segment endpoint out of range");
      require(!endpoint[v], Errc::PreconditionViolation,
              "segment endpoint " + std::to_string(v) + " used twice in plan");
      endpoint[v] = 1;
    }
  }
  for (const auto& s : plan.delete_segments) {
    HamPath hp = cyclic_distance(g, s.from, s.to);
    for (int i = 0; i < hp.length; ++i) {
      int p = g.pos(hp.path[i]), q = g.pos(hp.path[i + 1]);
      int lo = g.forward_steps(p, q) == 1 ? p : q;
      require(!cut[lo], Errc::PreconditionViolation, "deleted segments overlap");
      cut[lo] = 1;
    }
    for (int i = 1; i < hp.length; ++i) {
      Vertex v = hp.path[i];
      require(!endpoint[v] && !deleted[v], Errc::PreconditionViolation,
              "segment interior contains plan vertex " + std::to_string(v));
      deleted[v] = 1;
    }
  }

  std::vector<char> chord_end(n, 0);
  std::vector<std::vector<Vertex>> extra(n);
  for (const auto& c : plan.add_chords) {
    require(c.u >= 0 && c.u < n && c.v >= 0 && c.v < n && c.u != c.v, Errc::PreconditionViolation,
            "bad chord endpoints");
    require(g.adjacent(c.u, c.v), Errc::ChordMissing,
            "chord {" + std::to_string(c.u) + "," + std::to_string(c.v) + "} is not an edge of G");
    for (Vertex v : {c.u, c.v}) {
      require(!chord_end[v], Errc::PreconditionViolation, "chord endpoint " + std::to_string(v) + " used twice");
      require(!deleted[v], Errc::PreconditionViolation, "chord endpoint " + std::to_string(v) + " is deleted");
      chord_end[v] = 1;
    }
    extra[c.u].push_back(c.v);
    extra[c.v].push_back(c.u);
  }

  // Surviving neighbourhoods.
  std::vector<std::array<Vertex, 2>> nb(n, {-1, -1});
  int kept = 0;
  Vertex start = -1;
  for (int p = 0; p < n; ++p) {
    Vertex v = g.at(p);
    if (deleted[v]) continue;
    ++kept;
    if (start < 0) start = v;
    std::vector<Vertex> list;
    if (!cut[p]) list.push_back(g.at(p + 1));
    if (!cut[(p - 1 + n) % n]) list.push_back(g.at(p - 1));
    list.insert(list.end(), extra[v].begin(), extra[v].end());
    std::sort(list.begin(), list.end());
    bool multi = std::adjacent_find(list.begin(), list.end()) != list.end();
    require(list.size() == 2 && !multi, Errc::NotTwoRegular,
            "vertex " + std::to_string(v) + " has degree " + std::to_string(list.size()) +
                (multi ? " (parallel edge)" : "") + " after rerouting");
    nb[v] = {list[0], list[1]};
  }

  // Walk from the lowest-position survivor, preferring its H-successor.
  CycleWitness w;
  Vertex succ = g.at(g.pos(start) + 1);
  Vertex prev = start;
  Vertex cur = (nb[start][0] == succ || nb[start][1] == succ)
                   ? succ
                   : (g.pos(nb[start][0]) < g.pos(nb[start][1]) ? nb[start][0] : nb[start][1]);
  w.cycle.push_back(start);
  while (cur != start) {
    w.cycle.push_back(cur);
    Vertex next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
  }
  w.length = static_cast<int>(w.cycle.size());
  require(w.length == kept, Errc::Disconnected,
          "rerouting produced a cycle of length " + std::to_string(w.length) + " but " + std::to_string(kept) +
              " vertices survive");
  w.contains = w.cycle;
  std::sort(w.contains.begin(), w.contains.end());
  require(is_valid_cycle(g, w), Errc::InvariantViolation, "rerouted cycle failed re-validation");
  return w;
}

/// Longer H-path between the endpoints of a non-H chord, closed by the chord.
inline CycleWitness chord_shortcut(const CycledGraph& g, Chord e) {
  require(e.u != e.v, Errc::PreconditionViolation, "chord endpoints must differ");
  require(g.adjacent(e.u, e.v), Errc::ChordMissing, "chord is not an edge of G");
  require(!g.is_ham_edge(e.u, e.v), Errc::IsHamEdge, "chord is an edge of H");
  return apply_surgery(g, SurgeryPlan{{Segment{e.u, e.v}}, {e}});
}

namespace detail {

// The shorter H-path between u and v must be the stretch running from u
// towards v in direction dir.
inline void require_short_span(const CycledGraph& g, Vertex u, Vertex v, Orientation dir, const char* what) {
  int d = oriented_pos(g, v, dir) - oriented_pos(g, u, dir);
  d = ((d % g.n()) + g.n()) % g.n();
  require(d > 0 && 2 * d < g.n(), Errc::PreconditionViolation,
          std::string(what) + " span is not the shorter H-path");
}

// Offsets of vertices from `origin` in direction dir; true iff strictly increasing.
inline bool in_cyclic_order(const CycledGraph& g, Orientation dir, std::initializer_list<Vertex> vs) {
  const Vertex origin = *vs.begin();
  int last = -1;
  for (Vertex v : vs) {
    int d = oriented_pos(g, v, dir) - oriented_pos(g, origin, dir);
    d = ((d % g.n()) + g.n()) % g.n();
    if (d <= last) return false;
    last = d;
  }
  return true;
}

}  // namespace detail

/// Crossing pair of independent edges {x1,y1},{x2,y2} between two arcs.
inline CycleWitness crossing_m2_surgery(const CycledGraph& g, Vertex x1, Vertex x2, Vertex y1, Vertex y2) {
  require(x1 != x2 && y1 != y2, Errc::PreconditionViolation, "M2 endpoints within an arc must differ");
  Chord e1{x1, y1}, e2{x2, y2};
  require(g.adjacent(x1, y1), Errc::ChordMissing, "chord {x1,y1} missing");
  require(g.adjacent(x2, y2), Errc::ChordMissing, "chord {x2,y2} missing");
  require(chords_cross(g, e1, e2), Errc::NotCrossing, "the two chords do not cross");
  return apply_surgery(g, SurgeryPlan{{{x1, x2}, {y1, y2}}, {e1, e2}});
}

struct M2Quad {
  Vertex x1, x2, y1, y2;  // chords {x1,y1} and {x2,y2}
};

/// Two non-crossing M2s where some chord of one crosses some chord of the other.
inline CycleWitness double_m2_surgery(const CycledGraph& g, M2Quad a, M2Quad b) {
  std::array<Vertex, 8> all{a.x1, a.x2, a.y1, a.y2, b.x1, b.x2, b.y1, b.y2};
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Errc::PreconditionViolation,
          "the two M2s must use eight distinct vertices");
  std::array<Chord, 4> ch{Chord{a.x1, a.y1}, Chord{a.x2, a.y2}, Chord{b.x1, b.y1}, Chord{b.x2, b.y2}};
  for (auto c : ch)
    require(g.adjacent(c.u, c.v), Errc::ChordMissing,
            "chord {" + std::to_string(c.u) + "," + std::to_string(c.v) + "} missing");
  require(!chords_cross(g, ch[0], ch[1]) && !chords_cross(g, ch[2], ch[3]), Errc::PreconditionViolation,
          "each M2 must be non-crossing");

  // Segments of the two M2s must not overlap: sharing an arc is not allowed.
  std::array<Segment, 4> segs{Segment{a.x1, a.x2}, Segment{a.y1, a.y2}, Segment{b.x1, b.x2}, Segment{b.y1, b.y2}};
  std::vector<char> used(g.n(), 0);
  for (auto s : segs) {
    for (Vertex v : cyclic_distance(g, s.from, s.to).path) {
      require(!used[v], Errc::PreconditionViolation, "the two M2s share an arc region");
      used[v] = 1;
    }
  }

  bool cross = false;
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) cross = cross || chords_cross(g, ch[i], ch[j]);
  require(cross, Errc::NoCrossBetweenPairs, "no chord of the first M2 crosses a chord of the second");
  return apply_surgery(g, SurgeryPlan{{segs.begin(), segs.end()}, {ch.begin(), ch.end()}});
}

/// True iff the six vertices sit in the required cyclic order and the three
/// pattern chords are edges of g.
inline bool is_semi_triangle(const CycledGraph& g, const SemiTriangle& t) {
  if (t.type != 1 && t.type != 2) return false;
  for (Vertex v : {t.a1, t.a2, t.b1, t.b2, t.c1, t.c2})
    if (v < 0 || v >= g.n()) return false;
  if (!detail::in_cyclic_order(g, t.dir, {t.a1, t.a2, t.b1, t.b2, t.c1, t.c2})) return false;
  for (auto c : t.witness_edges())
    if (!g.adjacent(c.u, c.v)) return false;
  return true;
}

inline void require_semi_triangle_geometry(const CycledGraph& g, const SemiTriangle& t) {
  require(t.type == 1 || t.type == 2, Errc::PreconditionViolation, "semi-triangle type must be 1 or 2");
  require(detail::in_cyclic_order(g, t.dir, {t.a1, t.a2, t.b1, t.b2, t.c1, t.c2}), Errc::PreconditionViolation,
          "semi-triangle vertices are not in cyclic order");
  detail::require_short_span(g, t.a1, t.a2, t.dir, "a1..a2");
  detail::require_short_span(g, t.b1, t.b2, t.dir, "b1..b2");
  detail::require_short_span(g, t.c1, t.c2, t.dir, "c1..c2");
}

/// A Type 2 semi-triangle closes into one long cycle.
inline CycleWitness semi_triangle_surgery(const CycledGraph& g, const SemiTriangle& t) {
  require(t.type == 2, Errc::PreconditionViolation, "semi_triangle_surgery needs a Type 2 semi-triangle");
  require_semi_triangle_geometry(g, t);
  auto ch = t.witness_edges();
  return apply_surgery(g, SurgeryPlan{{{t.a1, t.a2}, {t.b1, t.b2}, {t.c1, t.c2}}, {ch.begin(), ch.end()}});
}

/// Where the second triangle's B and C arcs lie relative to the first triangle.
enum class TriangleCase { B, C };

/// Two Type 1 semi-triangles (A,B,C) and (D,E,F), D right after A, with E and
/// F between B and C (case B) or between C and A (case C).
inline CycleWitness double_type1_surgery(const CycledGraph& g, const SemiTriangle& t1, const SemiTriangle& t2,
                                         TriangleCase which) {
  require(t1.type == 1 && t2.type == 1, Errc::PreconditionViolation, "both semi-triangles must be Type 1");
  require(t1.dir == t2.dir, Errc::PreconditionViolation, "semi-triangles must share an orientation");
  require_semi_triangle_geometry(g, t1);
  require_semi_triangle_geometry(g, t2);
  const auto dir = t1.dir;
  bool d_ok = detail::in_cyclic_order(g, dir, {t1.a1, t1.a2, t2.a1, t2.a2, t1.b1});
  bool ef_ok = which == TriangleCase::B
                   ? detail::in_cyclic_order(g, dir, {t1.a1, t1.b2, t2.b1, t2.b2, t2.c1, t2.c2, t1.c1})
                   : detail::in_cyclic_order(g, dir, {t1.a1, t1.c2, t2.b1, t2.b2, t2.c1, t2.c2});
  require(d_ok && ef_ok, Errc::IncompatibleTriangles,
          which == TriangleCase::B ? "second triangle is not in the (D, between B and C) configuration"
                                   : "second triangle is not in the (D, between C and A) configuration");
  auto c1 = t1.witness_edges();
  auto c2 = t2.witness_edges();
  SurgeryPlan plan;
  plan.delete_segments = {{t1.a1, t1.a2}, {t1.b1, t1.b2}, {t1.c1, t1.c2},
                          {t2.a1, t2.a2}, {t2.b1, t2.b2}, {t2.c1, t2.c2}};
  plan.add_chords = {c1[0], c1[1], c1[2], c2[0], c2[1], c2[2]};
  return apply_surgery(g, plan);
}

/// Length in [n-k, n-1] and every problematic vertex on the cycle.
inline bool validate_contradicting(const CycledGraph& g, const ProblemProfile& prof, const CycleWitness& w) {
  if (!is_valid_cycle(g, w)) return false;
  if (w.length < g.n() - prof.k || w.length > g.n() - 1) return false;
  std::vector<char> on(g.n(), 0);
  for (Vertex v : w.cycle) on[v] = 1;
  return std::all_of(prof.problematic.begin(), prof.problematic.end(), [&](Vertex v) { return on[v] != 0; });
}

}  // namespace pancyc
