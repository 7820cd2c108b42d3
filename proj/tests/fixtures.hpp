#pragma once

// Hand-placed geometries for each surgery case. Every fixture is a cycle
// 0..n-1 plus the listed chords.

#include <algorithm>
#include <random>
#include <vector>

#include "pancyc/generators.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/surgery.hpp"

namespace fx {

using namespace pancyc;

inline CycledGraph ring(int n, const std::vector<Edge>& chords) {
  std::vector<Edge> e = chords;
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) {
    e.emplace_back(v, (v + 1) % n);
    order[v] = v;
  }
  return CycledGraph(n, e, order);
}

/// Crossing M2: chords {0,6},{2,8} on C12.
inline CycledGraph crossing12() { return ring(12, {{0, 6}, {2, 8}}); }

/// Two parallel M2s on C36: {0,20},{2,18} between arcs at 0 and 18, and
/// {9,29},{11,27} between arcs at 9 and 27; {0,20} crosses {9,29}.
inline CycledGraph double_m2_36() { return ring(36, {{0, 20}, {2, 18}, {9, 29}, {11, 27}}); }
inline M2Quad double_m2_first() { return {0, 2, 20, 18}; }
inline M2Quad double_m2_second() { return {9, 11, 29, 27}; }

/// Type 2 semi-triangle on 18 vertices: A={0,2}, B={6,8}, C={12,14}.
inline CycledGraph type2_18() { return ring(18, {{0, 6}, {2, 12}, {8, 14}}); }
inline SemiTriangle type2_triangle() {
  SemiTriangle t;
  t.type = 2;
  t.a1 = 0, t.a2 = 2, t.b1 = 6, t.b2 = 8, t.c1 = 12, t.c2 = 14;
  return t;
}

inline SemiTriangle tri1(Vertex a1, Vertex a2, Vertex b1, Vertex b2, Vertex c1, Vertex c2) {
  SemiTriangle t;
  t.type = 1;
  t.a1 = a1, t.a2 = a2, t.b1 = b1, t.b2 = b2, t.c1 = c1, t.c2 = c2;
  return t;
}

/// Two Type 1 triangles on 36 vertices, second one between B and C.
/// A={0,2} D={6,8} B={12,14} E={18,20} F={24,26} C={30,32}.
inline SemiTriangle case_b_t1() { return tri1(0, 2, 12, 14, 30, 32); }
inline SemiTriangle case_b_t2() { return tri1(6, 8, 18, 20, 24, 26); }
inline CycledGraph case_b_36() {
  std::vector<Edge> e;
  for (auto t : {case_b_t1(), case_b_t2()})
    for (auto c : t.witness_edges()) e.emplace_back(c.u, c.v);
  return ring(36, e);
}

/// Second triangle between C and A.
/// A={0,2} D={6,8} B={12,14} C={18,20} E={24,26} F={30,32}.
inline SemiTriangle case_c_t1() { return tri1(0, 2, 12, 14, 18, 20); }
inline SemiTriangle case_c_t2() { return tri1(6, 8, 24, 26, 30, 32); }
inline CycledGraph case_c_36() {
  std::vector<Edge> e;
  for (auto t : {case_c_t1(), case_c_t2()})
    for (auto c : t.witness_edges()) e.emplace_back(c.u, c.v);
  return ring(36, e);
}

/// Reflection v -> (n - v) % n of a forward triangle, read in reverse.
inline SemiTriangle mirrored(SemiTriangle t, int n) {
  auto m = [n](Vertex v) { return (n - v) % n; };
  t.a1 = m(t.a1), t.a2 = m(t.a2), t.b1 = m(t.b1), t.b2 = m(t.b2), t.c1 = m(t.c1), t.c2 = m(t.c2);
  t.dir = Orientation::Reverse;
  return t;
}
inline CycledGraph mirrored_ring(const CycledGraph& g) {
  std::vector<Edge> e;
  const int n = g.n();
  for (auto [u, v] : g.edges()) e.emplace_back((n - u) % n, (n - v) % n);
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  return CycledGraph(n, e, order);
}

// ---------------------------------------------------------------------------
// Planted arc systems for the semi-triangle search. Four arcs of size 4 on
// a hub-padded region of 32 vertices, k = 7:
//   C = {0,2,4,6}  B = {8,10,12,14}  D = {16,...,22}  A = {24,26,28,30}
// Read in reverse, A comes first, then D, B, C. Main parts are the two
// higher positions of each arc.

inline PlantSpec semi_spec(std::vector<Edge> chords) {
  PlantSpec s;
  s.region = 32;
  s.k = 7;
  s.arcs = {{0, 2, 4, 6}, {8, 10, 12, 14}, {16, 18, 20, 22}, {24, 26, 28, 30}};
  s.chords = std::move(chords);
  return s;
}

/// a2=28 sees M(B) at 14, a1=30 sees M(C) at 6, leftovers joined by {10,2}.
inline PlantedFixture planted_type1() { return plant_m2_fixture(semi_spec({{28, 14}, {30, 6}, {10, 2}})); }
/// a1=30 sees M(B) at 14, a2=28 sees M(C) at 6, leftovers joined by {10,2}.
inline PlantedFixture planted_type2() { return plant_m2_fixture(semi_spec({{30, 14}, {28, 6}, {10, 2}})); }
/// As Type 1 but without the leftover edge.
inline PlantedFixture planted_no_cross() { return plant_m2_fixture(semi_spec({{28, 14}, {30, 6}})); }

// ---------------------------------------------------------------------------
// Random surgery plans: 1..4 disjoint short segments on C_n, their endpoints
// paired up at random by chords that are added to the graph. Most pairings
// disconnect; some close into one cycle.

struct RandomPlan {
  CycledGraph graph;
  SurgeryPlan plan;
};

inline RandomPlan random_plan(std::mt19937_64& rng, bool allow_missing = false) {
  const int n = 10 + static_cast<int>(rng() % 30);
  const int segs = 1 + static_cast<int>(rng() % 4);
  std::vector<char> used(n, 0);
  SurgeryPlan plan;
  std::vector<Vertex> ends;
  for (int tries = 0; tries < 50 && static_cast<int>(plan.delete_segments.size()) < segs; ++tries) {
    int a = static_cast<int>(rng() % n);
    int len = 1 + static_cast<int>(rng() % std::max(1, n / 4));
    bool ok = true;
    for (int i = -1; i <= len + 1 && ok; ++i) ok = !used[((a + i) % n + n) % n];
    if (!ok) continue;
    for (int i = 0; i <= len; ++i) used[(a + i) % n] = 1;
    plan.delete_segments.push_back({a, (a + len) % n});
    ends.push_back(a);
    ends.push_back((a + len) % n);
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<Edge> chords;
  for (std::size_t i = 0; i + 1 < ends.size(); i += 2) {
    plan.add_chords.push_back({ends[i], ends[i + 1]});
    if (!allow_missing || rng() % 8) chords.emplace_back(ends[i], ends[i + 1]);
  }
  for (int i = 0; i < n / 3; ++i) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u != v) chords.emplace_back(u, v);
  }
  return {ring(n, chords), plan};
}

}  // namespace fx
