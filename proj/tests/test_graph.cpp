#include <gtest/gtest.h>

#include <random>

#include "pancyc/generators.hpp"
#include "pancyc/graph.hpp"

using namespace pancyc;

namespace {

CycledGraph cycle(int n, std::vector<Edge> extra = {}) {
  std::vector<Edge> e = std::move(extra);
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) {
    e.emplace_back(v, (v + 1) % n);
    order[v] = v;
  }
  return CycledGraph(n, e, order);
}

CycledGraph complete(int n) {
  std::vector<Edge> e;
  std::vector<Vertex> order(n);
  for (int u = 0; u < n; ++u) {
    order[u] = u;
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return CycledGraph(n, e, order);
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::InvariantViolation;
}

}  // namespace

TEST(LoadGraph, FiveCycle) {
  auto g = parse_graph("5 5\nH: 0 1 2 3 4\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.num_edges(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(g.pos(v), v);
}

TEST(LoadGraph, TriangleAnyRotation) {
  auto g = parse_graph("3 3\nH: 0 2 1\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(g.ham_order(), (std::vector<Vertex>{0, 2, 1}));
  EXPECT_EQ(g.pos(2), 1);
}

TEST(LoadGraph, MissingHamEdge) {
  EXPECT_EQ(code_of([] { parse_graph("4 3\nH: 0 1 2 3\n0 1\n1 2\n2 3\n"); }), Errc::HamEdgeMissing);
  EXPECT_EQ(code_of([] { parse_graph("4 4\nH: 0 2 1 3\n0 1\n1 2\n2 3\n3 0\n"); }), Errc::HamEdgeMissing);
}

TEST(LoadGraph, NotAPermutation) {
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1 1\n0 1\n1 2\n0 2\n"); }), Errc::NotAPermutation);
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1\n0 1\n1 2\n0 2\n"); }), Errc::NotAPermutation);
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1 7\n0 1\n1 2\n0 2\n"); }), Errc::NotAPermutation);
}

TEST(LoadGraph, Malformed) {
  EXPECT_EQ(code_of([] { parse_graph(""); }), Errc::MalformedFile);
  EXPECT_EQ(code_of([] { parse_graph("3\nH: 0 1 2\n"); }), Errc::MalformedFile);
  EXPECT_EQ(code_of([] { parse_graph("3 3\n0 1 2\n0 1\n1 2\n0 2\n"); }), Errc::MalformedFile);
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1 2\n0 1\n1 2\n"); }), Errc::MalformedFile);
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1 2\n0 1\n1 2\n0 0\n"); }), Errc::MalformedFile);
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1 2\n0 1\n1 2\n0 2\n1 2\n"); }), Errc::MalformedFile);
  EXPECT_EQ(code_of([] { parse_graph("3 3\nH: 0 1 2\n0 1\n1 x\n0 2\n"); }), Errc::MalformedFile);
}

TEST(LoadGraph, DuplicateEdgesCollapse) {
  auto g = parse_graph("3 4\nH: 0 1 2\n0 1\n1 0\n1 2\n2 0\n");
  EXPECT_EQ(g.num_edges(), 3);
}

TEST(LoadGraph, RoundTrip) {
  auto g = random_bounded_alpha(3, 17, 9, 0.2);
  auto text = write_graph(g);
  auto h = parse_graph(text);
  EXPECT_EQ(write_graph(h), text);
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(CyclicDistance, Examples) {
  auto g = cycle(12);
  auto a = cyclic_distance(g, 0, 2);
  EXPECT_EQ(a.length, 2);
  EXPECT_EQ(a.path, (std::vector<Vertex>{0, 1, 2}));
  auto b = cyclic_distance(g, 0, 9);
  EXPECT_EQ(b.length, 3);
  EXPECT_EQ(b.path, (std::vector<Vertex>{0, 11, 10, 9}));
  auto c = cyclic_distance(cycle(6), 0, 3);
  EXPECT_EQ(c.length, 3);
  EXPECT_EQ(c.path, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(code_of([&] { cyclic_distance(g, 4, 4); }), Errc::SameVertex);
}

TEST(CyclicDistance, PathLengthsSumToN) {
  for (int n : {5, 6, 11, 12}) {
    auto g = cycle(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        auto d = cyclic_distance(g, u, v);
        EXPECT_LE(2 * d.length, n);
        int fwd = ((v - u) % n + n) % n;
        EXPECT_TRUE(d.length == fwd || d.length == n - fwd);
        EXPECT_EQ(d.path.front(), u);
        EXPECT_EQ(d.path.back(), v);
        for (std::size_t i = 0; i + 1 < d.path.size(); ++i) EXPECT_TRUE(g.is_ham_edge(d.path[i], d.path[i + 1]));
      }
  }
}

TEST(ChordsCross, Examples) {
  auto g = cycle(12);
  EXPECT_TRUE(chords_cross(g, {0, 6}, {2, 8}));
  EXPECT_FALSE(chords_cross(g, {0, 2}, {6, 8}));
  EXPECT_FALSE(chords_cross(g, {0, 8}, {2, 6}));
  EXPECT_EQ(code_of([&] { chords_cross(g, {0, 6}, {6, 8}); }), Errc::SharedEndpoint);
}

TEST(ChordsCross, SymmetricAndRigidMotionInvariant) {
  const int n = 12;
  auto base = cycle(n);
  std::mt19937 rng(5);
  for (int it = 0; it < 2000; ++it) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    Chord c1{p[0], p[1]}, c2{p[2], p[3]};
    bool x = chords_cross(base, c1, c2);
    EXPECT_EQ(x, chords_cross(base, c2, c1));
    EXPECT_EQ(x, chords_cross(base, {c1.v, c1.u}, c2));
    // Interleaving oracle on raw positions.
    auto in = [](int a, int b, int q) { return (a < q && q < b) || (b < q && q < a); };
    EXPECT_EQ(x, in(c1.u, c1.v, c2.u) != in(c1.u, c1.v, c2.v));
    int r = static_cast<int>(rng() % n);
    auto rot = [&](Chord c) { return Chord{(c.u + r) % n, (c.v + r) % n}; };
    auto ref = [&](Chord c) { return Chord{(n - c.u) % n, (n - c.v) % n}; };
    EXPECT_EQ(x, chords_cross(base, rot(c1), rot(c2)));
    EXPECT_EQ(x, chords_cross(base, ref(c1), ref(c2)));
  }
}

TEST(ChordsCross, UsesPositionsNotIds) {
  // H visits 0 3 1 4 2 5: ids {0,1} and {3,4} sit at positions {0,2} and {1,3}.
  std::vector<Edge> e{{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}, {0, 1}, {3, 4}};
  CycledGraph g(6, e, {0, 3, 1, 4, 2, 5});
  EXPECT_TRUE(chords_cross(g, {0, 1}, {3, 4}));
  EXPECT_FALSE(chords_cross(g, {0, 1}, {2, 5}));
}

TEST(MarkProblematic, Examples) {
  auto c12 = cycle(12);
  auto p = mark_problematic(c12, {}, 1);
  EXPECT_EQ(p.size(), 12);

  auto k6 = complete(6);
  auto q = mark_problematic(k6, {0}, 2);
  EXPECT_EQ(q.problematic, (std::vector<Vertex>{0}));

  // Degree-scan oracle on the clique ring.
  auto e6 = erdos_construction(6);
  auto r = mark_problematic(e6, {}, 6);
  std::vector<Vertex> expect;
  for (int v = 0; v < e6.n(); ++v)
    if (e6.degree(v) <= 12) expect.push_back(v);
  EXPECT_EQ(r.problematic, expect);
  EXPECT_EQ(r.size(), 24);
  EXPECT_EQ(r.sanity_bound(), 22 * 36);
}

TEST(MarkProblematic, MonotoneInW) {
  auto g = random_bounded_alpha(3, 20, 4, 0.3);
  std::mt19937 rng(1);
  for (int it = 0; it < 200; ++it) {
    int k = 1 + static_cast<int>(rng() % 5);
    std::vector<Vertex> W;
    for (int v = 0; v < g.n(); ++v)
      if (rng() % 4 == 0) W.push_back(v);
    auto a = mark_problematic(g, W, k);
    W.push_back(static_cast<Vertex>(rng() % g.n()));
    auto b = mark_problematic(g, W, k);
    EXPECT_TRUE(std::includes(b.problematic.begin(), b.problematic.end(), a.problematic.begin(),
                              a.problematic.end()));
    auto c = mark_problematic(g, W, k + 1);
    EXPECT_TRUE(std::includes(c.problematic.begin(), c.problematic.end(), b.problematic.begin(),
                              b.problematic.end()));
  }
}

TEST(MarkProblematic, ThresholdIsExactlyTwoK) {
  auto k5 = complete(5);  // every degree is 4
  EXPECT_EQ(mark_problematic(k5, {}, 2).size(), 5);
  EXPECT_EQ(mark_problematic(k5, {}, 1).size(), 0);
  EXPECT_EQ(code_of([&] { mark_problematic(k5, {}, 0); }), Errc::PreconditionViolation);
}
