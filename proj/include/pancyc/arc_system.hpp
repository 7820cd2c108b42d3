#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pancyc/error.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/surgery.hpp"

namespace pancyc {

using ProfilePtr = std::shared_ptr<const ProblemProfile>;

/// Pairwise non-consecutive vertices together with their continuous closure.
/// Vertices are stored in closure order, i.e. increasing forward distance from
/// the first position of the closure.
class Arc {
 public:
  Arc(const CycledGraph& g, std::vector<Vertex> vs) {
    require(!vs.empty(), Errc::SpecConflict, "an arc needs at least one vertex");
    std::vector<int> ps;
    for (Vertex v : vs) {
      require(v >= 0 && v < g.n(), Errc::SpecConflict, "arc vertex out of range");
      ps.push_back(g.pos(v));
    }
    std::sort(ps.begin(), ps.end());
    require(std::adjacent_find(ps.begin(), ps.end()) == ps.end(), Errc::SpecConflict, "repeated arc vertex");
    const int m = static_cast<int>(ps.size());

    // The closure is the complement of the widest gap; ties go to the lowest start.
    int best = -1, best_gap = -1;
    for (int i = 0; i < m; ++i) {
      int nxt = (i + 1) % m;
      int gap = m == 1 ? g.n() : g.forward_steps(ps[i], ps[nxt]);
      if (gap > best_gap || (gap == best_gap && ps[nxt] < ps[best])) {
        best_gap = gap;
        best = nxt;
      }
    }
    start_ = ps[best];
    for (int i = 0; i < m; ++i) verts_.push_back(g.at(ps[(best + i) % m]));
    span_ = g.forward_steps(start_, g.pos(verts_.back())) + 1;
    for (int i = 0; i + 1 < m; ++i)
      require(g.forward_steps(g.pos(verts_[i]), g.pos(verts_[i + 1])) > 1, Errc::SpecConflict,
              "arc vertices " + std::to_string(verts_[i]) + " and " + std::to_string(verts_[i + 1]) +
                  " are consecutive on H");
    require(m == 1 || g.forward_steps(g.pos(verts_.back()), start_) > 1, Errc::SpecConflict,
            "arc wraps onto consecutive vertices");
  }

  const std::vector<Vertex>& vertices() const noexcept { return verts_; }
  int size() const noexcept { return static_cast<int>(verts_.size()); }
  int start_pos() const noexcept { return start_; }
  /// Number of vertices in the continuous closure.
  int span() const noexcept { return span_; }
  bool closure_contains(const CycledGraph& g, int p) const { return g.forward_steps(start_, p) < span_; }
  /// Position of v inside the arc (0 = first in closure order), or -1.
  int rank_of(Vertex v) const {
    auto it = std::find(verts_.begin(), verts_.end(), v);
    return it == verts_.end() ? -1 : static_cast<int>(it - verts_.begin());
  }

 private:
  std::vector<Vertex> verts_;
  int start_ = 0;
  int span_ = 0;
};

struct M2Result {
  bool m2_free = true;
  std::optional<Vertex> cover;  // set iff m2_free and there is at least one edge
  Edge e1{-1, -1}, e2{-1, -1};  // two independent edges (first endpoint in A) when !m2_free
};

inline std::vector<Edge> edges_between(const CycledGraph& g, const Arc& a, const Arc& b) {
  std::vector<Edge> out;
  for (Vertex u : a.vertices())
    for (Vertex v : b.vertices())
      if (g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

/// Either two independent A-B edges, or a vertex covering all A-B edges.
inline M2Result detect_m2(const CycledGraph& g, const Arc& a, const Arc& b) {
  auto es = edges_between(g, a, b);
  M2Result r;
  if (es.empty()) return r;
  auto [a0, b0] = es.front();
  bool all_a0 = std::all_of(es.begin(), es.end(), [&](const Edge& e) { return e.first == a0; });
  if (all_a0) {
    r.cover = a0;
    return r;
  }
  bool all_b0 = std::all_of(es.begin(), es.end(), [&](const Edge& e) { return e.second == b0; });
  if (all_b0) {
    r.cover = b0;
    return r;
  }
  r.m2_free = false;
  for (const auto& e : es) {
    if (e.first != a0 && e.second != b0) {
      r.e1 = es.front();
      r.e2 = e;
      return r;
    }
  }
  // Every edge meets {a0,b0}; one edge avoids a0 and another avoids b0.
  for (const auto& e : es)
    if (e.first != a0) r.e1 = e;
  for (const auto& e : es)
    if (e.second != b0) r.e2 = e;
  return r;
}

class ArcSystem {
 public:
  ArcSystem(GraphPtr g, ProfilePtr prof, std::vector<Arc> arcs)
      : g_(std::move(g)), prof_(std::move(prof)), arcs_(std::move(arcs)) {
    const auto& G = *g_;
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) { return x.start_pos() < y.start_pos(); });
    owner_.assign(G.n(), -1);
    std::vector<char> covered(G.n(), 0);
    independent_ = true;
    for (int i = 0; i < size(); ++i) {
      const Arc& a = arcs_[i];
      for (int s = 0; s < a.span(); ++s) {
        Vertex v = G.at(static_cast<long>(a.start_pos()) + s);
        require(!covered[v], Errc::InvariantViolation, "arc closures overlap at vertex " + std::to_string(v));
        require(!prof_->is_problematic(v), Errc::InvariantViolation,
                "arc closure contains problematic vertex " + std::to_string(v));
        covered[v] = 1;
      }
      for (Vertex v : a.vertices()) owner_[v] = i;
      if (a.span() > prof_->k) independent_ = false;
    }
    simple_ = independent_;
    for (int i = 0; simple_ && i < size(); ++i)
      for (int j = i + 1; simple_ && j < size(); ++j)
        if (!detect_m2(G, arcs_[i], arcs_[j]).m2_free) simple_ = false;
  }

  const CycledGraph& graph() const { return *g_; }
  const GraphPtr& graph_ptr() const { return g_; }
  const ProblemProfile& profile() const { return *prof_; }
  const ProfilePtr& profile_ptr() const { return prof_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int i) const { return arcs_[i]; }
  int size() const { return static_cast<int>(arcs_.size()); }
  int length() const {
    int m = 0;
    for (const auto& a : arcs_) m = (m == 0 ? a.size() : std::min(m, a.size()));
    return m;
  }
  int total_vertices() const {
    int s = 0;
    for (const auto& a : arcs_) s += a.size();
    return s;
  }
  bool independent() const { return independent_; }
  bool simple() const { return simple_; }
  /// Index of the arc containing v, or -1.
  int owner(Vertex v) const { return owner_[v]; }

  ArcSystem subsystem(const std::vector<int>& indices) const {
    std::vector<Arc> out;
    for (int i : indices) out.push_back(arcs_[i]);
    return ArcSystem(g_, prof_, std::move(out));
  }
  ArcSystem with_arcs(std::vector<Arc> arcs) const { return ArcSystem(g_, prof_, std::move(arcs)); }

 private:
  GraphPtr g_;
  ProfilePtr prof_;
  std::vector<Arc> arcs_;
  std::vector<int> owner_;
  bool independent_ = false;
  bool simple_ = false;
};

/// Raised when the graph does not hold enough material for the requested
/// number of arcs; carries whatever was built.
class InsufficientMaterialError : public Error {
 public:
  InsufficientMaterialError(int got, std::optional<ArcSystem> partial)
      : Error(Errc::InsufficientMaterial, "only " + std::to_string(got) + " arcs available"),
        got_(got),
        partial_(std::move(partial)) {}
  int got() const { return got_; }
  const std::optional<ArcSystem>& partial() const { return partial_; }

 private:
  int got_;
  std::optional<ArcSystem> partial_;
};

/// Chops the problematic-free stretches of H into blocks of 2*arc_len
/// vertices and takes every second vertex of each block as an arc.
inline ArcSystem build_arc_system(GraphPtr g, ProfilePtr prof, int arc_len, int want) {
  require(arc_len >= 1, Errc::PreconditionViolation, "arc_len must be at least 1");
  const auto& G = *g;
  const int n = G.n();
  int first_bad = -1;
  for (int p = 0; p < n && first_bad < 0; ++p)
    if (prof->is_problematic(G.at(p))) first_bad = p;

  std::vector<Arc> arcs;
  std::vector<Vertex> run;
  auto flush = [&] {
    std::size_t i = 0;
    while (static_cast<int>(arcs.size()) < want && run.size() - i >= static_cast<std::size_t>(2 * arc_len)) {
      std::vector<Vertex> vs;
      for (int j = 0; j < arc_len; ++j) vs.push_back(run[i + 2 * j]);
      arcs.emplace_back(G, std::move(vs));
      i += 2 * arc_len;
    }
    run.clear();
  };
  const int origin = first_bad < 0 ? 0 : first_bad + 1;
  for (int s = 0; s < n; ++s) {
    Vertex v = G.at(static_cast<long>(origin) + s);
    if (prof->is_problematic(v))
      flush();
    else
      run.push_back(v);
  }
  flush();

  const int got = static_cast<int>(arcs.size());
  ArcSystem sys(std::move(g), std::move(prof), std::move(arcs));
  if (got < want) throw InsufficientMaterialError(got, std::move(sys));
  return sys;
}

struct ArcParams {
  int arc_len;
  int want;
};

/// Arc length 2*c2*k^(1/5)/2 = c2*k^(1/5) and c1*k^2 arcs, rounded up.
inline ArcParams paper_arc_params(int k, double c1, double c2) {
  return {static_cast<int>(std::ceil(c2 * std::pow(static_cast<double>(k), 0.2))),
          static_cast<int>(std::ceil(c1 * static_cast<double>(k) * k))};
}

struct ArcGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, lexicographic
  std::vector<std::vector<int>> adj;
  int m() const { return static_cast<int>(edges.size()); }
};

inline ArcGraph build_arc_graph(const ArcSystem& sys) {
  ArcGraph ag;
  ag.nodes = sys.size();
  ag.adj.assign(ag.nodes, {});
  const auto& g = sys.graph();
  std::vector<std::vector<char>> seen(ag.nodes, std::vector<char>(ag.nodes, 0));
  for (int i = 0; i < ag.nodes; ++i)
    for (Vertex u : sys.arc(i).vertices())
      for (Vertex w : g.neighbors(u)) {
        int j = sys.owner(w);
        if (j > i && !seen[i][j]) {
          seen[i][j] = 1;
          ag.edges.emplace_back(i, j);
        }
      }
  std::sort(ag.edges.begin(), ag.edges.end());
  for (auto [i, j] : ag.edges) {
    ag.adj[i].push_back(j);
    ag.adj[j].push_back(i);
  }
  return ag;
}

// ---------------------------------------------------------------------------

struct SimplifyOutcome {
  std::optional<CycleWitness> cycle;  // set when a contradicting cycle was found
  std::string surgery;                // "crossing_m2" | "double_m2" when cycle is set
  std::optional<ArcSystem> system;    // set otherwise: the majority colour class
  int conflict_edges = 0;
  int colors = 0;
  int surgery_attempts = 0;
};

namespace detail {

struct PairM2s {
  int i, j;
  std::vector<M2Quad> parallel;  // non-crossing M2s (x in arc i, y in arc j)
};

inline constexpr std::size_t kMaxParallelM2PerPair = 16;

}  // namespace detail

/// Removes M2s between arcs. A crossing M2, or two non-crossing M2s crossing
/// each other, is turned into a cycle and returned when it is contradicting;
/// otherwise the M2-conflict graph is coloured greedily along a degeneracy
/// order and the largest colour class is kept.
inline SimplifyOutcome simplify(const ArcSystem& sys) {
  require(sys.independent(), Errc::NotIndependent, "simplify needs an independent arc system");
  const auto& g = sys.graph();
  const auto& prof = sys.profile();
  const int b = sys.size();
  SimplifyOutcome out;

  std::vector<detail::PairM2s> conflicts;
  std::vector<std::vector<int>> cadj(b);
  for (int i = 0; i < b; ++i) {
    for (int j = i + 1; j < b; ++j) {
      auto es = edges_between(g, sys.arc(i), sys.arc(j));
      if (detect_m2(g, sys.arc(i), sys.arc(j)).m2_free) continue;
      detail::PairM2s pm{i, j, {}};
      for (std::size_t s = 0; s < es.size(); ++s) {
        for (std::size_t t = s + 1; t < es.size(); ++t) {
          auto [x1, y1] = es[s];
          auto [x2, y2] = es[t];
          if (x1 == x2 || y1 == y2) continue;
          if (chords_cross(g, {x1, y1}, {x2, y2})) {
            ++out.surgery_attempts;
            try {
              auto w = crossing_m2_surgery(g, x1, x2, y1, y2);
              if (validate_contradicting(g, prof, w)) {
                w.kind = CycleKind::Contradicting;
                out.cycle = std::move(w);
                out.surgery = "crossing_m2";
                return out;
              }
            } catch (const Error&) {
            }
          } else if (pm.parallel.size() < detail::kMaxParallelM2PerPair) {
            pm.parallel.push_back({x1, x2, y1, y2});
          }
        }
      }
      cadj[i].push_back(j);
      cadj[j].push_back(i);
      conflicts.push_back(std::move(pm));
    }
  }
  out.conflict_edges = static_cast<int>(conflicts.size());

  for (std::size_t p = 0; p < conflicts.size(); ++p) {
    for (std::size_t q = p + 1; q < conflicts.size(); ++q) {
      const auto& P = conflicts[p];
      const auto& Q = conflicts[q];
      if (P.i == Q.i || P.i == Q.j || P.j == Q.i || P.j == Q.j) continue;
      for (const auto& m1 : P.parallel) {
        for (const auto& m2 : Q.parallel) {
          Chord a[2] = {{m1.x1, m1.y1}, {m1.x2, m1.y2}};
          Chord c[2] = {{m2.x1, m2.y1}, {m2.x2, m2.y2}};
          bool cross = false;
          for (auto e : a)
            for (auto f : c) cross = cross || chords_cross(g, e, f);
          if (!cross) continue;
          ++out.surgery_attempts;
          try {
            auto w = double_m2_surgery(g, m1, m2);
            if (validate_contradicting(g, prof, w)) {
              w.kind = CycleKind::Contradicting;
              out.cycle = std::move(w);
              out.surgery = "double_m2";
              return out;
            }
          } catch (const Error&) {
          }
        }
      }
    }
  }

  // Degeneracy order: repeatedly strip a minimum-degree node.
  std::vector<int> deg(b), order;
  std::vector<char> gone(b, 0);
  for (int i = 0; i < b; ++i) deg[i] = static_cast<int>(cadj[i].size());
  for (int step = 0; step < b; ++step) {
    int best = -1;
    for (int i = 0; i < b; ++i)
      if (!gone[i] && (best < 0 || deg[i] < deg[best])) best = i;
    gone[best] = 1;
    order.push_back(best);
    for (int j : cadj[best])
      if (!gone[j]) --deg[j];
  }
  std::vector<int> color(b, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<char> used(b + 1, 0);
    for (int j : cadj[*it])
      if (color[j] >= 0) used[color[j]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[*it] = c;
  }
  out.colors = b == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<int> count(std::max(out.colors, 1), 0);
  for (int c : color) ++count[c];
  int major = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> keep;
  for (int i = 0; i < b; ++i)
    if (color[i] == major) keep.push_back(i);
  out.system = sys.subsystem(keep);
  require(out.system->simple(), Errc::InvariantViolation, "majority colour class is not simple");
  return out;
}

}  // namespace pancyc
