#pragma once

// Arc-neighbourhoods and Hall-type expansion. Every expansion question is a
// max-flow on source -> arc vertices (capacity t) -> neighbouring arcs
// (capacity 1) -> sink.

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pancyc/arc_system.hpp"
#include "pancyc/error.hpp"
#include "pancyc/flow.hpp"

namespace pancyc {

/// Per-vertex expansion demand.
struct Threshold {
  long long t = 1;
};

/// Vertex -> disjoint set of neighbouring arc indices.
using Assignment = std::vector<std::pair<Vertex, std::vector<int>>>;

/// Arc index holding every vertex of X; -1 for an empty X.
inline int common_arc(const ArcSystem& sys, const std::vector<Vertex>& X) {
  int arc = -1;
  for (Vertex v : X) {
    require(v >= 0 && v < sys.graph().n(), Errc::NotWithinOneArc, "vertex out of range");
    int o = sys.owner(v);
    require(o >= 0, Errc::NotWithinOneArc, "vertex " + std::to_string(v) + " is not on any arc");
    require(arc < 0 || o == arc, Errc::NotWithinOneArc, "set spans more than one arc");
    arc = o;
  }
  return arc;
}

/// Arcs of v's system, other than v's own, holding a neighbour of v.
inline std::vector<int> vertex_arc_neighbors(const ArcSystem& sys, Vertex v) {
  std::vector<int> out;
  int own = sys.owner(v);
  for (Vertex w : sys.graph().neighbors(v)) {
    int o = sys.owner(w);
    if (o >= 0 && o != own) out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<int> arc_neighborhood(const ArcSystem& sys, const std::vector<Vertex>& X) {
  common_arc(sys, X);
  std::vector<int> out;
  for (Vertex v : X) {
    auto nv = vertex_arc_neighbors(sys, v);
    out.insert(out.end(), nv.begin(), nv.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int arc_degree(const ArcSystem& sys, const std::vector<Vertex>& X) {
  return static_cast<int>(arc_neighborhood(sys, X).size());
}

/// d(A) + d(B) >= d(A u B) + d(A n B).
inline bool check_submodular(const ArcSystem& sys, std::vector<Vertex> A, std::vector<Vertex> B) {
  int ia = common_arc(sys, A), ib = common_arc(sys, B);
  require(ia < 0 || ib < 0 || ia == ib, Errc::NotWithinOneArc, "A and B lie on different arcs");
  std::sort(A.begin(), A.end());
  std::sort(B.begin(), B.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  std::vector<Vertex> U, I;
  std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(U));
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(I));
  return arc_degree(sys, A) + arc_degree(sys, B) >= arc_degree(sys, U) + arc_degree(sys, I);
}

namespace detail {

/// The t-demand network for a set of vertices.
struct HallNetwork {
  MaxFlow flow{2};
  int source = 0, sink = 1;
  std::vector<Vertex> verts;
  std::vector<int> vnode, src_edge;
  std::vector<std::vector<std::pair<int, int>>> arc_edges;  // per vertex: (edge id, arc index)
  std::vector<int> arc_node;                                 // by arc index, -1 if absent
  long long t = 1;

  HallNetwork(const ArcSystem& sys, long long demand) : arc_node(sys.size(), -1), t(demand) {}

  int add_vertex(const ArcSystem& sys, Vertex v) {
    int idx = static_cast<int>(verts.size());
    verts.push_back(v);
    int node = flow.add_node();
    vnode.push_back(node);
    src_edge.push_back(flow.add_edge(source, node, static_cast<int>(std::min<long long>(t, 1 << 30))));
    arc_edges.emplace_back();
    for (int a : vertex_arc_neighbors(sys, v)) {
      if (arc_node[a] < 0) {
        arc_node[a] = flow.add_node();
        flow.add_edge(arc_node[a], sink, 1);
      }
      arc_edges.back().emplace_back(flow.add_edge(node, arc_node[a], 1), a);
    }
    return idx;
  }

  long long augment() { return flow.run(source, sink); }
  bool saturated(int idx) const { return flow.flow(src_edge[idx]) >= t; }

  std::vector<int> assigned_arcs(int idx) const {
    std::vector<int> out;
    for (auto [e, a] : arc_edges[idx])
      if (flow.flow(e) > 0) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace detail

/// X is expanding iff every vertex of X can be given t private neighbouring arcs.
inline bool is_expanding(const ArcSystem& sys, const std::vector<Vertex>& X, Threshold t) {
  common_arc(sys, X);
  detail::HallNetwork net(sys, t.t);
  for (Vertex v : X) net.add_vertex(sys, v);
  return net.augment() == t.t * static_cast<long long>(X.size());
}

/// Arcs above this size fall back to a greedy inclusion-maximal expanding set.
inline constexpr int kExactExpandingCap = 24;

/// A maximum-cardinality expanding subset of the arc; among those, the one
/// taking the earliest vertices in closure order. For arcs larger than
/// kExactExpandingCap the result is inclusion-maximal only.
inline std::vector<Vertex> maximal_expanding_subset(const ArcSystem& sys, int arc_index, Threshold t) {
  const auto& verts = sys.arc(arc_index).vertices();
  const int m = static_cast<int>(verts.size());
  std::vector<char> usable(m);
  for (int i = 0; i < m; ++i)
    usable[i] = static_cast<long long>(vertex_arc_neighbors(sys, verts[i]).size()) >= t.t;

  std::vector<Vertex> best, cur;
  if (m > kExactExpandingCap) {
    for (int i = 0; i < m; ++i) {
      if (!usable[i]) continue;
      cur.push_back(verts[i]);
      if (!is_expanding(sys, cur, t)) cur.pop_back();
    }
    return cur;
  }

  std::vector<int> remaining(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) remaining[i] = remaining[i + 1] + (usable[i] ? 1 : 0);
  bool found_any = false;
  auto search = [&](auto&& self, int i) -> void {
    if (found_any && static_cast<int>(cur.size()) + remaining[i] <= static_cast<int>(best.size())) return;
    if (i == m) {
      best = cur;
      found_any = true;
      return;
    }
    if (usable[i]) {
      cur.push_back(verts[i]);
      if (is_expanding(sys, cur, t)) self(self, i + 1);
      cur.pop_back();
    }
    self(self, i + 1);
  };
  search(search, 0);
  return best;
}

/// For v outside the maximal expanding set X (same arc), a T within X with
/// d(T + v) < (|T| + 1) t, read off the residual network.
inline std::vector<Vertex> find_tight_set(const ArcSystem& sys, const std::vector<Vertex>& X, Vertex v,
                                          Threshold t) {
  std::vector<Vertex> all = X;
  all.push_back(v);
  common_arc(sys, all);
  require(std::find(X.begin(), X.end(), v) == X.end(), Errc::PreconditionViolation, "v already in X");

  detail::HallNetwork net(sys, t.t);
  for (Vertex x : X) net.add_vertex(sys, x);
  require(net.augment() == t.t * static_cast<long long>(X.size()), Errc::PreconditionViolation,
          "X is not expanding");
  int vi = net.add_vertex(sys, v);
  net.augment();
  require(!net.saturated(vi), Errc::NoTightSet,
          "X + {" + std::to_string(v) + "} is still expanding, so X was not maximal");

  auto seen = net.flow.reachable(net.vnode[vi], {net.source, net.sink});
  std::vector<Vertex> T;
  for (int i = 0; i < vi; ++i)
    if (seen[net.vnode[i]]) T.push_back(net.verts[i]);
  std::vector<Vertex> Tv = T;
  Tv.push_back(v);
  require(static_cast<long long>(arc_degree(sys, Tv)) < static_cast<long long>(T.size() + 1) * t.t,
          Errc::InvariantViolation, "residual cut did not produce a tight set");
  return T;
}

struct GoodResult {
  bool good = false;
  std::vector<Vertex> expanding;  // the maximal expanding subset X
  Assignment assignment;          // t arcs for each vertex of X, when good
};

/// Good iff the maximal expanding subset covers at least half the arc.
inline GoodResult classify_good(const ArcSystem& sys, int arc_index, Threshold t) {
  GoodResult r;
  r.expanding = maximal_expanding_subset(sys, arc_index, t);
  r.good = 2 * static_cast<int>(r.expanding.size()) >= sys.arc(arc_index).size();
  if (!r.good) return r;
  detail::HallNetwork net(sys, t.t);
  for (Vertex x : r.expanding) net.add_vertex(sys, x);
  net.augment();
  for (int i = 0; i < static_cast<int>(r.expanding.size()); ++i)
    r.assignment.emplace_back(r.expanding[i], net.assigned_arcs(i));
  return r;
}

/// Assignment sets are pairwise disjoint, of size >= t, inside each vertex's neighbourhood.
inline bool assignment_valid(const ArcSystem& sys, const Assignment& a, long long t) {
  std::vector<char> used(sys.size(), 0);
  for (const auto& [v, arcs] : a) {
    if (static_cast<long long>(arcs.size()) < t) return false;
    auto nv = vertex_arc_neighbors(sys, v);
    for (int x : arcs) {
      if (x < 0 || x >= sys.size() || used[x]) return false;
      if (!std::binary_search(nv.begin(), nv.end(), x)) return false;
      used[x] = 1;
    }
  }
  return true;
}

}  // namespace pancyc
