#pragma once

// Simple undirected graph with a distinguished Hamilton cycle. All cyclic
// reasoning in the library happens on positions along that cycle; vertex ids
// are converted at the boundary.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pancyc/error.hpp"

namespace pancyc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class CycledGraph {
 public:
  CycledGraph(int n, const std::vector<Edge>& edges, std::vector<Vertex> ham_order)
      : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), lists_(n), order_(std::move(ham_order)), pos_(n, -1) {
    require(n >= 3, Errc::MalformedFile, "a Hamilton cycle needs at least 3 vertices");
    for (auto [u, v] : edges) {
      require(u >= 0 && u < n && v >= 0 && v < n, Errc::MalformedFile,
              "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
      require(u != v, Errc::MalformedFile, "self-loop at " + std::to_string(u));
      if (adj_[idx(u, v)]) continue;
      adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
      lists_[u].push_back(v);
      lists_[v].push_back(u);
      ++m_;
    }
    for (auto& l : lists_) std::sort(l.begin(), l.end());

    require(static_cast<int>(order_.size()) == n, Errc::NotAPermutation,
            "ham_order has " + std::to_string(order_.size()) + " entries, expected " + std::to_string(n));
    for (int p = 0; p < n; ++p) {
      Vertex v = order_[p];
      require(v >= 0 && v < n && pos_[v] == -1, Errc::NotAPermutation,
              "ham_order is not a permutation (entry " + std::to_string(v) + ")");
      pos_[v] = p;
    }
    for (int p = 0; p < n; ++p) {
      require(adjacent(order_[p], order_[(p + 1) % n]), Errc::HamEdgeMissing,
              "H-edge at position " + std::to_string(p) + " ({" + std::to_string(order_[p]) + "," +
                  std::to_string(order_[(p + 1) % n]) + "}) is not in the edge list");
    }
  }

  int n() const noexcept { return n_; }
  int num_edges() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[idx(u, v)] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return lists_[v]; }
  int degree(Vertex v) const { return static_cast<int>(lists_[v].size()); }

  const std::vector<Vertex>& ham_order() const noexcept { return order_; }
  int pos(Vertex v) const { return pos_[v]; }
  /// Vertex at position p (taken modulo n).
  Vertex at(long p) const { return order_[static_cast<std::size_t>(((p % n_) + n_) % n_)]; }

  /// Number of forward H-steps from position a to position b.
  int forward_steps(int from_pos, int to_pos) const { return ((to_pos - from_pos) % n_ + n_) % n_; }

  bool is_ham_edge(Vertex u, Vertex v) const {
    int d = forward_steps(pos_[u], pos_[v]);
    return d == 1 || d == n_ - 1;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : lists_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> lists_;
  std::vector<Vertex> order_;
  std::vector<int> pos_;
};

using GraphPtr = std::shared_ptr<const CycledGraph>;

struct Chord {
  Vertex u;
  Vertex v;
  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Vertices that every contradicting cycle has to keep: W together with
/// every vertex of degree at most 2k.
struct ProblemProfile {
  std::vector<Vertex> W;
  int k = 1;
  std::vector<Vertex> problematic;
  std::vector<bool> mask;

  bool is_problematic(Vertex v) const { return mask[v]; }
  int size() const { return static_cast<int>(problematic.size()); }
  /// The a-priori upper bound 22k^2 on |problematic| when |W| <= 20k^2. Reported, not enforced.
  long long sanity_bound() const { return 22LL * k * k; }
};

inline ProblemProfile mark_problematic(const CycledGraph& g, std::vector<Vertex> W, int k) {
  require(k >= 1, Errc::PreconditionViolation, "k must be at least 1");
  ProblemProfile prof;
  prof.k = k;
  prof.mask.assign(g.n(), false);
  for (Vertex w : W) {
    require(w >= 0 && w < g.n(), Errc::PreconditionViolation, "W vertex out of range: " + std::to_string(w));
    prof.mask[w] = true;
  }
  std::sort(W.begin(), W.end());
  W.erase(std::unique(W.begin(), W.end()), W.end());
  prof.W = std::move(W);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) <= 2 * k) prof.mask[v] = true;
    if (prof.mask[v]) prof.problematic.push_back(v);
  }
  return prof;
}

struct HamPath {
  int length = 0;             // number of edges
  std::vector<Vertex> path;   // length + 1 vertices, from u to v
};

/// The shorter of the two H-paths between u and v. On an antipodal tie the
/// path runs forward along ham_order from u.
inline HamPath cyclic_distance(const CycledGraph& g, Vertex u, Vertex v) {
  require(u != v, Errc::SameVertex, "cyclic_distance of a vertex to itself");
  int fwd = g.forward_steps(g.pos(u), g.pos(v));
  int bwd = g.n() - fwd;
  HamPath out;
  int step = fwd <= bwd ? 1 : -1;
  out.length = std::min(fwd, bwd);
  out.path.reserve(out.length + 1);
  for (int i = 0; i <= out.length; ++i) out.path.push_back(g.at(static_cast<long>(g.pos(u)) + step * i));
  return out;
}

/// True iff the chords interleave on the circle drawn in ham_order.
inline bool chords_cross(const CycledGraph& g, Chord c1, Chord c2) {
  int a = g.pos(c1.u), b = g.pos(c1.v), c = g.pos(c2.u), d = g.pos(c2.v);
  require(a != b && a != c && a != d && b != c && b != d && c != d, Errc::SharedEndpoint,
          "chord endpoints must occupy four distinct positions");
  int span = g.forward_steps(a, b);
  auto inside = [&](int p) { int s = g.forward_steps(a, p); return s > 0 && s < span; };
  return inside(c) != inside(d);
}

// ---------------------------------------------------------------------------
// Graph file format:
//   n m
//   H: v_0 v_1 ... v_{n-1}
//   u v            (m lines)

inline CycledGraph load_graph(std::istream& in) {
  auto fail = [](const std::string& msg) { throw Error(Errc::MalformedFile, msg); };
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) fail("empty input");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) fail("header must be `n m`");
  }
  if (n < 3 || m < 0 || n > 1'000'000) fail("bad header values");

  if (!next_line()) fail("missing `H:` line");
  std::istringstream hl(line);
  std::string tag;
  hl >> tag;
  if (tag != "H:") fail("second line must start with `H:`");
  std::vector<Vertex> order;
  long long v;
  while (hl >> v) {
    if (v < 0 || v >= n) throw Error(Errc::NotAPermutation, "ham_order entry out of range: " + std::to_string(v));
    order.push_back(static_cast<Vertex>(v));
  }
  if (!hl.eof()) fail("non-numeric token in `H:` line");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) fail("expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    std::istringstream es(line);
    long long a, b;
    std::string extra;
    if (!(es >> a >> b) || (es >> extra)) fail("bad edge line: `" + line + "`");
    if (a < 0 || a >= n || b < 0 || b >= n) fail("edge endpoint out of range: `" + line + "`");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (next_line()) fail("trailing content after edge list");
  return CycledGraph(static_cast<int>(n), edges, std::move(order));
}

inline CycledGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

inline std::string write_graph(const CycledGraph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.n() << ' ' << edges.size() << "\nH:";
  for (Vertex v : g.ham_order()) out << ' ' << v;
  out << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace pancyc
