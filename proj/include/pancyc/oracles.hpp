#pragma once

// Exact desk-scale ground truth: independence number, cycle lengths, and
// from-scratch witness checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "pancyc/error.hpp"
#include "pancyc/graph.hpp"
#include "pancyc/surgery.hpp"
#include "pancyc/witness.hpp"

namespace pancyc {

inline constexpr int kDefaultAlphaCap = 60;
inline constexpr int kDefaultSpectrumCap = 24;
inline constexpr int kDefaultCycleSearchCap = 64;

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

/// Maximum independent set by branch and bound; the bound partitions the
/// candidates greedily into cliques, each contributing at most one vertex.
class MisSolver {
 public:
  explicit MisSolver(std::vector<Mask> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

  Mask solve() {
    Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    expand(0, 0, all);
    return best_;
  }

 private:
  void expand(Mask chosen, int size, Mask cand) {
    if (cand == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    // Clique cover of cand; label each vertex with the number of cliques so far.
    std::vector<int> order;
    std::vector<int> label;
    Mask uncovered = cand;
    int cliques = 0;
    while (uncovered) {
      ++cliques;
      Mask pool = uncovered;
      while (pool) {
        int v = std::countr_zero(pool);
        order.push_back(v);
        label.push_back(cliques);
        uncovered &= ~bit(v);
        pool &= adj_[v];
        pool &= ~bit(v);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + label[i] <= best_size_) return;
      int v = order[i];
      expand(chosen | bit(v), size + 1, cand & ~adj_[v] & ~bit(v));
      cand &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  int n_;
  Mask best_ = 0;
  int best_size_ = -1;
};

}  // namespace detail

/// Exact maximum independent set of G[subset].
inline std::vector<Vertex> max_independent_set_in(const CycledGraph& g, const std::vector<Vertex>& subset,
                                                  int cap = kDefaultAlphaCap) {
  const int m = static_cast<int>(subset.size());
  require(m <= cap && m <= 64, Errc::TooLarge,
          "independence oracle capped at " + std::to_string(std::min(cap, 64)) + " vertices, got " + std::to_string(m));
  std::vector<detail::Mask> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && g.adjacent(subset[i], subset[j])) adj[i] |= detail::bit(j);
  detail::Mask best = m == 0 ? 0 : detail::MisSolver(adj).solve();
  std::vector<Vertex> out;
  for (int i = 0; i < m; ++i)
    if (best & detail::bit(i)) out.push_back(subset[i]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> max_independent_set(const CycledGraph& g, int cap = kDefaultAlphaCap) {
  require(g.n() <= cap, Errc::TooLarge,
          "independence oracle capped at " + std::to_string(cap) + " vertices, got " + std::to_string(g.n()));
  std::vector<Vertex> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  return max_independent_set_in(g, all, cap);
}

namespace detail {

/// Depth-first search for a cycle with exactly `length` vertices through
/// every vertex of `required`, pruned by BFS distance back to the start.
class CycleSearch {
 public:
  CycleSearch(const CycledGraph& g, int length, Mask required) : g_(g), len_(length), required_(required) {
    adj_.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
  }

  std::optional<std::vector<Vertex>> run() {
    if (len_ < 3 || len_ > g_.n()) return std::nullopt;
    if (std::popcount(required_) > len_) return std::nullopt;
    if (required_) return from(std::countr_zero(required_), ~Mask{0});
    for (int s = 0; s < g_.n(); ++s) {
      Mask allowed = ~Mask{0} << s;  // vertices >= s; s is the cycle minimum
      if (auto c = from(s, allowed)) return c;
    }
    return std::nullopt;
  }

 private:
  std::optional<std::vector<Vertex>> from(int s, Mask allowed) {
    const int n = g_.n();
    if (n < 64) allowed &= bit(n) - 1;
    dist_.assign(n, n + 1);
    std::queue<int> q;
    dist_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      Mask nb = adj_[u] & allowed;
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (dist_[w] > dist_[u] + 1) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    if ((required_ & allowed) != required_) return std::nullopt;
    s_ = s;
    allowed_ = allowed;
    path_.assign(1, s);
    if (dfs(bit(s))) return path_;
    return std::nullopt;
  }

  bool dfs(Mask visited) {
    const int have = static_cast<int>(path_.size());
    const int v = path_.back();
    if (have == len_) return (adj_[v] & bit(s_)) && (required_ & ~visited) == 0;
    Mask cand = adj_[v] & allowed_ & ~visited;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (dist_[w] > len_ - have) continue;
      Mask nv = visited | bit(w);
      if (std::popcount(required_ & ~nv) > len_ - have - 1) continue;
      path_.push_back(w);
      if (dfs(nv)) return true;
      path_.pop_back();
    }
    return false;
  }

  const CycledGraph& g_;
  int len_;
  Mask required_;
  std::vector<Mask> adj_;
  std::vector<int> dist_;
  std::vector<Vertex> path_;
  int s_ = 0;
  Mask allowed_ = 0;
};

}  // namespace detail

inline std::optional<CycleWitness> has_cycle_through(const CycledGraph& g, int length,
                                                     const std::vector<Vertex>& required,
                                                     int cap = kDefaultCycleSearchCap) {
  require(g.n() <= cap && g.n() <= 64, Errc::TooLarge,
          "cycle search capped at " + std::to_string(std::min(cap, 64)) + " vertices, got " + std::to_string(g.n()));
  detail::Mask req = 0;
  for (Vertex v : required) {
    require(v >= 0 && v < g.n(), Errc::PreconditionViolation, "required vertex out of range");
    req |= detail::bit(v);
  }
  auto path = detail::CycleSearch(g, length, req).run();
  if (!path) return std::nullopt;
  CycleWitness w;
  w.cycle = *path;
  w.length = static_cast<int>(path->size());
  w.contains = required;
  std::sort(w.contains.begin(), w.contains.end());
  require(is_valid_cycle(g, w), Errc::InvariantViolation, "cycle search produced an invalid cycle");
  return w;
}

struct CycleSpectrum {
  int n = 0;
  std::vector<int> present;  // sorted lengths in [3, n]

  bool has(int l) const { return std::binary_search(present.begin(), present.end(), l); }
  bool pancyclic() const { return static_cast<int>(present.size()) == std::max(0, n - 2); }
};

inline CycleSpectrum cycle_spectrum(const CycledGraph& g, int cap = kDefaultSpectrumCap) {
  require(g.n() <= cap && g.n() <= 64, Errc::TooLarge,
          "spectrum oracle capped at " + std::to_string(std::min(cap, 64)) + " vertices, got " + std::to_string(g.n()));
  CycleSpectrum s;
  s.n = g.n();
  for (int l = 3; l <= g.n(); ++l)
    if (detail::CycleSearch(g, l, 0).run()) s.present.push_back(l);
  return s;
}

/// Re-derives every witness invariant from g and the profile.
inline bool verify_witness(const CycledGraph& g, const ProblemProfile& prof, const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::IndependentSet: {
      if (w.vertices.empty()) return false;
      std::vector<char> seen(g.n(), 0);
      for (Vertex v : w.vertices) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
        for (Vertex u : g.neighbors(v))
          if (seen[u]) return false;
      }
      return true;
    }
    case Witness::Kind::Contradicting: {
      if (!w.cycle) return false;
      const auto& c = *w.cycle;
      if (c.length != static_cast<int>(c.cycle.size())) return false;
      return validate_contradicting(g, prof, c);
    }
    case Witness::Kind::Inconclusive: return true;
  }
  return false;
}

}  // namespace pancyc
