#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pancyc/arc_system.hpp"
#include "pancyc/error.hpp"
#include "pancyc/graph.hpp"

namespace pancyc {

/// Bumped whenever the sampling procedure changes; seeded outputs are stable
/// within one version.
inline constexpr int kGeneratorVersion = 1;

/// Seeded source built on mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are derived by hand for cross-platform stability.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 eng_;
};

/// k cliques of size k-2 joined in a ring by independent bridge edges.
/// Clique i holds vertices i(k-2) .. i(k-2)+k-3; its last vertex is bridged
/// to the first vertex of clique i+1, so ham_order is 0..n-1.
inline CycledGraph erdos_construction(int k) {
  require(k >= 4, Errc::KTooSmall, "the construction needs k >= 4, got " + std::to_string(k));
  const int s = k - 2, n = k * s;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) edges.emplace_back(i * s + a, i * s + b);
    edges.emplace_back(i * s + s - 1, ((i + 1) % k) * s);
  }
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  return CycledGraph(n, edges, std::move(order));
}

/// C_n cut into at most k contiguous blocks, each completed to a clique,
/// plus each remaining pair independently with probability `rate`.
inline CycledGraph random_bounded_alpha(int k, int n, std::uint64_t seed, double rate = 0.0) {
  require(n >= 3 && k >= 1, Errc::BadPartition, "need n >= 3 and k >= 1");
  require(rate >= 0.0 && rate <= 1.0, Errc::BadPartition, "rate must lie in [0,1]");
  const int blocks = std::min(k, n);
  std::vector<int> block(n);
  for (int v = 0; v < n; ++v) block[v] = static_cast<int>(static_cast<long long>(v) * blocks / n);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool ham = v == u + 1 || (u == 0 && v == n - 1);
      if (ham || block[u] == block[v] || rng.chance(rate)) edges.emplace_back(u, v);
    }
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  return CycledGraph(n, edges, std::move(order));
}

// ---------------------------------------------------------------------------
// Planted fixtures

/// A stretch of H given by vertex ids 0..region-1 (in H order), arcs and
/// chords placed on it. With `hub`, a clique of 2k extra vertices
/// is appended to H and joined to every region vertex so that no region
/// vertex has degree <= 2k.
struct PlantSpec {
  int region = 0;
  std::vector<std::vector<Vertex>> arcs;
  std::vector<Edge> chords;
  int k = 1;
  bool hub = true;
  std::vector<Vertex> W;
};

struct PlantedFixture {
  GraphPtr graph;
  ProfilePtr profile;
  ArcSystem system;
};

inline PlantedFixture plant_m2_fixture(const PlantSpec& spec) {
  const int m = spec.region;
  require(m >= 3, Errc::SpecConflict, "region must hold at least 3 vertices");
  require(spec.k >= 1, Errc::SpecConflict, "k must be at least 1");
  const int h = spec.hub ? 2 * spec.k : 0;
  const int n = m + h;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  for (auto [u, v] : spec.chords) {
    require(u >= 0 && u < m && v >= 0 && v < m && u != v, Errc::SpecConflict,
            "chord {" + std::to_string(u) + "," + std::to_string(v) + "} outside the region");
    edges.emplace_back(u, v);
  }
  for (int a = m; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    for (int r = 0; r < m; ++r) edges.emplace_back(a, r);
  }
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  auto g = std::make_shared<const CycledGraph>(n, edges, std::move(order));
  auto prof = std::make_shared<const ProblemProfile>(mark_problematic(*g, spec.W, spec.k));

  std::vector<Arc> arcs;
  for (const auto& vs : spec.arcs) {
    for (Vertex v : vs) require(v >= 0 && v < m, Errc::SpecConflict, "arc vertex outside the region");
    arcs.emplace_back(*g, vs);
  }
  try {
    ArcSystem sys(g, prof, std::move(arcs));
    return {g, prof, std::move(sys)};
  } catch (const Error& e) {
    throw Error(Errc::SpecConflict, e.what());
  }
}

/// Random arc systems on a padded region: `arcs` arcs of sizes in
/// [min_len, max_len], `gap` spare vertices after each closure, and random
/// inter-arc edges. With star_only, the edges between each pair of arcs all
/// share one vertex, so the system is simple.
struct RandomArcSpec {
  int arcs = 6;
  int min_len = 3;
  int max_len = 3;
  int gap = 1;
  double edge_prob = 0.1;   // per vertex pair, or per arc pair when star_only
  bool star_only = false;
  int k = 0;                // 0: the largest closure span
  std::uint64_t seed = 1;
};

inline PlantedFixture random_arc_fixture(const RandomArcSpec& rs) {
  require(rs.arcs >= 1 && rs.min_len >= 1 && rs.max_len >= rs.min_len && rs.gap >= 1, Errc::SpecConflict,
          "bad random arc spec");
  Rng rng(rs.seed);
  PlantSpec ps;
  int cursor = 0, widest = 1;
  for (int i = 0; i < rs.arcs; ++i) {
    int len = rng.range(rs.min_len, rs.max_len);
    std::vector<Vertex> vs;
    for (int j = 0; j < len; ++j) vs.push_back(cursor + 2 * j);
    widest = std::max(widest, 2 * len - 1);
    cursor += 2 * len - 1 + rs.gap;
    ps.arcs.push_back(std::move(vs));
  }
  ps.region = std::max(cursor, 3);
  ps.k = rs.k > 0 ? rs.k : widest;
  for (int i = 0; i < rs.arcs; ++i)
    for (int j = i + 1; j < rs.arcs; ++j) {
      const auto& A = ps.arcs[i];
      const auto& B = ps.arcs[j];
      if (rs.star_only) {
        if (!rng.chance(rs.edge_prob)) continue;
        bool centre_in_a = rng.chance(0.5);
        const auto& C = centre_in_a ? A : B;
        const auto& O = centre_in_a ? B : A;
        Vertex c = C[rng.below(C.size())];
        bool any = false;
        for (Vertex o : O)
          if (rng.chance(0.5)) {
            ps.chords.emplace_back(c, o);
            any = true;
          }
        if (!any) ps.chords.emplace_back(c, O[rng.below(O.size())]);
      } else {
        for (Vertex u : A)
          for (Vertex v : B)
            if (rng.chance(rs.edge_prob)) ps.chords.emplace_back(u, v);
      }
    }
  return plant_m2_fixture(ps);
}

}  // namespace pancyc
