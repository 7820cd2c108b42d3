#include <gtest/gtest.h>

#include "pancyc/generators.hpp"
#include "pancyc/oracles.hpp"

using namespace pancyc;

namespace {

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

TEST(Erdos, SmallestIsEightCycle) {
  auto g = erdos_construction(4);
  EXPECT_EQ(g.n(), 8);
  EXPECT_EQ(g.num_edges(), 8);
  EXPECT_EQ(cycle_spectrum(g).present, (std::vector<int>{8}));
}

TEST(Erdos, AlphaAndMissingLength) {
  for (int k = 4; k <= 7; ++k) {
    auto g = erdos_construction(k);
    EXPECT_EQ(g.n(), k * (k - 2));
    EXPECT_EQ(static_cast<int>(max_independent_set(g).size()), k);
    auto s = cycle_spectrum(g, g.n());
    EXPECT_FALSE(s.has(k - 1)) << "k=" << k;
    EXPECT_TRUE(s.has(g.n()));
    for (int l = 3; l <= k - 2; ++l) EXPECT_TRUE(s.has(l)) << "k=" << k << " l=" << l;
  }
}

TEST(Erdos, EightStillHasAlphaEight) {
  auto g = erdos_construction(8);
  EXPECT_EQ(g.n(), 48);
  EXPECT_EQ(max_independent_set(g).size(), 8u);
  EXPECT_FALSE(has_cycle_through(g, 7, {}).has_value());
}

TEST(Erdos, TooSmall) {
  EXPECT_EQ(code_of([] { erdos_construction(3); }), Errc::KTooSmall);
}

TEST(RandomBoundedAlpha, AlphaAtMostK) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed)
    for (int k : {1, 2, 3, 5}) {
      auto g = random_bounded_alpha(k, 12 + static_cast<int>(seed % 20), seed, 0.1);
      EXPECT_LE(static_cast<int>(max_independent_set(g).size()), k);
    }
}

TEST(RandomBoundedAlpha, RateOneIsComplete) {
  auto g = random_bounded_alpha(4, 15, 7, 1.0);
  EXPECT_EQ(g.num_edges(), 15 * 14 / 2);
  EXPECT_TRUE(cycle_spectrum(g).pancyclic());
}

TEST(RandomBoundedAlpha, Deterministic) {
  auto a = random_bounded_alpha(3, 40, 99, 0.3);
  auto b = random_bounded_alpha(3, 40, 99, 0.3);
  auto c = random_bounded_alpha(3, 40, 100, 0.3);
  EXPECT_EQ(write_graph(a), write_graph(b));
  EXPECT_NE(write_graph(a), write_graph(c));
}

TEST(RandomBoundedAlpha, BadInput) {
  EXPECT_EQ(code_of([] { random_bounded_alpha(0, 10, 1); }), Errc::BadPartition);
  EXPECT_EQ(code_of([] { random_bounded_alpha(2, 2, 1); }), Errc::BadPartition);
  EXPECT_EQ(code_of([] { random_bounded_alpha(2, 10, 1, 1.5); }), Errc::BadPartition);
}

TEST(Plant, Conflicts) {
  PlantSpec s;
  s.region = 12;
  s.k = 3;
  s.arcs = {{0, 2}, {1, 5}};
  EXPECT_EQ(code_of([&] { plant_m2_fixture(s); }), Errc::SpecConflict);
  s.arcs = {{0, 1}};
  EXPECT_EQ(code_of([&] { plant_m2_fixture(s); }), Errc::SpecConflict);
  s.arcs = {{0, 20}};
  EXPECT_EQ(code_of([&] { plant_m2_fixture(s); }), Errc::SpecConflict);
  s.arcs = {{0, 2}};
  s.chords = {{0, 30}};
  EXPECT_EQ(code_of([&] { plant_m2_fixture(s); }), Errc::SpecConflict);
  s.chords.clear();
  s.W = {1};
  EXPECT_EQ(code_of([&] { plant_m2_fixture(s); }), Errc::SpecConflict);
}

TEST(Plant, HubKeepsRegionUnproblematic) {
  PlantSpec s;
  s.region = 20;
  s.k = 4;
  s.arcs = {{0, 2}, {10, 12}};
  auto f = plant_m2_fixture(s);
  EXPECT_EQ(f.graph->n(), 28);
  EXPECT_EQ(f.profile->size(), 0);
  EXPECT_TRUE(f.system.independent());
  s.hub = false;
  EXPECT_EQ(code_of([&] { plant_m2_fixture(s); }), Errc::SpecConflict);
}

TEST(RandomArcFixture, StarOnlyIsSimple) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomArcSpec rs;
    rs.arcs = 8;
    rs.min_len = 2;
    rs.max_len = 5;
    rs.star_only = true;
    rs.edge_prob = 0.6;
    rs.seed = seed;
    auto f = random_arc_fixture(rs);
    EXPECT_TRUE(f.system.simple());
    EXPECT_EQ(f.system.size(), 8);
  }
}
