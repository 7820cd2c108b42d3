#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "fixtures.hpp"
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

CycledGraph random_ham(std::mt19937& rng, int n, double p) {
  std::vector<Edge> ch;
  std::uniform_real_distribution<double> u(0, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (u(rng) < p) ch.emplace_back(a, b);
  return fx::ring(n, ch);
}

}  // namespace

TEST(Alpha, Examples) {
  EXPECT_EQ(max_independent_set(fx::ring(5, {})).size(), 2u);
  EXPECT_EQ(max_independent_set(fx::ring(12, {})).size(), 6u);
  EXPECT_EQ(max_independent_set(fx::ring(12, {})), max_independent_set(fx::ring(12, {})));
  auto k = random_bounded_alpha(1, 9, 1);
  EXPECT_EQ(max_independent_set(k).size(), 1u);
  EXPECT_EQ(max_independent_set_in(fx::ring(12, {}), {0, 1, 2, 3}).size(), 2u);
  EXPECT_EQ(code_of([] { max_independent_set(fx::ring(61, {})); }), Errc::TooLarge);
  EXPECT_EQ(max_independent_set(fx::ring(61, {}), 64).size(), 30u);
}

TEST(Alpha, MatchesExhaustiveSearch) {
  std::mt19937 rng(2);
  for (int it = 0; it < 150; ++it) {
    int n = 5 + static_cast<int>(rng() % 14);
    auto g = random_ham(rng, n, 0.05 + 0.4 * (it % 5) / 4.0);
    auto I = max_independent_set(g);
    EXPECT_TRUE(is_independent_set(g, I));
    EXPECT_EQ(static_cast<int>(I.size()), brute::alpha(g));
  }
}

TEST(Spectrum, MatchesEnumeration) {
  std::mt19937 rng(4);
  for (int it = 0; it < 120; ++it) {
    int n = 4 + static_cast<int>(rng() % 9);
    auto g = random_ham(rng, n, 0.05 + 0.3 * (it % 4) / 3.0);
    auto s = cycle_spectrum(g);
    auto lens = brute::all_cycle_lengths(g);
    EXPECT_EQ(s.present, std::vector<int>(lens.begin(), lens.end()));
    EXPECT_EQ(s.pancyclic(), static_cast<int>(lens.size()) == n - 2);
  }
}

TEST(Spectrum, Examples) {
  auto c = cycle_spectrum(fx::ring(9, {}));
  EXPECT_EQ(c.present, (std::vector<int>{9}));
  EXPECT_FALSE(c.pancyclic());
  auto w = cycle_spectrum(fx::ring(6, {{0, 2}, {0, 3}, {0, 4}}));  // fan: every length
  EXPECT_TRUE(w.pancyclic());
  EXPECT_TRUE(w.has(3));
  EXPECT_FALSE(w.has(7));
  EXPECT_EQ(code_of([] { cycle_spectrum(fx::ring(25, {})); }), Errc::TooLarge);
}

TEST(CycleThrough, Examples) {
  auto g = fx::ring(8, {{0, 4}});
  auto c = has_cycle_through(g, 5, {2});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length, 5);
  EXPECT_TRUE(is_valid_cycle(g, *c));
  EXPECT_NE(std::find(c->cycle.begin(), c->cycle.end(), 2), c->cycle.end());
  EXPECT_FALSE(has_cycle_through(g, 5, {2, 6}).has_value());
  EXPECT_TRUE(has_cycle_through(g, 8, {2, 6}).has_value());
  EXPECT_FALSE(has_cycle_through(g, 3, {}).has_value());
  EXPECT_FALSE(has_cycle_through(g, 6, {}).has_value());
  EXPECT_EQ(code_of([&] { has_cycle_through(g, 5, {9}); }), Errc::PreconditionViolation);
}

TEST(CycleThrough, AgreesWithSpectrum) {
  std::mt19937 rng(8);
  for (int it = 0; it < 60; ++it) {
    auto g = random_ham(rng, 10, 0.2);
    auto lens = brute::all_cycle_lengths(g);
    for (int l = 3; l <= 10; ++l) EXPECT_EQ(has_cycle_through(g, l, {}).has_value(), lens.count(l) == 1);
  }
}

TEST(VerifyWitness, Examples) {
  auto g = fx::crossing12();
  auto prof = mark_problematic(g, {}, 2);  // degree <= 4: everything
  EXPECT_TRUE(verify_witness(g, prof, Witness::independent({1, 3, 5})));
  EXPECT_FALSE(verify_witness(g, prof, Witness::independent({0, 6})));
  EXPECT_FALSE(verify_witness(g, prof, Witness::independent({})));
  EXPECT_FALSE(verify_witness(g, prof, Witness::independent({3, 3})));
  EXPECT_TRUE(verify_witness(g, prof, Witness::inconclusive("x")));

  auto cyc = crossing_m2_surgery(g, 0, 2, 6, 8);
  ProblemProfile none = prof;
  none.mask.assign(g.n(), false);
  none.problematic.clear();
  none.k = 2;
  EXPECT_TRUE(verify_witness(g, none, Witness::contradicting(cyc)));
  EXPECT_FALSE(verify_witness(g, prof, Witness::contradicting(cyc)));  // misses 1 and 7
  auto bad = cyc;
  bad.length = 11;
  EXPECT_FALSE(verify_witness(g, none, Witness::contradicting(bad)));
  Witness missing;
  missing.kind = Witness::Kind::Contradicting;
  EXPECT_FALSE(verify_witness(g, none, missing));
}
