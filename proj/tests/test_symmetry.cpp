#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pweave/symmetry.hpp"
#include "pweave/weave.hpp"

using namespace pweave;

namespace {

Permutation layer_shift(int n) {
  std::vector<Vertex> images(10 * n);
  for (int i = 1; i <= n; ++i)
    for (int x = 0; x < 10; ++x) images[weave_vertex(i, x)] = weave_vertex(i % n + 1, x);
  return Permutation(std::move(images));
}

}  // namespace

TEST(Permutation, Algebra) {
  const Permutation p({1, 2, 0, 4, 3});
  EXPECT_EQ(p.order(), 6u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  const Permutation q({1, 0, 2, 3, 4});
  EXPECT_EQ((p * q)(0), p(q(0)));
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(IsAutomorphism, Definitions) {
  const UGraph g = build(WeaveSpec::cycle(3));
  EXPECT_TRUE(is_automorphism(g, layer_shift(3)));
  EXPECT_TRUE(is_automorphism(g, Permutation::identity(30)));
  std::vector<Vertex> swap(30);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[weave_vertex(1, 0)], swap[weave_vertex(1, 1)]);
  EXPECT_FALSE(is_automorphism(g, Permutation(swap)));
  EXPECT_THROW(is_automorphism(g, Permutation::identity(10)), std::invalid_argument);
}

TEST(AutomorphismGroup, KnownOrders) {
  EXPECT_EQ(automorphism_group(petersen()).group_order, 120);
  EXPECT_EQ(automorphism_group(complete_graph(6)).group_order, 720);
  EXPECT_EQ(automorphism_group(cycle_graph(9)).group_order, 18);
  EXPECT_EQ(automorphism_group(pweave::testing::cube_graph()).group_order, 48);
  EXPECT_EQ(automorphism_group(empty_graph(7)).group_order, 5040);
  for (int n = 3; n <= 7; ++n) {
    const auto rep = automorphism_group(build(WeaveSpec::cycle(n)));
    EXPECT_EQ(rep.group_order, 10 * n) << n;
  }
  EXPECT_EQ(automorphism_group(build(WeaveSpec::parse(2, "(1 2)"))).group_order, 122880);
}

TEST(AutomorphismGroup, BudgetIsEnforced) {
  EXPECT_THROW(automorphism_group(build(WeaveSpec::cycle(5)), SearchOptions{3}), SearchBudgetExceeded);
}

TEST(AutomorphismGroup, MatchesBruteForceOnSmallCorpus) {
  int checked = 0;
  for (const auto& [name, g] : pweave::testing::corpus()) {
    if (g.vertex_count() > 8) continue;
    const auto rep = automorphism_group(g);
    const auto brute = pweave::testing::brute_force_automorphisms(g);
    EXPECT_EQ(rep.group_order, brute.order) << name;
    EXPECT_EQ(orbits(rep, g.vertex_count()), brute.orbits) << name;
    for (const auto& p : rep.generators) EXPECT_TRUE(is_automorphism(g, p)) << name;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(AutomorphismGroup, GeneratorsVerifyOnWholeCorpus) {
  for (const auto& [name, g] : pweave::testing::corpus()) {
    const auto rep = automorphism_group(g);
    for (const auto& p : rep.generators) EXPECT_TRUE(is_automorphism(g, p)) << name;
    GroupOrder product = 1;
    for (auto len : rep.basic_orbit_lengths) product *= len;
    EXPECT_EQ(product, rep.group_order) << name;
  }
}

TEST(Orbits, Family) {
  for (int n = 3; n <= 7; ++n) {
    const auto rep = automorphism_group(build(WeaveSpec::cycle(n)));
    const auto o = orbits(rep, 10 * n);
    ASSERT_EQ(o.size(), 2u) << n;
    EXPECT_EQ(o[0].size(), 5u * n);
    EXPECT_EQ(o[1].size(), 5u * n);
  }
  const auto e3 = orbits(automorphism_group(empty_graph(3)), 3);
  EXPECT_EQ(e3, (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
}

TEST(Dihedral, Family) {
  for (int n = 3; n <= 7; ++n) {
    const auto rep = automorphism_group(build(WeaveSpec::cycle(n)));
    EXPECT_TRUE(dihedral_check(rep, n)) << n;
    EXPECT_TRUE(rep.is_dihedral_10n) << n;
    ASSERT_TRUE(rep.max_element_order) << n;
    EXPECT_EQ(*rep.max_element_order, 5u * n);
  }
  const auto g2 = automorphism_group(build(WeaveSpec::parse(2, "(1 2)")));
  EXPECT_FALSE(dihedral_check(g2, 2));
  // A cyclic group of order 10n fails: no inverting involution.
  std::vector<Vertex> rot(30);
  for (int v = 0; v < 30; ++v) rot[v] = (v + 1) % 30;
  AutReport cyclic;
  cyclic.generators = {Permutation(rot)};
  cyclic.group_order = 30;
  EXPECT_FALSE(dihedral_check(cyclic, 3));
}

TEST(Transitivity, Examples) {
  EXPECT_TRUE(is_vertex_transitive(petersen()));
  EXPECT_TRUE(is_vertex_transitive(complete_graph(4)));
  EXPECT_FALSE(is_vertex_transitive(build(WeaveSpec::cycle(3))));
  EXPECT_TRUE(is_edge_transitive(cycle_graph(5)));
  EXPECT_TRUE(is_edge_transitive(petersen()));
  EXPECT_FALSE(is_edge_transitive(path_graph(4)));
  for (int n = 3; n <= 7; ++n) EXPECT_FALSE(is_edge_transitive(build(WeaveSpec::cycle(n)))) << n;
}

TEST(Isomorphism, RandomRelabelings) {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 7; ++n) {
    const UGraph g = build(WeaveSpec::cycle(n));
    for (int rep = 0; rep < 3; ++rep) {
      const UGraph h = g.relabeled(pweave::testing::random_permutation(g.vertex_count(), rng));
      const auto iso = are_isomorphic(g, h);
      ASSERT_TRUE(iso) << n;
      EXPECT_TRUE(is_isomorphism(g, h, *iso));
    }
  }
  for (const auto& [name, g] : pweave::testing::corpus()) {
    const UGraph h = g.relabeled(pweave::testing::random_permutation(g.vertex_count(), rng));
    const auto iso = are_isomorphic(g, h);
    ASSERT_TRUE(iso) << name;
    EXPECT_TRUE(is_isomorphism(g, h, *iso)) << name;
  }
}

TEST(Isomorphism, NonIsomorphicPairs) {
  EXPECT_FALSE(are_isomorphic(build(WeaveSpec::cycle(3)), build(WeaveSpec::cycle(4))));
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), pweave::testing::from_list(6, {{0, 1}, {1, 2}, {2, 0},
                                                                            {3, 4}, {4, 5}, {5, 3}})));
  // Same size and degree sequence, different structure.
  EXPECT_FALSE(are_isomorphic(build(WeaveSpec::cycle(4)), build(WeaveSpec::parse(4, "(1 2)(3 4)"))));
}

TEST(Isomorphism, BruteForceOnSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const UGraph g = pweave::testing::random_graph(n, 0.5, rng);
    const UGraph h = pweave::testing::random_graph(n, 0.5, rng);
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    bool any = false;
    do {
      any = is_isomorphism(g, h, Permutation(p));
    } while (!any && std::next_permutation(p.begin(), p.end()));
    const auto iso = are_isomorphic(g, h);
    EXPECT_EQ(iso.has_value(), any);
    if (iso) EXPECT_TRUE(is_isomorphism(g, h, *iso));
  }
}
