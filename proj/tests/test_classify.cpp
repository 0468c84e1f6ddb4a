#include <gtest/gtest.h>

#include "corpus.hpp"
#include "pweave/classify.hpp"
#include "pweave/weave.hpp"

using namespace pweave;

TEST(Hamiltonian, Examples) {
  const UGraph g3 = build(WeaveSpec::cycle(3));
  const auto r = hamiltonian_cycle(g3);
  ASSERT_EQ(r.status, HamiltonStatus::kYes);
  EXPECT_EQ(r.cycle.size(), 30u);
  EXPECT_TRUE(verify_hamiltonian_cycle(g3, r.cycle));

  EXPECT_EQ(hamiltonian_cycle(petersen()).status, HamiltonStatus::kNo);

  const auto c5 = hamiltonian_cycle(cycle_graph(5));
  ASSERT_EQ(c5.status, HamiltonStatus::kYes);
  EXPECT_TRUE(verify_hamiltonian_cycle(cycle_graph(5), c5.cycle));
}

TEST(Hamiltonian, Family) {
  for (int n = 2; n <= 7; ++n) {
    const UGraph g = build(WeaveSpec::cycle(n));
    const auto r = hamiltonian_cycle(g);
    ASSERT_EQ(r.status, HamiltonStatus::kYes) << n;
    EXPECT_TRUE(verify_hamiltonian_cycle(g, r.cycle)) << n;
  }
}

TEST(Hamiltonian, NegativeCases) {
  EXPECT_EQ(hamiltonian_cycle(path_graph(5)).status, HamiltonStatus::kNo);
  EXPECT_EQ(hamiltonian_cycle(pweave::testing::complete_bipartite(3, 4)).status, HamiltonStatus::kNo);
  EXPECT_EQ(hamiltonian_cycle(complete_graph(2)).status, HamiltonStatus::kNo);
  EXPECT_FALSE(verify_hamiltonian_cycle(cycle_graph(5), {0, 1, 2, 4, 3}));
}

TEST(Hamiltonian, TimeoutIsAValue) {
  EXPECT_EQ(hamiltonian_cycle(petersen(), 5).status, HamiltonStatus::kTimeout);
}

// Exhaustive oracle: a Hamiltonian cycle through vertex 0 as a permutation.
TEST(Hamiltonian, MatchesExhaustiveSearchOnSmallCorpus) {
  for (const auto& [name, g] : pweave::testing::corpus()) {
    const int n = g.vertex_count();
    if (n > 8) continue;
    bool brute = false;
    if (n >= 3) {
      std::vector<Vertex> rest;
      for (int v = 1; v < n; ++v) rest.push_back(v);
      do {
        std::vector<Vertex> cyc{0};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        brute = verify_hamiltonian_cycle(g, cyc);
      } while (!brute && std::next_permutation(rest.begin(), rest.end()));
    }
    const auto r = hamiltonian_cycle(g);
    EXPECT_EQ(r.status == HamiltonStatus::kYes, brute) << name;
    EXPECT_NE(r.status, HamiltonStatus::kTimeout) << name;
  }
}

TEST(Coloring, Examples) {
  const UGraph g3 = build(WeaveSpec::cycle(3));
  const auto r = chromatic_number(g3);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.chromatic_number, 3);
  EXPECT_TRUE(verify_coloring(g3, r.coloring, 3));

  const auto c8 = chromatic_number(cycle_graph(8));
  EXPECT_EQ(c8.chromatic_number, 2);
  EXPECT_TRUE(verify_coloring(cycle_graph(8), c8.coloring, 2));

  const auto p = chromatic_number(petersen());
  EXPECT_EQ(p.chromatic_number, 3);
  EXPECT_TRUE(verify_coloring(petersen(), p.coloring, 3));

  EXPECT_EQ(chromatic_number(complete_graph(5)).chromatic_number, 5);
  EXPECT_EQ(chromatic_number(empty_graph(3)).chromatic_number, 1);
  EXPECT_EQ(chromatic_number(empty_graph(0)).chromatic_number, 0);
}

TEST(Coloring, Family) {
  for (int n = 2; n <= 7; ++n) {
    const UGraph g = build(WeaveSpec::cycle(n));
    const auto r = chromatic_number(g);
    EXPECT_TRUE(r.exact) << n;
    EXPECT_EQ(r.chromatic_number, 3) << n;
    EXPECT_TRUE(verify_coloring(g, r.coloring, 3)) << n;
  }
}

// Exhaustive oracle: smallest k admitting a proper k-colouring.
TEST(Coloring, MatchesExhaustiveSearchOnSmallCorpus) {
  for (const auto& [name, g] : pweave::testing::corpus()) {
    const int n = g.vertex_count();
    if (n > 7) continue;
    int brute = n;
    for (int k = 1; k < n && brute == n; ++k) {
      std::vector<int> col(n, 0);
      while (true) {
        bool proper = true;
        for (const auto& [u, v] : g.edges()) proper = proper && col[u] != col[v];
        if (proper) {
          brute = k;
          break;
        }
        int i = 0;
        while (i < n && ++col[i] == k) col[i++] = 0;
        if (i == n) break;
      }
    }
    const auto r = chromatic_number(g);
    EXPECT_TRUE(r.exact) << name;
    EXPECT_EQ(r.chromatic_number, brute) << name;
    EXPECT_TRUE(verify_coloring(g, r.coloring, r.chromatic_number)) << name;
  }
}

TEST(StronglyRegular, Examples) {
  EXPECT_EQ(strongly_regular_params(petersen()), (SrgParameters{10, 3, 0, 1}));
  EXPECT_EQ(strongly_regular_params(cycle_graph(5)), (SrgParameters{5, 2, 0, 1}));
  EXPECT_EQ(strongly_regular_params(complete_graph(4)), std::nullopt);
  EXPECT_EQ(strongly_regular_params(path_graph(4)), std::nullopt);
  for (int n = 3; n <= 7; ++n) EXPECT_EQ(strongly_regular_params(build(WeaveSpec::cycle(n))), std::nullopt);
}

TEST(DistanceRegular, Examples) {
  EXPECT_EQ(distance_regular_check(build(WeaveSpec::cycle(3))), std::nullopt);
  const auto p = distance_regular_check(petersen());
  ASSERT_TRUE(p);
  EXPECT_EQ(p->b, (std::vector<int>{3, 2}));
  EXPECT_EQ(p->c, (std::vector<int>{1, 1}));
  const auto k4 = distance_regular_check(complete_graph(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->b, std::vector<int>{3});
  EXPECT_EQ(k4->c, std::vector<int>{1});
  const auto cube = distance_regular_check(pweave::testing::cube_graph());
  ASSERT_TRUE(cube);
  EXPECT_EQ(cube->b, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(cube->c, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(distance_regular_check(path_graph(4)), std::nullopt);
}
