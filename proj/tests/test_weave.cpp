#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pweave/weave.hpp"

using namespace pweave;

TEST(MetaGraph, ArcInvariants) {
  const auto out = MetaGraph::out_degrees();
  const auto in = MetaGraph::in_degrees();
  for (int v = 0; v < 10; ++v) EXPECT_EQ(out[v] + in[v], 3) << v;
  EXPECT_TRUE(MetaGraph::is_acyclic());
  EXPECT_EQ(in[0], 0);  // the unique source
  for (int v = 1; v < 10; ++v) EXPECT_GT(in[v], 0);
}

TEST(MetaGraph, UnderlyingGraphIsPetersen) {
  const UGraph p = petersen();
  EXPECT_EQ(p.vertex_count(), 10);
  EXPECT_EQ(p.edge_count(), 15);
  EXPECT_EQ(girth(p), 5);
  EXPECT_EQ(diameter(p), 2);
  for (const auto& [u, v] : MetaGraph::kArcs) EXPECT_TRUE(p.adjacent(u, v));
}

TEST(WeaveSpec, ParsesCycleNotation) {
  EXPECT_TRUE(WeaveSpec::parse(3, "(1 2 3)").is_standard_cycle());
  EXPECT_TRUE(WeaveSpec::cycle(2).is_standard_cycle());
  const auto s = WeaveSpec::parse(5, "(1 2)(3 4 5)");
  EXPECT_EQ(std::vector<int>(s.images().begin(), s.images().end()), (std::vector<int>{2, 1, 4, 5, 3}));
  EXPECT_FALSE(s.is_standard_cycle());
  EXPECT_THROW(WeaveSpec::parse(3, "(1 4)"), std::invalid_argument);
  EXPECT_THROW(WeaveSpec::parse(3, "(1 2)(2 3)"), std::invalid_argument);
  EXPECT_THROW(WeaveSpec::parse(3, "(1 2"), std::invalid_argument);
  EXPECT_THROW(WeaveSpec::parse(3, "1 2"), std::invalid_argument);
  EXPECT_THROW(WeaveSpec::with_sigma({1, 1, 2}), std::invalid_argument);
}

TEST(Build, Counts) {
  for (int n = 3; n <= 12; ++n) {
    const UGraph g = build(WeaveSpec::cycle(n));
    EXPECT_EQ(g.vertex_count(), 10 * n);
    EXPECT_EQ(g.edge_count(), 30 * n);
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), 6);
  }
  const UGraph g2 = build(WeaveSpec::parse(2, "(1 2)"));
  EXPECT_EQ(g2.vertex_count(), 20);
  EXPECT_EQ(g2.edge_count(), 60);
}

TEST(Build, Rejects) {
  EXPECT_THROW(build(WeaveSpec::cycle(1)), std::invalid_argument);
  EXPECT_THROW(build(WeaveSpec::parse(3, "(1 2)")), std::invalid_argument);  // fixes copy 3
}

TEST(Build, LabelsMatchVertexIds) {
  const UGraph g = build(WeaveSpec::cycle(4));
  ASSERT_TRUE(g.has_labels());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto l = g.labels()[v];
    EXPECT_EQ(weave_vertex(l.copy, l.base), v);
  }
}

TEST(Build, ThreeInternalThreeCrossNeighbours) {
  for (int n = 2; n <= 8; ++n) {
    const UGraph g = build(WeaveSpec::cycle(n));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int same = 0, cross = 0;
      for (Vertex w : g.neighbors(v)) (g.labels()[w].copy == g.labels()[v].copy ? same : cross)++;
      EXPECT_EQ(same, 3);
      EXPECT_EQ(cross, 3);
    }
  }
}

// The square (i,u),(σ(i),v),(σ(i),u),(i,v) needs the reverse arc v→u, which
// an acyclic orientation never has, so it only closes when σ(σ(i)) = i. A
// square that does exist for every n: consecutive arcs u→v→w give
// (i,u)–(σ(i),v)–(σ(i),w)–(i,v)–(i,u).
TEST(Build, ArcFourCycles) {
  for (int n = 3; n <= 7; ++n) {
    const auto spec = WeaveSpec::cycle(n);
    const UGraph g = build(spec);
    int squares = 0;
    for (int i = 1; i <= n; ++i) {
      const int j = spec.sigma(i);
      for (const auto& [u, v] : MetaGraph::kArcs) {
        EXPECT_FALSE(g.adjacent(weave_vertex(j, u), weave_vertex(i, v)));
        for (const auto& [v2, w] : MetaGraph::kArcs) {
          if (v2 != v) continue;
          const Vertex a = weave_vertex(i, u), b = weave_vertex(j, v), c = weave_vertex(j, w),
                       d = weave_vertex(i, v);
          EXPECT_TRUE(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a));
          ++squares;
        }
      }
    }
    EXPECT_GT(squares, 0);
    EXPECT_EQ(girth(g), 4);
  }
  // With two copies σ is an involution and the square closes.
  const UGraph g2 = build(WeaveSpec::parse(2, "(1 2)"));
  for (const auto& [u, v] : MetaGraph::kArcs) EXPECT_TRUE(g2.adjacent(weave_vertex(2, u), weave_vertex(1, v)));
}

namespace {

int floyd_warshall_diameter(const UGraph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<int> d(n * n, inf);
  for (int v = 0; v < n; ++v) d[v * n + v] = 0;
  for (const auto& [u, v] : g.edges()) d[u * n + v] = d[v * n + u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

// The closed form floor(n/2)+2 is exact for n = 3..8 and then undershoots:
// n = 9 already needs 7 steps.
TEST(Build, DiameterClosedForm) {
  EXPECT_EQ(expected_diameter(3), 3);
  EXPECT_EQ(expected_diameter(5), 4);
  EXPECT_EQ(expected_diameter(7), 5);
  EXPECT_THROW(expected_diameter(2), std::invalid_argument);
  const std::vector<int> measured{3, 4, 4, 5, 5, 6, 7, 7, 8, 9};  // n = 3..12
  for (int n = 3; n <= 12; ++n) {
    const UGraph g = build(WeaveSpec::cycle(n));
    const int d = floyd_warshall_diameter(g);
    EXPECT_EQ(diameter(g), d) << n;
    EXPECT_EQ(d, measured[n - 3]) << n;
    EXPECT_EQ(d == expected_diameter(n), n <= 8 || n == 10) << n;
  }
}

TEST(Decomposition, HoldsForCycles) {
  for (int n = 3; n <= 7; ++n) {
    const auto d = decomposition_check(WeaveSpec::cycle(n));
    EXPECT_TRUE(d.holds()) << n;
    EXPECT_EQ(d.internal.size(), 15u * n);
    EXPECT_EQ(d.cross.size(), 15u * n);
  }
  EXPECT_THROW(decomposition_check(WeaveSpec::parse(4, "(1 2)(3 4)")), std::invalid_argument);
}
