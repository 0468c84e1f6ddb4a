#include "pweave/weave.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>

namespace pweave {

std::array<int, MetaGraph::kVertices> MetaGraph::out_degrees() {
  std::array<int, kVertices> out{};
  for (const auto& [u, v] : kArcs) ++out[u];
  return out;
}

std::array<int, MetaGraph::kVertices> MetaGraph::in_degrees() {
  std::array<int, kVertices> in{};
  for (const auto& [u, v] : kArcs) ++in[v];
  return in;
}

bool MetaGraph::is_acyclic() {
  // Kahn's algorithm: every vertex must eventually reach in-degree zero.
  auto in = in_degrees();
  std::vector<int> ready;
  for (int v = 0; v < kVertices; ++v)
    if (in[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int u = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& [a, b] : kArcs) {
      if (a == u && --in[b] == 0) ready.push_back(b);
    }
  }
  return removed == kVertices;
}

WeaveSpec WeaveSpec::cycle(int n) {
  if (n < 1) throw std::invalid_argument("copy count must be positive");
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i % n + 1;
  return WeaveSpec(std::move(images));
}

WeaveSpec WeaveSpec::with_sigma(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : images) {
    if (x < 1 || x > n || seen[x]) {
      throw std::invalid_argument("sigma is not a permutation of 1.." + std::to_string(n));
    }
    seen[x] = true;
  }
  return WeaveSpec(std::move(images));
}

WeaveSpec WeaveSpec::parse(int n, std::string_view text) {
  if (n < 1) throw std::invalid_argument("copy count must be positive");
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = i;
  std::vector<bool> mentioned(n + 1, false);

  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid sigma \"" + std::string(text) + "\": " + why);
  };
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> cyc;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("expected a copy number");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > n) fail("copy " + std::to_string(value) + " out of 1.." + std::to_string(n));
      if (mentioned[value]) fail("copy " + std::to_string(value) + " appears twice");
      mentioned[value] = true;
      cyc.push_back(value);
      skip_space();
    }
    if (pos >= text.size()) fail("unterminated cycle");
    ++pos;
    for (std::size_t k = 0; k < cyc.size(); ++k) images[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_space();
  }
  return WeaveSpec(std::move(images));
}

bool WeaveSpec::is_standard_cycle() const {
  const int n = copies();
  for (int i = 1; i <= n; ++i)
    if (sigma(i) != i % n + 1) return false;
  return true;
}

UGraph petersen() {
  return UGraph::from_edges(MetaGraph::kVertices,
                            std::span<const Edge>(MetaGraph::kArcs.data(), MetaGraph::kArcs.size()));
}

UGraph build(const WeaveSpec& spec) {
  const int n = spec.copies();
  if (n < 2) throw std::invalid_argument("weave needs at least 2 copies, got " + std::to_string(n));
  for (int i = 1; i <= n; ++i) {
    if (spec.sigma(i) == i) {
      throw std::invalid_argument("sigma fixes copy " + std::to_string(i) +
                                  ", which would double its internal edges");
    }
  }
  std::vector<Edge> es;
  es.reserve(30 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (const auto& [u, v] : MetaGraph::kArcs) es.emplace_back(weave_vertex(i, u), weave_vertex(i, v));
  }
  for (int i = 1; i <= n; ++i) {
    for (const auto& [u, v] : MetaGraph::kArcs) {
      es.emplace_back(weave_vertex(i, u), weave_vertex(spec.sigma(i), v));
    }
  }
  std::vector<VertexLabel> labels;
  labels.reserve(10 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int x = 0; x < 10; ++x) labels.push_back({i, x});
  // from_edges rejects duplicates, so a colliding cross edge cannot slip in.
  return UGraph::from_edges(10 * n, es, std::move(labels));
}

Decomposition decomposition_check(const WeaveSpec& spec) {
  if (!spec.is_standard_cycle()) {
    throw std::invalid_argument("decomposition is only defined for the n-cycle wiring");
  }
  const int n = spec.copies();
  const std::set<Edge> petersen_edges(MetaGraph::kArcs.begin(), MetaGraph::kArcs.end());
  auto undirected_p = [&](int u, int v) {
    return petersen_edges.contains({u, v}) || petersen_edges.contains({v, u});
  };
  auto arc_p = [&](int u, int v) { return petersen_edges.contains({u, v}); };
  auto arc_c = [&](int i, int j) { return j == i % n + 1; };

  // Product vertices are (x, i); enumerate every unordered pair once.
  Decomposition d;
  std::set<Edge> internal, cross;
  for (int i = 1; i <= n; ++i) {
    for (int x = 0; x < 10; ++x) {
      for (int j = 1; j <= n; ++j) {
        for (int y = 0; y < 10; ++y) {
          const Vertex a = weave_vertex(i, x), b = weave_vertex(j, y);
          if (a >= b) continue;
          // P □ K̄_n: the edgeless factor contributes nothing, so only x~y, i=j.
          if (i == j && undirected_p(x, y)) internal.insert({a, b});
          // U(P⃗ ⊗ C⃗_n): an arc in either direction.
          if ((arc_p(x, y) && arc_c(i, j)) || (arc_p(y, x) && arc_c(j, i))) cross.insert({a, b});
        }
      }
    }
  }
  d.internal.assign(internal.begin(), internal.end());
  d.cross.assign(cross.begin(), cross.end());
  d.disjoint = std::none_of(d.internal.begin(), d.internal.end(),
                            [&](const Edge& e) { return cross.contains(e); });

  std::set<Edge> combined = internal;
  combined.insert(cross.begin(), cross.end());
  const auto built = build(spec).edges();
  d.union_matches = std::set<Edge>(built.begin(), built.end()) == combined;
  return d;
}

int expected_diameter(int n) {
  if (n < 3) throw std::invalid_argument("closed-form diameter is stated for n >= 3");
  return n / 2 + 2;
}

}  // namespace pweave
