#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "pweave/symmetry.hpp"

namespace pweave {

bool is_automorphism(const UGraph& g, const Permutation& p) { return is_isomorphism(g, g, p); }

bool is_isomorphism(const UGraph& g, const UGraph& h, const Permutation& p) {
  if (p.size() != g.vertex_count() || p.size() != h.vertex_count()) {
    throw std::invalid_argument("permutation size does not match the graph");
  }
  if (g.edge_count() != h.edge_count()) return false;
  // Edge counts agree, so mapping every edge onto an edge is a bijection on
  // edges and non-edges are preserved too.
  for (const auto& [u, v] : g.edges()) {
    if (!h.adjacent(p(u), p(v))) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> generators, int vertex_count) {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : generators) {
    for (Vertex v = 0; v < vertex_count; ++v) {
      const int a = find(v), b = find(gen(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<Vertex>> by_root;
  for (Vertex v = 0; v < vertex_count; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> orbits(const AutReport& report, int vertex_count) {
  return orbits(report.generators, vertex_count);
}

std::optional<std::vector<Permutation>> enumerate_group(std::span<const Permutation> generators,
                                                        int vertex_count, std::size_t limit) {
  using Key = std::vector<Vertex>;
  std::unordered_set<Key, boost::hash<Key>> seen;
  std::vector<Permutation> elements{Permutation::identity(vertex_count)};
  seen.insert(Key(elements.front().images().begin(), elements.front().images().end()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = gen * elements[i];
      Key key(next.images().begin(), next.images().end());
      if (seen.insert(std::move(key)).second) {
        if (elements.size() >= limit) return std::nullopt;
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

bool is_vertex_transitive(const UGraph& g, const SearchOptions& opts) {
  if (g.vertex_count() == 0) return true;
  return automorphism_group(g, opts).vertex_orbits.size() == 1;
}

bool is_edge_transitive(const UGraph& g, const SearchOptions& opts) {
  return is_vertex_transitive(line_graph(g), opts);
}

}  // namespace pweave
