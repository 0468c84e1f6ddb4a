#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pweave/graph.hpp"

namespace pweave::testing {

struct BruteForceGroup {
  std::uint64_t order = 0;
  std::vector<std::vector<Vertex>> orbits;  // sorted, by smallest member
};

/// Every permutation of the vertex set, checked against the definition.
/// Only sensible up to about 9 vertices.
inline BruteForceGroup brute_force_automorphisms(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  BruteForceGroup out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    if (!ok) continue;
    ++out.order;
    for (int v = 0; v < n; ++v) root[v] = std::min(root[v], p[v]);
  } while (std::next_permutation(p.begin(), p.end()));
  // root[v] is now the smallest image of v, i.e. the least member of its orbit.
  std::vector<std::vector<Vertex>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[root[v]].push_back(v);
  for (auto& o : by_root)
    if (!o.empty()) out.orbits.push_back(o);
  return out;
}

}  // namespace pweave::testing
