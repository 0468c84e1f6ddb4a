#include "pweave/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pweave {

UGraph UGraph::from_edges(int vertex_count, std::span<const Edge> edges,
                          std::vector<VertexLabel> labels) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  UGraph g;
  g.n_ = vertex_count;
  g.words_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
  g.rows_.assign(g.words_ * static_cast<std::size_t>(vertex_count), 0);
  g.degrees_.assign(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    }
    g.rows_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.rows_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++g.degrees_[u];
    ++g.degrees_[v];
    ++g.m_;
  }
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Vertex> UGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degrees_[v]);
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> UGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool UGraph::same_adjacency(const UGraph& other) const {
  return n_ == other.n_ && rows_ == other.rows_;
}

UGraph UGraph::relabeled(std::span<const Vertex> p) const {
  if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> mapped;
  mapped.reserve(m_);
  for (const auto& [u, v] : edges()) mapped.emplace_back(p[u], p[v]);
  return from_edges(n_, mapped);
}

DistanceProfile bfs_distances(const UGraph& g, Vertex source) {
  DistanceProfile prof{source, std::vector<int>(g.vertex_count(), kUnreachable)};
  std::vector<Vertex> queue{source};
  prof.distances[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (prof.distances[w] == kUnreachable) {
        prof.distances[w] = prof.distances[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return prof;
}

std::vector<int> distance_matrix(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto prof = bfs_distances(g, s);
    std::copy(prof.distances.begin(), prof.distances.end(),
              dist.begin() + static_cast<std::ptrdiff_t>(s) * n);
  }
  return dist;
}

std::vector<int> degree_sequence(const UGraph& g) {
  std::vector<int> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

std::optional<int> girth(const UGraph& g) {
  const int n = g.vertex_count();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.assign(1, root);
    dist[root] = 0;
    parent[root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Any cycle closed from here on is at least 2*dist[u] long.
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::optional<Edge> diameter_witness(const UGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  Edge best{0, 0};
  int best_dist = 0;
  for (Vertex s = 0; s < n; ++s) {
    const auto prof = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) {
      if (prof.distances[t] == kUnreachable) return std::nullopt;
      if (prof.distances[t] > best_dist) {
        best_dist = prof.distances[t];
        best = {s, t};
      }
    }
  }
  return best;
}

std::optional<int> diameter(const UGraph& g) {
  const auto w = diameter_witness(g);
  if (!w) return std::nullopt;
  return bfs_distances(g, w->first).distances[w->second];
}

bool is_connected(const UGraph& g) {
  if (g.vertex_count() == 0) return false;
  const auto prof = bfs_distances(g, 0);
  return std::none_of(prof.distances.begin(), prof.distances.end(),
                      [](int d) { return d == kUnreachable; });
}

bool is_bipartite(const UGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

UGraph line_graph(const UGraph& g) {
  const auto es = g.edges();
  // incident[v] lists the indices of the edges touching v.
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    incident[es[i].first].push_back(i);
    incident[es[i].second].push_back(i);
  }
  std::vector<Edge> line_edges;
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) line_edges.emplace_back(inc[a], inc[b]);
    }
  }
  return UGraph::from_edges(static_cast<int>(es.size()), line_edges);
}

CommonNeighborCounts common_neighbor_counts(const UGraph& g) {
  CommonNeighborCounts out;
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    const auto ru = g.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto rv = g.row(v);
      int common = 0;
      for (std::size_t w = 0; w < ru.size(); ++w) common += std::popcount(ru[w] & rv[w]);
      (g.adjacent(u, v) ? out.adjacent : out.non_adjacent).push_back(common);
    }
  }
  return out;
}

UGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return UGraph::from_edges(n, es);
}

UGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
  return UGraph::from_edges(n, es);
}

UGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
  return UGraph::from_edges(n, es);
}

UGraph empty_graph(int n) { return UGraph::from_edges(n, std::span<const Edge>{}); }

}  // namespace pweave
