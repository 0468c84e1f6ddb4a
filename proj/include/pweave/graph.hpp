#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pweave {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Position of a vertex inside the woven family: copy index in 1..n and the
/// Petersen vertex 0..9 it was cloned from.
struct VertexLabel {
  int copy = 0;
  int base = 0;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Immutable undirected simple graph with bit-packed adjacency rows.
///
/// Rows are stored as 64-bit words; `row(v)` exposes them so hot loops
/// (refinement, common-neighbour counts) can intersect rows with popcount.
class UGraph {
 public:
  UGraph() = default;

  /// Builds a graph from an edge list. Loops and duplicate edges are rejected
  /// with std::invalid_argument.
  static UGraph from_edges(int vertex_count, std::span<const Edge> edges,
                           std::vector<VertexLabel> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  int degree(Vertex v) const { return degrees_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool has_labels() const { return !labels_.empty(); }
  std::span<const VertexLabel> labels() const { return labels_; }

  /// Same adjacency relation on the same vertex ids. Labels are ignored.
  bool same_adjacency(const UGraph& other) const;

  /// The graph whose vertex p[v] is adjacent to p[u] iff v ~ u here.
  UGraph relabeled(std::span<const Vertex> p) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degrees_;
  std::vector<VertexLabel> labels_;
};

inline constexpr int kUnreachable = -1;

struct DistanceProfile {
  Vertex source = 0;
  std::vector<int> distances;  // kUnreachable for other components
};

DistanceProfile bfs_distances(const UGraph& g, Vertex source);

/// All-pairs BFS distance matrix, row-major, kUnreachable where disconnected.
std::vector<int> distance_matrix(const UGraph& g);

std::vector<int> degree_sequence(const UGraph& g);

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const UGraph& g);

/// Largest eccentricity; nullopt when disconnected. A single vertex has 0.
std::optional<int> diameter(const UGraph& g);

/// A pair realising the diameter (for witness checks); nullopt when
/// disconnected or empty.
std::optional<Edge> diameter_witness(const UGraph& g);

bool is_connected(const UGraph& g);
bool is_bipartite(const UGraph& g);
UGraph line_graph(const UGraph& g);

/// |N(u) ∩ N(v)| for each unordered pair, split by whether u ~ v.
struct CommonNeighborCounts {
  std::vector<int> adjacent;
  std::vector<int> non_adjacent;
};
CommonNeighborCounts common_neighbor_counts(const UGraph& g);

// Small named graphs used throughout tests and examples.
UGraph complete_graph(int n);
UGraph cycle_graph(int n);
UGraph path_graph(int n);
UGraph empty_graph(int n);

}  // namespace pweave
