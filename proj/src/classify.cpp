#include "pweave/classify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pweave {
namespace {

class BudgetHit {};

class HamiltonSearch {
 public:
  HamiltonSearch(const UGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), visited_(g.vertex_count(), false), free_degree_(degree_sequence(g)) {
    adjacency_.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) adjacency_.push_back(g.neighbors(v));
  }

  bool run() {
    visit(0);
    return extend();
  }

  const std::vector<Vertex>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit(Vertex v) {
    visited_[v] = true;
    path_.push_back(v);
    for (Vertex w : adjacency_[v]) --free_degree_[w];
  }

  void unvisit(Vertex v) {
    visited_[v] = false;
    path_.pop_back();
    for (Vertex w : adjacency_[v]) ++free_degree_[w];
  }

  // Every unvisited vertex still needs two usable neighbours: unvisited ones,
  // the current end, or the start (to close the cycle).
  bool feasible() const {
    const Vertex start = path_.front();
    const Vertex end = path_.back();
    const int n = g_.vertex_count();
    int remaining = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (visited_[u]) continue;
      ++remaining;
      int usable = free_degree_[u];
      if (g_.adjacent(u, end)) ++usable;
      if (end != start && g_.adjacent(u, start)) ++usable;
      if (usable < 2) return false;
    }
    if (remaining == 0) return true;
    // The unvisited vertices must form one connected piece reachable from end.
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    for (Vertex w : adjacency_[end]) {
      if (!visited_[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
        break;
      }
    }
    if (stack.empty()) return false;
    int reached = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex w : adjacency_[u]) {
        if (!visited_[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return reached == remaining;
  }

  bool extend() {
    if (++nodes_ > budget_) throw BudgetHit{};
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == g_.vertex_count()) return g_.adjacent(end, path_.front());
    if (!feasible()) return false;

    std::vector<Vertex> next;
    for (Vertex w : adjacency_[end]) {
      if (!visited_[w]) next.push_back(w);
    }
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return free_degree_[a] != free_degree_[b] ? free_degree_[a] < free_degree_[b] : a < b;
    });
    for (Vertex w : next) {
      visit(w);
      if (extend()) return true;
      unvisit(w);
    }
    return false;
  }

  const UGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<bool> visited_;
  std::vector<int> free_degree_;  // unvisited neighbours per vertex
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Vertex> path_;
};

// k-colourability by DSATUR backtracking. New colours are opened in order,
// which removes the k! relabelings of any colouring.
class ColoringSearch {
 public:
  ColoringSearch(const UGraph& g, int k, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g),
        k_(k),
        nodes_(nodes),
        budget_(budget),
        color_(g.vertex_count(), -1),
        seen_(static_cast<std::size_t>(g.vertex_count()) * k, 0),
        saturation_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) adjacency_.push_back(g.neighbors(v));
  }

  bool run() { return assign(0, 0); }
  const std::vector<int>& coloring() const { return color_; }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * k_ + c]; }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (color_[v] != -1) continue;
      if (best == -1 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void set(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : adjacency_[v]) {
      if (seen(w, c)++ == 0) ++saturation_[w];
    }
  }

  void clear(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : adjacency_[v]) {
      if (--seen(w, c) == 0) --saturation_[w];
    }
  }

  bool assign(int colored, int used) {
    if (++nodes_ > budget_) throw BudgetHit{};
    if (colored == g_.vertex_count()) return true;
    const Vertex v = pick();
    if (saturation_[v] >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen(v, c) != 0) continue;
      set(v, c);
      if (assign(colored + 1, std::max(used, c + 1))) return true;
      clear(v);
    }
    return false;
  }

  const UGraph& g_;
  int k_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<int> color_;
  std::vector<int> seen_;  // neighbour colour counts, n × k
  std::vector<int> saturation_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Greedy DSATUR without backtracking; gives the starting upper bound.
std::vector<int> greedy_dsatur(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::vector<bool>> blocked(n);
  std::vector<int> saturation(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (color[u] != -1) continue;
      if (v == -1 || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] && g.degree(u) > g.degree(v))) {
        v = u;
      }
    }
    int c = 0;
    while (c < static_cast<int>(blocked[v].size()) && blocked[v][c]) ++c;
    color[v] = c;
    for (Vertex w : g.neighbors(v)) {
      if (static_cast<int>(blocked[w].size()) <= c) blocked[w].resize(c + 1, false);
      if (!blocked[w][c]) {
        blocked[w][c] = true;
        ++saturation[w];
      }
    }
  }
  return color;
}

}  // namespace

HamiltonResult hamiltonian_cycle(const UGraph& g, std::uint64_t node_budget) {
  HamiltonResult result;
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) {
    result.status = HamiltonStatus::kNo;
    return result;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) {
      result.status = HamiltonStatus::kNo;
      return result;
    }
  }
  HamiltonSearch search(g, node_budget);
  try {
    if (search.run()) {
      result.status = HamiltonStatus::kYes;
      result.cycle = search.path();
    } else {
      result.status = HamiltonStatus::kNo;
    }
  } catch (const BudgetHit&) {
    result.status = HamiltonStatus::kTimeout;
  }
  result.nodes = search.nodes();
  return result;
}

bool verify_hamiltonian_cycle(const UGraph& g, const std::vector<Vertex>& cycle) {
  const int n = g.vertex_count();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : cycle) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

ColoringResult chromatic_number(const UGraph& g, std::uint64_t node_budget) {
  ColoringResult result;
  const int n = g.vertex_count();
  if (n == 0) {
    result.exact = true;
    return result;
  }
  result.coloring = greedy_dsatur(g);
  result.chromatic_number = *std::max_element(result.coloring.begin(), result.coloring.end()) + 1;
  result.lower_bound = g.edge_count() == 0 ? 1 : (is_bipartite(g) ? 2 : 3);

  // Try to beat the greedy bound one colour at a time from below.
  try {
    for (int k = result.lower_bound; k < result.chromatic_number; ++k) {
      ColoringSearch search(g, k, result.nodes, node_budget);
      if (search.run()) {
        result.chromatic_number = k;
        result.coloring = search.coloring();
        break;
      }
      result.lower_bound = k + 1;
    }
  } catch (const BudgetHit&) {
    return result;
  }
  result.lower_bound = result.chromatic_number;
  result.exact = true;
  return result;
}

bool verify_coloring(const UGraph& g, const std::vector<int>& coloring, int colors) {
  if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
  std::vector<bool> used(colors, false);
  for (int c : coloring) {
    if (c < 0 || c >= colors) return false;
    used[c] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

std::optional<SrgParameters> strongly_regular_params(const UGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  const auto counts = common_neighbor_counts(g);
  // Complete and edgeless graphs are excluded: one of λ, μ is undefined.
  if (counts.adjacent.empty() || counts.non_adjacent.empty()) return std::nullopt;
  auto single = [](const std::vector<int>& xs) {
    return std::all_of(xs.begin(), xs.end(), [&](int x) { return x == xs.front(); });
  };
  if (!single(counts.adjacent) || !single(counts.non_adjacent)) return std::nullopt;
  return SrgParameters{n, k, counts.adjacent.front(), counts.non_adjacent.front()};
}

std::optional<IntersectionArray> distance_regular_check(const UGraph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g)) return std::nullopt;
  const auto dist = distance_matrix(g);
  auto d = [&](Vertex x, Vertex y) { return dist[static_cast<std::size_t>(x) * n + y]; };
  const int diam = *std::max_element(dist.begin(), dist.end());

  // (c_k, a_k, b_k) per distance k, -1 until first seen.
  std::vector<std::array<int, 3>> numbers(diam + 1, {-1, -1, -1});
  std::vector<std::vector<Vertex>> adjacency;
  for (Vertex v = 0; v < n; ++v) adjacency.push_back(g.neighbors(v));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int k = d(u, v);
      std::array<int, 3> here{0, 0, 0};
      for (Vertex w : adjacency[u]) {
        const int dw = d(w, v);
        if (dw == k - 1) ++here[0];
        else if (dw == k) ++here[1];
        else ++here[2];
      }
      if (numbers[k][0] == -1) numbers[k] = here;
      else if (numbers[k] != here) return std::nullopt;
    }
  }
  IntersectionArray out;
  for (int k = 0; k <= diam; ++k) {
    if (k < diam) out.b.push_back(numbers[k][2]);
    if (k > 0) out.c.push_back(numbers[k][0]);
    out.a.push_back(numbers[k][1]);
  }
  return out;
}

}  // namespace pweave
