// Individualisation-refinement search shared by the automorphism group and
// isomorphism routines.
//
// The search walks a tree of ordered partitions. Each node is refined to the
// coarsest equitable partition; a child individualises one vertex of the
// target cell (the first smallest non-singleton cell). The leftmost path
// fixes a base b_0..b_{m-1} and a discrete leaf. A node elsewhere in the tree
// is worth expanding only if its refinement trace matches the first path at
// the same depth; at a matching leaf the position-wise map from the first
// leaf is a candidate isomorphism and is checked against the graph.
//
// Group order comes from orbit-stabiliser along the base: at depth k every
// vertex w of the target cell is either joined to b_k by generators already
// found, proven unreachable (no matching leaf under w), or yields a new
// generator fixing b_0..b_{k-1}.

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include "pweave/symmetry.hpp"

namespace pweave {
namespace {

class Partition {
 public:
  explicit Partition(int n)
      : elems_(n), pos_(n), start_of_(n, 0), end_at_(n, 0), cells_(n > 0 ? 1 : 0) {
    std::iota(elems_.begin(), elems_.end(), 0);
    std::iota(pos_.begin(), pos_.end(), 0);
    if (n > 0) end_at_[0] = n;
  }

  int size() const { return static_cast<int>(elems_.size()); }
  bool discrete() const { return cells_ == size(); }
  int cell_end(int start) const { return end_at_[start]; }
  std::span<const Vertex> cell(int start) const {
    return std::span<const Vertex>(elems_).subspan(start, end_at_[start] - start);
  }
  std::span<const Vertex> elements() const { return elems_; }

  int target_cell() const {
    int best = -1;
    int best_size = size() + 1;
    for (int c = 0; c < size(); c = end_at_[c]) {
      const int len = end_at_[c] - c;
      if (len > 1 && len < best_size) {
        best = c;
        best_size = len;
      }
    }
    return best;
  }

  // Moves v to the front of its cell and splits it off. Returns the start of
  // the new singleton cell.
  int individualize(Vertex v) {
    const int s = start_of_[v];
    const int e = end_at_[s];
    const int p = pos_[v];
    std::swap(elems_[s], elems_[p]);
    pos_[elems_[p]] = p;
    pos_[v] = s;
    end_at_[s] = s + 1;
    end_at_[s + 1] = e;
    for (int i = s + 1; i < e; ++i) start_of_[elems_[i]] = s + 1;
    ++cells_;
    return s;
  }

  // Reorders the cell starting at c by key and splits it into runs of equal
  // key. Returns the run starts in order.
  std::vector<int> split_by(int c, const std::vector<int>& key) {
    const int e = end_at_[c];
    std::sort(elems_.begin() + c, elems_.begin() + e,
              [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    std::vector<int> starts{c};
    for (int i = c + 1; i < e; ++i) {
      if (key[elems_[i]] != key[elems_[i - 1]]) starts.push_back(i);
    }
    for (std::size_t f = 0; f < starts.size(); ++f) {
      const int fs = starts[f];
      const int fe = f + 1 < starts.size() ? starts[f + 1] : e;
      end_at_[fs] = fe;
      for (int i = fs; i < fe; ++i) {
        pos_[elems_[i]] = i;
        start_of_[elems_[i]] = fs;
      }
    }
    cells_ += static_cast<int>(starts.size()) - 1;
    return starts;
  }

 private:
  std::vector<Vertex> elems_;
  std::vector<int> pos_;
  std::vector<int> start_of_;  // per vertex
  std::vector<int> end_at_;    // per cell start
  int cells_;
};

// Records a refinement trace, or compares against a recorded one.
class Trace {
 public:
  Trace() = default;
  explicit Trace(const std::vector<std::uint64_t>* reference) : ref_(reference) {}

  bool push(std::uint64_t hi, std::uint64_t lo) {
    const std::uint64_t x = (hi << 32) ^ lo;
    if (ref_ == nullptr) {
      data_.push_back(x);
    } else if (pos_ >= ref_->size() || (*ref_)[pos_++] != x) {
      ok_ = false;
    }
    return ok_;
  }
  bool complete() const { return ok_ && (ref_ == nullptr || pos_ == ref_->size()); }
  std::vector<std::uint64_t> release() { return std::move(data_); }

 private:
  const std::vector<std::uint64_t>* ref_ = nullptr;
  std::vector<std::uint64_t> data_;
  std::size_t pos_ = 0;
  bool ok_ = true;
};

constexpr std::uint64_t kTagSplitter = 1ULL << 31;
constexpr std::uint64_t kTagSplit = 1ULL << 30;

// Refines p to the coarsest equitable partition finer than it, starting from
// the given splitter cells. Returns false as soon as the trace diverges from
// its reference.
bool refine(const UGraph& g, Partition& p, std::vector<int> splitters, Trace& trace) {
  const int n = p.size();
  std::vector<char> queued(n, 0);
  std::deque<int> queue;
  for (int s : splitters) {
    queue.push_back(s);
    queued[s] = 1;
  }
  std::vector<std::uint64_t> mask(g.words_per_row());
  std::vector<int> count(n, 0);

  while (!queue.empty() && !p.discrete()) {
    const int s = queue.front();
    queue.pop_front();
    queued[s] = 0;
    std::fill(mask.begin(), mask.end(), 0);
    for (Vertex v : p.cell(s)) mask[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (!trace.push(kTagSplitter | static_cast<std::uint64_t>(s), p.cell_end(s) - s)) return false;

    for (int c = 0; c < n;) {
      const int e = p.cell_end(c);
      if (e - c > 1) {
        bool uniform = true;
        for (Vertex v : p.cell(c)) {
          const auto row = g.row(v);
          int k = 0;
          for (std::size_t w = 0; w < row.size(); ++w) k += std::popcount(row[w] & mask[w]);
          count[v] = k;
          uniform = uniform && k == count[p.cell(c)[0]];
        }
        if (!uniform) {
          const bool was_queued = queued[c] != 0;
          const auto starts = p.split_by(c, count);
          if (!trace.push(kTagSplit | static_cast<std::uint64_t>(c), starts.size())) return false;
          int largest = 0;
          for (std::size_t f = 0; f < starts.size(); ++f) {
            const int fs = starts[f];
            const int len = p.cell_end(fs) - fs;
            if (!trace.push(static_cast<std::uint64_t>(count[p.cell(fs)[0]]), len)) return false;
            if (len > p.cell_end(starts[largest]) - starts[largest]) largest = static_cast<int>(f);
          }
          for (std::size_t f = 0; f < starts.size(); ++f) {
            const int fs = starts[f];
            if (queued[fs]) continue;
            // A cell already pending covers the largest fragment implicitly;
            // otherwise the largest fragment can be skipped.
            if (!was_queued && static_cast<int>(f) == largest) continue;
            queue.push_back(fs);
            queued[fs] = 1;
          }
        }
      }
      c = e;
    }
  }
  return trace.complete();
}

struct Level {
  explicit Level(Partition p) : before(std::move(p)) {}
  Partition before;
  int target = -1;
  std::vector<Vertex> cell;  // target cell members, ascending
  Vertex chosen = -1;
  std::vector<std::uint64_t> trace_after;
};

class SearchTree {
 public:
  using LeafTest = std::function<bool(const Permutation&)>;

  SearchTree(const UGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  void build_first_path() {
    Partition p(g_.vertex_count());
    Trace t;
    tick();
    refine(g_, p, {0}, t);
    root_trace_ = t.release();
    while (!p.discrete()) {
      Level lvl(p);
      lvl.target = p.target_cell();
      const auto cell = p.cell(lvl.target);
      lvl.cell.assign(cell.begin(), cell.end());
      std::sort(lvl.cell.begin(), lvl.cell.end());
      lvl.chosen = lvl.cell.front();
      const int s = p.individualize(lvl.chosen);
      Trace tr;
      tick();
      refine(g_, p, {s}, tr);
      lvl.trace_after = tr.release();
      levels_.push_back(std::move(lvl));
    }
    const auto leaf = p.elements();
    first_leaf_.assign(leaf.begin(), leaf.end());
  }

  const std::vector<Level>& levels() const { return levels_; }
  std::uint64_t nodes() const { return nodes_; }

  // Searches the subtree under "individualise w at depth k" of g's own tree.
  std::optional<Permutation> search_child(std::size_t k, Vertex w, const LeafTest& accept) {
    Partition p = levels_[k].before;
    const int s = p.individualize(w);
    Trace tr(&levels_[k].trace_after);
    tick();
    if (!refine(g_, p, {s}, tr)) return std::nullopt;
    return dfs(g_, std::move(p), k + 1, accept);
  }

  // Searches the whole tree of another graph for a leaf matching the first path.
  std::optional<Permutation> search_host(const UGraph& host, const LeafTest& accept) {
    Partition p(host.vertex_count());
    Trace tr(&root_trace_);
    tick();
    if (!refine(host, p, {0}, tr)) return std::nullopt;
    return dfs(host, std::move(p), 0, accept);
  }

 private:
  void tick() {
    if (++nodes_ > budget_) {
      throw SearchBudgetExceeded("search tree exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  std::optional<Permutation> dfs(const UGraph& host, Partition p, std::size_t depth,
                                 const LeafTest& accept) {
    if (depth == levels_.size()) {
      std::vector<Vertex> images(first_leaf_.size());
      const auto leaf = p.elements();
      for (std::size_t i = 0; i < first_leaf_.size(); ++i) images[first_leaf_[i]] = leaf[i];
      Permutation candidate(std::move(images));
      if (accept(candidate)) return candidate;
      return std::nullopt;
    }
    const Level& lvl = levels_[depth];
    const auto cell = p.cell(lvl.target);
    std::vector<Vertex> choices(cell.begin(), cell.end());
    std::sort(choices.begin(), choices.end());
    for (Vertex x : choices) {
      Partition q = p;
      const int s = q.individualize(x);
      Trace tr(&lvl.trace_after);
      tick();
      if (!refine(host, q, {s}, tr)) continue;
      if (auto found = dfs(host, std::move(q), depth + 1, accept)) return found;
    }
    return std::nullopt;
  }

  const UGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> root_trace_;
  std::vector<Level> levels_;
  std::vector<Vertex> first_leaf_;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  bool same(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
};

constexpr std::uint64_t kEnumerationLimit = 1U << 18;

bool has_dihedral_structure(std::span<const Permutation> elements, std::uint64_t rotation_order) {
  const auto id = Permutation::identity(elements.front().size());
  for (const auto& r : elements) {
    if (r.order() != rotation_order) continue;
    const auto r_inv = r.inverse();
    for (const auto& s : elements) {
      if (s.is_identity() || !(s * s == id)) continue;
      if (s * r * s == r_inv) return true;
    }
  }
  return false;
}

}  // namespace

bool dihedral_check(const AutReport& report, int n) {
  const std::uint64_t order = 10ULL * static_cast<std::uint64_t>(n);
  if (n < 1 || report.group_order != order || report.generators.empty()) return false;
  const int size = report.generators.front().size();
  const auto elements = enumerate_group(report.generators, size, static_cast<std::size_t>(4 * order));
  if (!elements || elements->size() != order) return false;
  return has_dihedral_structure(*elements, order / 2);
}

AutReport automorphism_group(const UGraph& g, const SearchOptions& opts) {
  const int n = g.vertex_count();
  AutReport report;
  if (n == 0) return report;

  SearchTree tree(g, opts.node_budget);
  tree.build_first_path();
  const auto& levels = tree.levels();

  UnionFind uf(n);
  auto accept = [&](const Permutation& p) { return is_automorphism(g, p); };
  report.basic_orbit_lengths.assign(levels.size(), 1);

  for (std::size_t k = levels.size(); k-- > 0;) {
    const Level& lvl = levels[k];
    const Vertex b = lvl.chosen;
    std::vector<Vertex> refuted;
    for (Vertex w : lvl.cell) {
      if (w == b || uf.same(w, b)) continue;
      if (std::any_of(refuted.begin(), refuted.end(), [&](Vertex f) { return uf.same(w, f); })) continue;
      if (auto found = tree.search_child(k, w, accept)) {
        for (Vertex v = 0; v < n; ++v) uf.unite(v, (*found)(v));
        report.generators.push_back(std::move(*found));
      } else {
        refuted.push_back(w);
      }
    }
    report.basic_orbit_lengths[k] = static_cast<std::uint64_t>(
        std::count_if(lvl.cell.begin(), lvl.cell.end(), [&](Vertex v) { return uf.same(v, b); }));
  }

  for (const auto& lvl : levels) report.base.push_back(lvl.chosen);
  for (auto len : report.basic_orbit_lengths) report.group_order *= len;
  report.nodes = tree.nodes();
  report.vertex_orbits = orbits(report.generators, n);

  if (report.group_order <= kEnumerationLimit) {
    const auto order = static_cast<std::uint64_t>(report.group_order);
    std::vector<Permutation> gens = report.generators;
    if (gens.empty()) gens.push_back(Permutation::identity(n));
    if (auto elements = enumerate_group(gens, n, kEnumerationLimit)) {
      std::uint64_t best = 1;
      for (const auto& e : *elements) best = std::max(best, e.order());
      report.max_element_order = best;
      if (order == static_cast<std::uint64_t>(n) && order >= 6 && order % 2 == 0) {
        report.is_dihedral_10n = has_dihedral_structure(*elements, order / 2);
      }
    }
  }
  return report;
}

std::optional<Permutation> are_isomorphic(const UGraph& g, const UGraph& h, const SearchOptions& opts) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto dg = degree_sequence(g), dh = degree_sequence(h);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  if (g.vertex_count() == 0) return Permutation::identity(0);

  SearchTree tree(g, opts.node_budget);
  tree.build_first_path();
  return tree.search_host(h, [&](const Permutation& p) { return is_isomorphism(g, h, p); });
}

}  // namespace pweave
