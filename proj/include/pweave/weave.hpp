#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "pweave/graph.hpp"

namespace pweave {

/// The fixed acyclic orientation of the Petersen graph that decides which
/// direction each cross edge runs between neighbouring copies.
struct MetaGraph {
  static constexpr int kVertices = 10;
  static constexpr std::array<Edge, 15> kArcs{{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6},
                                               {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                                               {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}}};

  static std::array<int, kVertices> out_degrees();
  static std::array<int, kVertices> in_degrees();
  static bool is_acyclic();
};

/// Construction parameters: n copies, with copy i wired to copy sigma(i).
/// Copies are numbered 1..n; `sigma[i-1]` is the image of i.
class WeaveSpec {
 public:
  /// The standard n-cycle (1 2 ... n).
  static WeaveSpec cycle(int n);
  /// Any permutation of 1..n given as its image list. Throws
  /// std::invalid_argument unless it is a bijection.
  static WeaveSpec with_sigma(std::vector<int> images);
  /// Parses cycle notation such as "(1 2)(3 4 5)" over 1..n; unmentioned
  /// points are fixed.
  static WeaveSpec parse(int n, std::string_view cycles);

  int copies() const { return static_cast<int>(sigma_.size()); }
  int sigma(int copy) const { return sigma_[copy - 1]; }
  std::span<const int> images() const { return sigma_; }
  bool is_standard_cycle() const;

 private:
  explicit WeaveSpec(std::vector<int> images) : sigma_(std::move(images)) {}
  std::vector<int> sigma_;
};

/// Vertex id of (copy, base) in a woven graph: copy blocks are contiguous.
constexpr Vertex weave_vertex(int copy, int base) { return (copy - 1) * 10 + base; }

UGraph petersen();

/// Builds the woven graph on 10n labelled vertices. Rejects n < 2.
UGraph build(const WeaveSpec& spec);

/// Edge sets of the two factors of the product decomposition, built
/// independently of `build`.
struct Decomposition {
  std::vector<Edge> internal;  // Petersen copies (Cartesian part)
  std::vector<Edge> cross;     // underlying graph of the directed tensor part
  bool disjoint = false;
  bool union_matches = false;
  bool holds() const { return disjoint && union_matches; }
};

/// Checks that build(spec) is the edge-disjoint union of the Cartesian
/// product of Petersen with the edgeless graph and the undirected tensor
/// product of the meta-graph with the directed n-cycle. Cycle specs only.
Decomposition decomposition_check(const WeaveSpec& spec);

/// Closed-form diameter floor(n/2)+2 claimed for the family (n >= 3).
int expected_diameter(int n);

}  // namespace pweave
