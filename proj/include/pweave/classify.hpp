#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pweave/graph.hpp"

namespace pweave {

enum class HamiltonStatus { kYes, kNo, kTimeout };

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::kTimeout;
  std::vector<Vertex> cycle;  // set only for kYes; closing edge back to cycle[0] implied
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultHamiltonBudget = 100'000'000;

/// Exact backtracking search for a Hamiltonian cycle. The path grows from
/// vertex 0, trying the neighbours with the fewest unvisited neighbours first,
/// and is cut whenever some unvisited vertex can no longer be passed through
/// or the unvisited part falls apart.
HamiltonResult hamiltonian_cycle(const UGraph& g, std::uint64_t node_budget = kDefaultHamiltonBudget);

/// True iff `cycle` visits every vertex exactly once along edges of g and
/// closes back to its start.
bool verify_hamiltonian_cycle(const UGraph& g, const std::vector<Vertex>& cycle);

struct ColoringResult {
  int chromatic_number = 0;  // exact when `exact`, otherwise an upper bound
  int lower_bound = 0;
  bool exact = false;
  std::vector<int> coloring;  // colours 0..chromatic_number-1
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultColoringBudget = 50'000'000;

/// Exact chromatic number by testing k = 1, 2, ... with DSATUR-ordered
/// backtracking. If the budget runs out the result carries the best bounds.
ColoringResult chromatic_number(const UGraph& g, std::uint64_t node_budget = kDefaultColoringBudget);

/// Proper colouring using exactly `colors` distinct colours.
bool verify_coloring(const UGraph& g, const std::vector<int>& coloring, int colors);

struct SrgParameters {
  int v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

std::optional<SrgParameters> strongly_regular_params(const UGraph& g);

/// Intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d}, plus the a_i.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;
  std::vector<int> a;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Returns the intersection array when every pair at distance k sees the
/// same (c_k, a_k, b_k); empty otherwise or when g is disconnected.
std::optional<IntersectionArray> distance_regular_check(const UGraph& g);

}  // namespace pweave
