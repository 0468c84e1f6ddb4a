#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pweave/graph.hpp"

namespace pweave {

/// A bijection on 0..size-1 stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

using GroupOrder = boost::multiprecision::cpp_int;

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct AutReport {
  std::vector<Permutation> generators;
  GroupOrder group_order = 1;
  std::vector<std::vector<Vertex>> vertex_orbits;
  /// Dihedral of order |V| (for G_n: order 10n with a rotation of order 5n).
  bool is_dihedral_10n = false;
  /// Computed by enumerating the group; empty when the group is too large.
  std::optional<std::uint64_t> max_element_order;

  // Search bookkeeping.
  std::vector<Vertex> base;
  std::vector<std::uint64_t> basic_orbit_lengths;
  std::uint64_t nodes = 0;
};

/// True iff p preserves adjacency and non-adjacency. Throws
/// std::invalid_argument on a size mismatch.
bool is_automorphism(const UGraph& g, const Permutation& p);

/// Generators and exact order of Aut(g) by individualisation-refinement.
/// Throws SearchBudgetExceeded when the tree walk passes `node_budget`.
AutReport automorphism_group(const UGraph& g, const SearchOptions& opts = {});

/// Orbits of the group generated by `report.generators`, each sorted, listed
/// by smallest member.
std::vector<std::vector<Vertex>> orbits(const AutReport& report, int vertex_count);
std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> generators, int vertex_count);

/// All elements of the group generated by `generators`; nullopt once more
/// than `limit` elements turn up.
std::optional<std::vector<Permutation>> enumerate_group(std::span<const Permutation> generators,
                                                        int vertex_count, std::size_t limit);

/// Order 10n, an element of order 5n, and an involution inverting it.
bool dihedral_check(const AutReport& report, int n);

bool is_vertex_transitive(const UGraph& g, const SearchOptions& opts = {});
/// Vertex-transitivity of the line graph.
bool is_edge_transitive(const UGraph& g, const SearchOptions& opts = {});

/// A bijection p with g.adjacent(u,v) == h.adjacent(p(u),p(v)), if any.
std::optional<Permutation> are_isomorphic(const UGraph& g, const UGraph& h,
                                          const SearchOptions& opts = {});

bool is_isomorphism(const UGraph& g, const UGraph& h, const Permutation& p);

}  // namespace pweave
