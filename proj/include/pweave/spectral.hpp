#pragma once

#include <vector>

#include "pweave/graph.hpp"

namespace pweave {

inline constexpr double kDefaultTargetAccuracy = 1e-9;
inline constexpr double kDefaultEigTol = 1e-6;
inline constexpr double kDefaultClusterTol = 1e-6;

/// Adjacency spectrum, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
  double residual_bound = 0.0;  // worst ||A v - λ v|| over the computed pairs
  int graph_size = 0;
};

struct RamanujanVerdict {
  double lambda2_abs = 0.0;  // max |λ| over eigenvalues other than ±degree
  double bound = 0.0;        // 2 sqrt(degree - 1)
  bool is_ramanujan = false;
  double margin = 0.0;       // bound - lambda2_abs
};

struct CheegerBounds {
  double spectral_gap = 0.0;  // degree - λ2, λ2 the largest eigenvalue below degree
  double lower = 0.0;         // gap / 2
  double upper = 0.0;         // sqrt(2 · degree · gap)
};

/// Full adjacency spectrum via the dense symmetric solver. Throws
/// ConvergenceError when the solver stalls or the residual exceeds
/// `target_accuracy`.
Spectrum eigenvalues(const UGraph& g, double target_accuracy = kDefaultTargetAccuracy);

/// Largest eigenvalue strictly below `degree` (signed second eigenvalue).
/// Throws std::invalid_argument if the spectrum does not top out at degree.
double second_eigenvalue(const Spectrum& s, int degree, double eig_tol = kDefaultEigTol);

RamanujanVerdict ramanujan_verdict(const Spectrum& s, int degree, double eig_tol = kDefaultEigTol);

/// Number of clusters after greedy grouping of the sorted eigenvalues.
int distinct_count(const Spectrum& s, double cluster_tol = kDefaultClusterTol);

/// Tolerances 10^-1 .. 10^-13 at which distinct_count equals `expected`.
std::vector<double> tolerances_reproducing(const Spectrum& s, int expected);

/// Size of the cluster containing the top eigenvalue.
int top_multiplicity(const Spectrum& s, double cluster_tol = kDefaultClusterTol);

CheegerBounds cheeger_bounds(const Spectrum& s, int degree, double eig_tol = kDefaultEigTol);

struct ScanRow {
  int n = 0;
  double lambda2_abs = 0.0;
  double lambda2 = 0.0;
  CheegerBounds cheeger;
  bool ramanujan = false;
};

/// Builds G_n for n = 3..n_max and records the second eigenvalue data.
/// Rows are ordered by n; the work for different n runs concurrently.
std::vector<ScanRow> lambda2_scan(int n_max, double eig_tol = kDefaultEigTol,
                                  double target_accuracy = kDefaultTargetAccuracy);

}  // namespace pweave
