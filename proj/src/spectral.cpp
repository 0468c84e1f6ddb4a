#include "pweave/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "pweave/eigensolver.hpp"
#include "pweave/weave.hpp"

namespace pweave {
namespace {

void require_regular_top(const Spectrum& s, int degree, double eig_tol) {
  if (s.eigenvalues.empty()) throw std::invalid_argument("empty spectrum");
  const double top = s.eigenvalues.front();
  if (std::abs(top - degree) > eig_tol) {
    throw std::invalid_argument(
        fmt::format("largest eigenvalue {:.9f} differs from degree {} (graph not connected "
                    "and regular?)",
                    top, degree));
  }
}

}  // namespace

Spectrum eigenvalues(const UGraph& g, double target_accuracy) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("spectrum of the empty graph");
  if (!(target_accuracy > 0)) throw std::invalid_argument("target accuracy must be positive");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = 1.0;
    a[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  const auto eig = symmetric_eigen(a, n);
  Spectrum s;
  s.graph_size = n;
  s.residual_bound = max_residual(a, n, eig);
  if (s.residual_bound > target_accuracy) {
    throw ConvergenceError(fmt::format("eigen residual {:.3e} exceeds target accuracy {:.3e}",
                                       s.residual_bound, target_accuracy));
  }
  s.eigenvalues.assign(eig.values.rbegin(), eig.values.rend());
  return s;
}

double second_eigenvalue(const Spectrum& s, int degree, double eig_tol) {
  require_regular_top(s, degree, eig_tol);
  for (double x : s.eigenvalues) {
    if (degree - x > eig_tol) return x;
  }
  throw std::invalid_argument("no eigenvalue below the degree");
}

RamanujanVerdict ramanujan_verdict(const Spectrum& s, int degree, double eig_tol) {
  require_regular_top(s, degree, eig_tol);
  RamanujanVerdict v;
  // For a connected regular graph, -degree is in the spectrum exactly when the
  // graph is bipartite, so both trivial eigenvalues are excluded by value.
  for (double x : s.eigenvalues) {
    if (std::abs(x - degree) <= eig_tol || std::abs(x + degree) <= eig_tol) continue;
    v.lambda2_abs = std::max(v.lambda2_abs, std::abs(x));
  }
  v.bound = 2.0 * std::sqrt(static_cast<double>(degree - 1));
  v.is_ramanujan = v.lambda2_abs <= v.bound;
  v.margin = v.bound - v.lambda2_abs;
  return v;
}

int distinct_count(const Spectrum& s, double cluster_tol) {
  if (!(cluster_tol > 0)) throw std::invalid_argument("cluster tolerance must be positive");
  if (s.eigenvalues.empty()) return 0;
  int clusters = 1;
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i - 1] - s.eigenvalues[i] > cluster_tol) ++clusters;
  }
  return clusters;
}

std::vector<double> tolerances_reproducing(const Spectrum& s, int expected) {
  std::vector<double> out;
  for (int k = 1; k <= 13; ++k) {
    const double tol = std::pow(10.0, -k);
    if (distinct_count(s, tol) == expected) out.push_back(tol);
  }
  return out;
}

int top_multiplicity(const Spectrum& s, double cluster_tol) {
  int count = s.eigenvalues.empty() ? 0 : 1;
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i - 1] - s.eigenvalues[i] > cluster_tol) break;
    ++count;
  }
  return count;
}

CheegerBounds cheeger_bounds(const Spectrum& s, int degree, double eig_tol) {
  const double lambda2 = second_eigenvalue(s, degree, eig_tol);
  CheegerBounds b;
  b.spectral_gap = degree - lambda2;
  b.lower = b.spectral_gap / 2.0;
  b.upper = std::sqrt(2.0 * degree * b.spectral_gap);
  return b;
}

std::vector<ScanRow> lambda2_scan(int n_max, double eig_tol, double target_accuracy) {
  if (n_max < 3) throw std::invalid_argument("n_max must be at least 3");
  auto one = [=](int n) {
    const auto spectrum = eigenvalues(build(WeaveSpec::cycle(n)), target_accuracy);
    const auto verdict = ramanujan_verdict(spectrum, 6, eig_tol);
    ScanRow row;
    row.n = n;
    row.lambda2_abs = verdict.lambda2_abs;
    row.lambda2 = second_eigenvalue(spectrum, 6, eig_tol);
    row.cheeger = cheeger_bounds(spectrum, 6, eig_tol);
    row.ramanujan = verdict.is_ramanujan;
    return row;
  };
  // Workers pull the next n from a shared counter; results land in their slot.
  const int count = n_max - 2;
  std::vector<ScanRow> rows(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < count; k = next++) rows[k] = one(k + 3);
  };
  const int threads = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, count);
  std::vector<std::future<void>> pool;
  for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return rows;
}

}  // namespace pweave
