#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace pweave {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigen-decomposition of a dense real symmetric matrix.
struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k (row-major n×n) pairs with values[k]
};

/// Householder reduction to tridiagonal form followed by implicit-shift QL.
/// `matrix` is row-major n×n and must be symmetric. Throws ConvergenceError
/// if some eigenvalue needs more than `max_iterations` QL sweeps.
SymmetricEigen symmetric_eigen(std::span<const double> matrix, int n, int max_iterations = 60);

/// max_k ||A v_k - λ_k v_k||_2 for the decomposition above.
double max_residual(std::span<const double> matrix, int n, const SymmetricEigen& eig);

}  // namespace pweave
