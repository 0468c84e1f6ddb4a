#include "pweave/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace pweave {
namespace {

// Row-major square view with (i, j) indexing.
class Square {
 public:
  Square(std::vector<double>& data, int n) : data_(data), n_(n) {}
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  std::vector<double>& data_;
  int n_;
};

// Householder tridiagonalisation. On exit d holds the diagonal, e the
// sub-diagonal in e[1..n-1], and V the accumulated orthogonal transform.
void tridiagonalize(Square V, int n, std::vector<double>& d, std::vector<double>& e) {
  for (int j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate the transformations.
  for (int i = 0; i < n - 1; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (int k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e), rotating V alongside.
void ql_iterate(Square V, int n, std::vector<double>& d, std::vector<double>& e, int max_iterations) {
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n && std::abs(e[m]) > eps * tst1) ++m;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iterations) {
          throw ConvergenceError("QL iteration did not converge for eigenvalue " + std::to_string(l) +
                                 " within " + std::to_string(max_iterations) + " sweeps");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (int k = 0; k < n; ++k) {
            h = V(k, i + 1);
            V(k, i + 1) = s * V(k, i) + c * h;
            V(k, i) = c * V(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SymmetricEigen symmetric_eigen(std::span<const double> matrix, int n, int max_iterations) {
  if (n <= 0 || matrix.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("symmetric_eigen: matrix size does not match n");
  }
  std::vector<double> v(matrix.begin(), matrix.end());
  std::vector<double> d(n), e(n);
  if (n == 1) return {{v[0]}, {1.0}};
  tridiagonalize(Square(v, n), n, d, e);
  ql_iterate(Square(v, n), n, d, e, max_iterations);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    for (int r = 0; r < n; ++r) {
      out.vectors[static_cast<std::size_t>(r) * n + k] = v[static_cast<std::size_t>(r) * n + order[k]];
    }
  }
  return out;
}

double max_residual(std::span<const double> matrix, int n, const SymmetricEigen& eig) {
  double worst = 0.0;
  std::vector<double> col(n);
  for (int k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) {
      col[r] = eig.vectors[static_cast<std::size_t>(r) * n + k];
      norm2 += col[r] * col[r];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double res2 = 0.0;
    for (int r = 0; r < n; ++r) {
      double acc = -eig.values[k] * col[r];
      const double* row = matrix.data() + static_cast<std::size_t>(r) * n;
      for (int c = 0; c < n; ++c) acc += row[c] * col[c];
      res2 += acc * acc;
    }
    worst = std::max(worst, std::sqrt(res2) * inv);
  }
  return worst;
}

}  // namespace pweave
