#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "entrograph/error.hpp"
#include "entrograph/laplacian.hpp"

namespace entrograph {

/// Eigenpairs of a real symmetric matrix, eigenvalues ascending.
/// Row j of `vectors` is the unit eigenvector for values[j] (empty when not requested).
struct SymmetricEigen {
  std::vector<double> values;
  DenseMatrix vectors;
};

namespace detail {

// Householder reduction of a symmetric matrix to tridiagonal form followed by
// the implicit-shift QL iteration (EISPACK tred2/tql2 lineage). The working
// array is kept transposed, so `at(r, c)` addresses element (r, c) of the
// classic column-oriented formulation while every inner loop walks memory
// contiguously.
class TridiagonalQl {
 public:
  TridiagonalQl(DenseMatrix&& a, bool want_vectors)
      : n_(a.rows()), w_(std::move(a)), d_(n_, 0.0), e_(n_, 0.0), want_vectors_(want_vectors) {}

  SymmetricEigen run() {
    if (n_ == 0) return {};
    tridiagonalize();
    ql_iterate();
    return collect();
  }

 private:
  double& at(std::size_t r, std::size_t c) noexcept { return w_.row(c)[r]; }

  void tridiagonalize() {
    const std::size_t n = n_;
    for (std::size_t j = 0; j < n; ++j) d_[j] = at(n - 1, j);

    for (std::size_t i = n - 1; i > 0; --i) {
      double scale = 0.0;
      double h = 0.0;
      for (std::size_t k = 0; k < i; ++k) scale += std::abs(d_[k]);
      if (scale == 0.0) {
        e_[i] = d_[i - 1];
        for (std::size_t j = 0; j < i; ++j) {
          d_[j] = at(i - 1, j);
          at(i, j) = 0.0;
          at(j, i) = 0.0;
        }
      } else {
        for (std::size_t k = 0; k < i; ++k) {
          d_[k] /= scale;
          h += d_[k] * d_[k];
        }
        double f = d_[i - 1];
        double g = std::sqrt(h);
        if (f > 0) g = -g;
        e_[i] = scale * g;
        h -= f * g;
        d_[i - 1] = f - g;
        std::fill(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(i), 0.0);

        for (std::size_t j = 0; j < i; ++j) {
          f = d_[j];
          at(j, i) = f;
          const double* col = w_.row(j);  // col[k] == at(k, j)
          g = e_[j] + col[j] * f;
          for (std::size_t k = j + 1; k < i; ++k) {
            g += col[k] * d_[k];
            e_[k] += col[k] * f;
          }
          e_[j] = g;
        }
        f = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
          e_[j] /= h;
          f += e_[j] * d_[j];
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j < i; ++j) e_[j] -= hh * d_[j];
        for (std::size_t j = 0; j < i; ++j) {
          f = d_[j];
          g = e_[j];
          double* col = w_.row(j);
          for (std::size_t k = j; k < i; ++k) col[k] -= (f * e_[k] + g * d_[k]);
          d_[j] = at(i - 1, j);
          at(i, j) = 0.0;
        }
      }
      d_[i] = h;
    }

    if (!want_vectors_) {
      for (std::size_t j = 0; j < n; ++j) d_[j] = at(j, j);
      e_[0] = 0.0;
      return;
    }

    // Accumulate transformations.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      at(n - 1, i) = at(i, i);
      at(i, i) = 1.0;
      const double h = d_[i + 1];
      const double* next = w_.row(i + 1);  // next[k] == at(k, i + 1)
      if (h != 0.0) {
        for (std::size_t k = 0; k <= i; ++k) d_[k] = next[k] / h;
        for (std::size_t j = 0; j <= i; ++j) {
          double* col = w_.row(j);
          double g = 0.0;
          for (std::size_t k = 0; k <= i; ++k) g += next[k] * col[k];
          for (std::size_t k = 0; k <= i; ++k) col[k] -= g * d_[k];
        }
      }
      for (std::size_t k = 0; k <= i; ++k) at(k, i + 1) = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) {
      d_[j] = at(n - 1, j);
      at(n - 1, j) = 0.0;
    }
    at(n - 1, n - 1) = 1.0;
    e_[0] = 0.0;
  }

  void ql_iterate() {
    const std::size_t n = n_;
    constexpr int kMaxIterations = 60;
    for (std::size_t i = 1; i < n; ++i) e_[i - 1] = e_[i];
    e_[n - 1] = 0.0;

    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::ldexp(1.0, -52);
    for (std::size_t l = 0; l < n; ++l) {
      tst1 = std::max(tst1, std::abs(d_[l]) + std::abs(e_[l]));
      std::size_t m = l;
      while (m < n) {
        if (std::abs(e_[m]) <= eps * tst1) break;
        ++m;
      }
      if (m > l) {
        int iter = 0;
        do {
          if (++iter > kMaxIterations) {
            fail(ErrorCode::ConvergenceFailure,
                 "QL iteration did not converge for eigenvalue " + std::to_string(l));
          }
          double g = d_[l];
          double p = (d_[l + 1] - g) / (2.0 * e_[l]);
          double r = std::hypot(p, 1.0);
          if (p < 0) r = -r;
          d_[l] = e_[l] / (p + r);
          d_[l + 1] = e_[l] * (p + r);
          const double dl1 = d_[l + 1];
          double h = g - d_[l];
          for (std::size_t i = l + 2; i < n; ++i) d_[i] -= h;
          f += h;

          p = d_[m];
          double c = 1.0;
          double c2 = c;
          double c3 = c;
          const double el1 = e_[l + 1];
          double s = 0.0;
          double s2 = 0.0;
          for (std::size_t ii = m; ii-- > l;) {
            c3 = c2;
            c2 = c;
            s2 = s;
            g = c * e_[ii];
            h = c * p;
            r = std::hypot(p, e_[ii]);
            e_[ii + 1] = s * r;
            s = e_[ii] / r;
            c = p / r;
            p = c * d_[ii] - s * g;
            d_[ii + 1] = h + s * (c * g + s * d_[ii]);
            if (want_vectors_) {
              double* lo = w_.row(ii);      // column ii of V
              double* hi = w_.row(ii + 1);  // column ii + 1 of V
              for (std::size_t k = 0; k < n; ++k) {
                const double t = hi[k];
                hi[k] = s * lo[k] + c * t;
                lo[k] = c * lo[k] - s * t;
              }
            }
          }
          p = -s * s2 * c3 * el1 * e_[l] / dl1;
          e_[l] = s * p;
          d_[l] = c * p;
        } while (std::abs(e_[l]) > eps * tst1);
      }
      d_[l] += f;
      e_[l] = 0.0;
    }
  }

  SymmetricEigen collect() {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d_[a] < d_[b]; });
    SymmetricEigen out;
    out.values.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) out.values[j] = d_[order[j]];
    if (want_vectors_) {
      out.vectors = DenseMatrix(n_, n_);
      for (std::size_t j = 0; j < n_; ++j) std::copy_n(w_.row(order[j]), n_, out.vectors.row(j));
    }
    return out;
  }

  std::size_t n_;
  DenseMatrix w_;
  std::vector<double> d_;
  std::vector<double> e_;
  bool want_vectors_;
};

}  // namespace detail

/// Full eigendecomposition of a symmetric matrix. Only the upper triangle of `a` is read.
inline SymmetricEigen symmetric_eigen(DenseMatrix a, bool want_vectors) {
  require(a.rows() == a.cols(), ErrorCode::DimensionMismatch, "matrix must be square");
  return detail::TridiagonalQl(std::move(a), want_vectors).run();
}

}  // namespace entrograph
