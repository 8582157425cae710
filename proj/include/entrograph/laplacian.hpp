#pragma once

#include <cstddef>
#include <vector>

#include "entrograph/graph.hpp"

namespace entrograph {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  double* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// L = D - A.
inline DenseMatrix laplacian_dense(const Graph& g) {
  const std::size_t n = g.node_count();
  DenseMatrix lap(n, n);
  for (NodeId i = 0; i < n; ++i) {
    lap(i, i) = g.degree(i);
    for (const auto& nb : g.neighbors(i)) lap(i, nb.node) = -nb.weight;
  }
  return lap;
}

inline DenseMatrix adjacency_dense(const Graph& g) {
  const std::size_t n = g.node_count();
  DenseMatrix adj(n, n);
  for (NodeId i = 0; i < n; ++i) {
    for (const auto& nb : g.neighbors(i)) adj(i, nb.node) = nb.weight;
  }
  return adj;
}

}  // namespace entrograph
