#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entrograph/eigen_solver.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/laplacian.hpp"

namespace entrograph {

/// Sorted Laplacian eigenvalues plus the volume they were computed against.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, clamped to >= 0
  std::optional<DenseMatrix> eigenvectors;  // row j pairs with eigenvalues[j]
  double source_volume = 0.0;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double lambda_max() const noexcept { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }

  std::span<const double> eigenvector(std::size_t j) const {
    require(eigenvectors.has_value(), ErrorCode::InvalidParameter, "spectrum was computed without eigenvectors");
    return {eigenvectors->row(j), eigenvectors->cols()};
  }
};

namespace detail {

inline void check_laplacian_spectrum(std::vector<double>& values, double volume) {
  if (values.empty()) return;
  const double top = std::max(values.back(), 0.0);
  const double zero_tol = 1e-8 * std::max(1.0, top);
  if (std::abs(values.front()) > zero_tol) {
    fail(ErrorCode::ConvergenceFailure, "smallest Laplacian eigenvalue " + std::to_string(values.front()) +
                                            " is not zero within tolerance");
  }
  double trace = 0.0;
  for (double& v : values) {
    if (v < -1e-8 * std::max(top, 1.0)) {
      fail(ErrorCode::ConvergenceFailure, "Laplacian eigenvalue " + std::to_string(v) + " is negative");
    }
    if (v < 0.0) v = 0.0;
    trace += v;
  }
  if (std::abs(trace - volume) > 1e-8 * std::max(1.0, volume)) {
    fail(ErrorCode::ConvergenceFailure,
         "eigenvalue sum " + std::to_string(trace) + " differs from volume " + std::to_string(volume));
  }
}

}  // namespace detail

/// Dense eigendecomposition of the Laplacian. Round-off negatives are clamped to 0.
inline Spectrum eig_laplacian(const Graph& g, bool with_vectors = false) {
  auto eig = symmetric_eigen(laplacian_dense(g), with_vectors);
  detail::check_laplacian_spectrum(eig.values, g.volume());
  Spectrum s;
  s.eigenvalues = std::move(eig.values);
  if (with_vectors) s.eigenvectors = std::move(eig.vectors);
  s.source_volume = g.volume();
  return s;
}

/// Consecutive differences lambda_{i+1} - lambda_i, i = 1..n-1.
inline std::vector<double> spectral_gaps(const Spectrum& s) {
  require(s.size() >= 2, ErrorCode::InvalidParameter, "spectral gaps need at least two eigenvalues");
  std::vector<double> gaps(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) gaps[i] = std::max(0.0, s.eigenvalues[i + 1] - s.eigenvalues[i]);
  return gaps;
}

struct LaplacianMoments {
  double tr_l = 0.0;   // vol(G)
  double tr_l2 = 0.0;  // sum d_i^2 + tr(A^2)
  double tr_a2 = 0.0;  // sum_{ij} A_ij^2
  double lambda_max_bound = 0.0;
  bool lambda_max_exact = false;
};

/// Trace moments from degrees and weights alone. lambda_max_bound is
/// max over edges (d_i + d_j) unless a spectrum is supplied, in which case it is
/// the exact largest eigenvalue.
inline LaplacianMoments laplacian_moments(const Graph& g, const Spectrum* spectrum = nullptr) {
  LaplacianMoments m;
  m.tr_l = g.volume();
  double sum_d2 = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double di = g.degree(i);
    sum_d2 += di * di;
    for (const auto& nb : g.neighbors(i)) {
      m.tr_a2 += nb.weight * nb.weight;
      m.lambda_max_bound = std::max(m.lambda_max_bound, di + g.degree(nb.node));
    }
  }
  m.tr_l2 = sum_d2 + m.tr_a2;
  if (spectrum != nullptr) {
    m.lambda_max_bound = spectrum->lambda_max();
    m.lambda_max_exact = true;
  }
  return m;
}

}  // namespace entrograph
