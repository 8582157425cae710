#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "entrograph/error.hpp"

namespace entrograph {

struct MajorizationCheck {
  /// min_k (sum_{i<=k} x_i - sum_{i<=k} y_i) over descending-sorted vectors, k < d.
  double min_partial_slack = std::numeric_limits<double>::infinity();
  /// sum x - sum y.
  double total_difference = 0.0;

  bool holds(double tolerance) const noexcept {
    return min_partial_slack >= -tolerance && std::abs(total_difference) <= tolerance;
  }
};

/// Partial-sum test for x majorizing y.
inline MajorizationCheck check_majorization(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), ErrorCode::DimensionMismatch, "majorization needs equal-length vectors");
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  MajorizationCheck out;
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (k + 1 < xs.size()) out.min_partial_slack = std::min(out.min_partial_slack, sx - sy);
  }
  out.total_difference = sx - sy;
  return out;
}

/// d*_k = |{i : d_i >= k}| for k = 1..n (integer degrees assumed).
inline std::vector<double> conjugate_degrees(std::span<const double> degrees) {
  const std::size_t n = degrees.size();
  std::vector<std::size_t> at_least(n + 2, 0);
  for (double d : degrees) {
    const auto k = static_cast<std::size_t>(std::min<double>(std::llround(d), static_cast<double>(n + 1)));
    ++at_least[k];
  }
  // Suffix sums turn "count with degree == k" into "count with degree >= k".
  for (std::size_t k = n + 1; k-- > 0;) at_least[k] += at_least[k + 1];
  std::vector<double> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = static_cast<double>(at_least[k]);
  return out;
}

/// (d_1 + 1, d_2, ..., d_{n-1}, d_n - 1) over the non-increasing degree sequence.
inline std::vector<double> grone_sequence(std::span<const double> degrees) {
  std::vector<double> out(degrees.begin(), degrees.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  if (out.size() >= 2) {
    out.front() += 1.0;
    out.back() -= 1.0;
  }
  return out;
}

}  // namespace entrograph
