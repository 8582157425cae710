#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "entrograph/error.hpp"
#include "entrograph/random.hpp"

namespace entrograph {

struct KMeansOptions {
  std::size_t k = 3;
  std::size_t restarts = 20;
  std::size_t max_iterations = 300;
  double rel_tolerance = 1e-6;  // stop when inertia improves by less than this fraction
};

struct KMeansResult {
  std::vector<std::uint32_t> labels;
  std::vector<double> centers;  // k * dim, row-major
  double inertia = 0.0;
  std::size_t iterations = 0;
};

namespace detail {

inline double sq_dist(const double* a, const double* b, std::size_t dim) noexcept {
  double s = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double t = a[j] - b[j];
    s += t * t;
  }
  return s;
}

// k-means++ seeding: first centre uniform, the rest drawn with probability
// proportional to squared distance from the nearest chosen centre.
inline std::vector<double> seed_plus_plus(const std::vector<double>& pts, std::size_t n, std::size_t dim,
                                          std::size_t k, Rng& rng) {
  std::vector<double> centers(k * dim);
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::size_t pick = rng.below(n);
  for (std::size_t c = 0; c < k; ++c) {
    std::copy_n(&pts[pick * dim], dim, &centers[c * dim]);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      nearest[i] = std::min(nearest[i], sq_dist(&pts[i * dim], &centers[c * dim], dim));
      total += nearest[i];
    }
    if (c + 1 == k) break;
    if (!(total > 0.0)) {
      pick = rng.below(n);
      continue;
    }
    double r = rng.uniform01() * total;
    pick = n - 1;
    for (std::size_t i = 0; i < n; ++i) {
      r -= nearest[i];
      if (r < 0.0) {
        pick = i;
        break;
      }
    }
  }
  return centers;
}

inline KMeansResult lloyd(const std::vector<double>& pts, std::size_t n, std::size_t dim, std::vector<double> centers,
                          const KMeansOptions& opts) {
  const std::size_t k = opts.k;
  KMeansResult r;
  r.labels.assign(n, 0);
  double prev = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n);
  std::vector<std::size_t> counts(k);
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    r.iterations = it + 1;
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t best = 0;
      double bd = sq_dist(&pts[i * dim], &centers[0], dim);
      for (std::size_t c = 1; c < k; ++c) {
        const double d = sq_dist(&pts[i * dim], &centers[c * dim], dim);
        if (d < bd) {
          bd = d;
          best = static_cast<std::uint32_t>(c);
        }
      }
      r.labels[i] = best;
      dist[i] = bd;
      inertia += bd;
    }
    r.inertia = inertia;
    r.centers = centers;
    if (it > 0 && prev - inertia <= opts.rel_tolerance * prev) break;
    prev = inertia;

    std::fill(centers.begin(), centers.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++counts[r.labels[i]];
      for (std::size_t j = 0; j < dim; ++j) centers[r.labels[i] * dim + j] += pts[i * dim + j];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        for (std::size_t j = 0; j < dim; ++j) centers[c * dim + j] /= static_cast<double>(counts[c]);
        continue;
      }
      // Empty cluster: move its centre onto the point farthest from its own centre.
      std::size_t far = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (dist[i] > dist[far]) far = i;
      std::copy_n(&pts[far * dim], dim, &centers[c * dim]);
      dist[far] = 0.0;
    }
  }
  return r;
}

}  // namespace detail

/// Lloyd's algorithm with k-means++ seeding; the restart with the lowest inertia
/// wins (earliest restart on ties). `points` is n * dim, row-major.
inline KMeansResult kmeans(const std::vector<double>& points, std::size_t dim, const KMeansOptions& opts,
                           std::uint64_t seed) {
  require(dim >= 1 && points.size() % dim == 0, ErrorCode::DimensionMismatch, "point array is not n x dim");
  const std::size_t n = points.size() / dim;
  require(opts.k >= 1 && opts.k <= n, ErrorCode::InvalidParameter, "k-means needs 1 <= k <= n");
  require(opts.restarts >= 1, ErrorCode::InvalidParameter, "k-means needs at least one restart");
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (std::size_t rep = 0; rep < opts.restarts; ++rep) {
    Rng rng(derive_seed(seed, rep));
    auto centers = detail::seed_plus_plus(points, n, dim, opts.k, rng);
    auto r = detail::lloyd(points, n, dim, std::move(centers), opts);
    if (r.inertia < best.inertia) best = std::move(r);
  }
  return best;
}

}  // namespace entrograph
