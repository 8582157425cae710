#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entrograph/entropy.hpp"
#include "entrograph/generators.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/kmeans.hpp"
#include "entrograph/netdesign.hpp"
#include "entrograph/parallel.hpp"
#include "entrograph/partition.hpp"
#include "entrograph/random.hpp"
#include "entrograph/spectral.hpp"

namespace entrograph {

/// Sign split of the Fiedler vector: label 1 where the entry is negative.
/// The global sign of the eigenvector is arbitrary; compare results with
/// detection_error, which does not care about label names.
inline Partition spectral_cluster_2(const Spectrum& s) {
  require(s.size() >= 2, ErrorCode::InvalidParameter, "2-way clustering needs n >= 2");
  const auto fiedler = s.eigenvector(1);
  std::vector<std::uint32_t> labels(fiedler.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = fiedler[i] < 0.0 ? 1 : 0;
  return Partition(std::move(labels), 2);
}

inline Partition spectral_cluster_2(const Graph& g) { return spectral_cluster_2(eig_laplacian(g, true)); }

inline KMeansOptions spectral_kmeans_options() {
  KMeansOptions o;
  o.k = 3;
  o.restarts = 20;
  o.max_iterations = 300;
  o.rel_tolerance = 1e-6;
  return o;
}

/// k-means (k = 3) on the rows of [v_2, v_3].
inline Partition spectral_cluster_3(const Spectrum& s, std::uint64_t seed) {
  require(s.size() >= 3, ErrorCode::InvalidParameter, "3-way clustering needs n >= 3");
  const auto v2 = s.eigenvector(1);
  const auto v3 = s.eigenvector(2);
  std::vector<double> pts(2 * s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    pts[2 * i] = v2[i];
    pts[2 * i + 1] = v3[i];
  }
  auto km = kmeans(pts, 2, spectral_kmeans_options(), seed);
  return Partition(std::move(km.labels), 3);
}

inline Partition spectral_cluster_3(const Graph& g, std::uint64_t seed) {
  return spectral_cluster_3(eig_laplacian(g, true), seed);
}

/// min over label bijections of sum_i |P_i symmetric-difference Q_sigma(i)|.
inline std::size_t detection_error(const Partition& truth, const Partition& detected) {
  require(truth.size() == detected.size(), ErrorCode::DimensionMismatch, "partitions cover different node sets");
  require(truth.k == detected.k, ErrorCode::DimensionMismatch, "partitions have different cluster counts");
  require(truth.k <= 5, ErrorCode::KTooLarge, "exact bijection search supports k <= 5");
  const std::size_t k = truth.k;
  std::vector<std::size_t> overlap(k * k, 0);
  for (std::size_t i = 0; i < truth.size(); ++i) ++overlap[truth.labels[i] * k + detected.labels[i]];
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::size_t best = 0;
  do {
    std::size_t s = 0;
    for (std::size_t a = 0; a < k; ++a) s += overlap[a * k + sigma[a]];
    best = std::max(best, s);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  // Symmetric difference size is |P| + |Q| - 2 |P intersect Q| over the matched pairs.
  return 2 * truth.size() - 2 * best;
}

/// Variance-style spread of the trace-normalized spectrum, from degrees alone:
/// (sum d_i^2 + tr(A^2)) / vol^2 - 1/n, which is 1/vol - 1/n + sum d_i^2/vol^2
/// for unweighted graphs.
inline double spectral_polarization(const Graph& g) {
  require(g.volume() > 0.0, ErrorCode::EmptyGraph, "polarization needs at least one edge");
  const auto m = laplacian_moments(g);
  const double vol = g.volume();
  return m.tr_l2 / (vol * vol) - 1.0 / static_cast<double>(g.node_count());
}

/// sum_i (lambda_i/vol - mean/vol)^2 straight from a spectrum.
inline double spectral_polarization(const Spectrum& s) {
  require(s.source_volume > 0.0, ErrorCode::EmptyGraph, "polarization needs at least one edge");
  const double mean = s.source_volume / static_cast<double>(s.size());
  double acc = 0.0;
  for (double l : s.eigenvalues) {
    const double t = (l - mean) / s.source_volume;
    acc += t * t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Obfuscation

enum class ObfuscationObjective { MaxEntropy, MinPolarization };

inline std::string to_string(ObfuscationObjective o) {
  return o == ObfuscationObjective::MaxEntropy ? "max_entropy" : "min_polarization";
}

inline ObfuscationObjective parse_objective(std::string_view name) {
  if (name == "max_entropy" || name == "entropy") return ObfuscationObjective::MaxEntropy;
  if (name == "min_polarization" || name == "polarization") return ObfuscationObjective::MinPolarization;
  fail(ErrorCode::InvalidParameter, "unknown objective '" + std::string(name) + "'");
}

struct CommunityMetrics {
  std::size_t detection_error = 0;
  double h1 = 0.0;
  double hvn = 0.0;
  double polarization = 0.0;
  std::vector<double> eigen_low;  // lambda_1 .. lambda_5 (fewer when n < 5)
  double gap_32 = 0.0;  // lambda_3 - lambda_2
  double gap_43 = 0.0;
  double gap_54 = 0.0;
};

/// Runs the spectral detector matching truth.k (2-way for k = 2, k-means on
/// [v_2, v_3] for k = 3) and collects the entropy and spectral statistics.
inline CommunityMetrics community_metrics(const Graph& g, const Partition& truth, std::uint64_t seed) {
  require(truth.k == 2 || truth.k == 3, ErrorCode::InvalidParameter, "spectral detectors support k = 2 or 3");
  const auto s = eig_laplacian(g, true);
  CommunityMetrics m;
  const Partition found = truth.k == 2 ? spectral_cluster_2(s) : spectral_cluster_3(s, seed);
  m.detection_error = detection_error(truth, found);
  m.h1 = structural_information(g);
  m.hvn = von_neumann_entropy(s);
  m.polarization = g.volume() > 0.0 ? spectral_polarization(g) : 0.0;
  const auto& ev = s.eigenvalues;
  m.eigen_low.assign(ev.begin(), ev.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(5, ev.size())));
  auto gap = [&](std::size_t hi) { return hi < ev.size() ? std::max(0.0, ev[hi] - ev[hi - 1]) : 0.0; };
  m.gap_32 = gap(2);
  m.gap_43 = gap(3);
  m.gap_54 = gap(4);
  return m;
}

struct ObfuscationStep {
  std::size_t step = 0;            // 0 is the unmodified graph
  std::optional<NodePair> edge;   // edge added at this step
  CommunityMetrics metrics;
};

struct ObfuscationTrace {
  std::vector<NodePair> added_edges;
  std::vector<ObfuscationStep> steps;
};

namespace detail {

inline double obfuscation_cost(ObfuscationObjective obj, double du, double dv) {
  return obj == ObfuscationObjective::MaxEntropy ? edge_centrality(du, dv) : du + dv;
}

// Cheapest non-edge between two communities. Both member lists are scanned in
// (degree, id) order and the cost grows with either degree, so each row stops
// at its first non-edge and rows whose cheapest entry already reaches the
// threshold end the search. Ties keep the earliest (row, column) position.
inline std::optional<NodePair> cheapest_cross_pair(const Graph& g, std::vector<std::uint32_t> a,
                                                   std::vector<std::uint32_t> b, ObfuscationObjective obj) {
  auto by_degree = [&](std::uint32_t x, std::uint32_t y) {
    const double dx = g.degree(x), dy = g.degree(y);
    return dx != dy ? dx < dy : x < y;
  };
  std::sort(a.begin(), a.end(), by_degree);
  std::sort(b.begin(), b.end(), by_degree);
  double threshold = std::numeric_limits<double>::infinity();
  std::optional<NodePair> best;
  std::size_t tail = b.size();
  for (std::uint32_t u : a) {
    if (tail == 0) break;
    const double du = g.degree(u);
    if (obfuscation_cost(obj, du, g.degree(b[0])) >= threshold) break;
    for (std::size_t j = 0; j < tail; ++j) {
      const double c = obfuscation_cost(obj, du, g.degree(b[j]));
      if (c >= threshold) {
        tail = j;
        break;
      }
      if (!g.has_edge(u, b[j])) {
        threshold = c;
        best = NodePair{std::min(u, b[j]), std::max(u, b[j])};
        tail = j;
        break;
      }
    }
  }
  return best;
}

}  // namespace detail

struct ObfuscationOptions {
  ObfuscationObjective objective = ObfuscationObjective::MaxEntropy;
  std::uint64_t seed = 0;  // k-means seeds for 3-way detection
};

/// Greedy inter-community edge addition. The budget is split evenly over the
/// C(k,2) community pairs (remainder to the first pairs in (a,b) order) and the
/// pairs take turns round-robin. Metrics are recorded before the first edge and
/// after every edge.
inline ObfuscationTrace obfuscate(const Graph& g0, const Partition& truth, std::size_t budget,
                                  const ObfuscationOptions& opts = {}) {
  require(budget >= 1, ErrorCode::InvalidBudget, "obfuscation budget must be at least 1");
  require(truth.size() == g0.node_count(), ErrorCode::DimensionMismatch, "partition does not cover the graph");
  require(truth.k >= 2, ErrorCode::InvalidParameter, "obfuscation needs at least two communities");
  const auto groups = truth.groups();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < truth.k; ++a)
    for (std::uint32_t b = a + 1; b < truth.k; ++b) pairs.push_back({a, b});
  std::vector<std::size_t> quota(pairs.size(), budget / pairs.size());
  for (std::size_t i = 0; i < budget % pairs.size(); ++i) ++quota[i];

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& ga = groups[pairs[p].first];
    const auto& gb = groups[pairs[p].second];
    std::size_t present = 0;
    for (auto u : ga)
      for (const auto& nb : g0.neighbors(u)) present += truth.labels[nb.node] == pairs[p].second;
    const std::size_t free_pairs = ga.size() * gb.size() - present;
    if (quota[p] > free_pairs) {
      fail(ErrorCode::BudgetInfeasible, "communities " + std::to_string(pairs[p].first) + " and " +
                                            std::to_string(pairs[p].second) + " have only " +
                                            std::to_string(free_pairs) + " free pairs for a quota of " +
                                            std::to_string(quota[p]));
    }
  }

  Graph g = g0;
  ObfuscationTrace trace;
  trace.steps.push_back({0, std::nullopt, community_metrics(g, truth, derive_seed(opts.seed, 0))});
  std::size_t step = 0;
  while (step < budget) {
    for (std::size_t p = 0; p < pairs.size() && step < budget; ++p) {
      if (quota[p] == 0) continue;
      const auto pick = detail::cheapest_cross_pair(g, groups[pairs[p].first], groups[pairs[p].second],
                                                    opts.objective);
      if (!pick) fail(ErrorCode::InternalConsistency, "community pair ran out of free pairs");
      g.add_edge(pick->u, pick->v);
      --quota[p];
      ++step;
      trace.added_edges.push_back(*pick);
      trace.steps.push_back({step, *pick, community_metrics(g, truth, derive_seed(opts.seed, step))});
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Planted-partition sweep

struct SbmExperimentRow {
  double c_in = 0.0;
  double c_out = 0.0;
  std::size_t seed_index = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  CommunityMetrics metrics;
};

/// One (c_out, seed) cell: q equal groups, c_in = c_total - c_out.
inline SbmExperimentRow sbm_experiment_row(std::size_t n, std::size_t q, double c_total, double c_out,
                                           std::size_t seed_index, std::uint64_t seed) {
  const auto params = SbmParams::equal_groups(n, q, c_total - c_out, c_out);
  SbmExperimentRow row;
  row.c_in = params.c_in;
  row.c_out = c_out;
  row.seed_index = seed_index;
  row.seed = derive_seed(seed, seed_index);
  auto [g, truth] = gen_sbm(params, row.seed);
  row.edges = g.edge_count();
  row.metrics = community_metrics(g, truth, derive_seed(row.seed, 1));
  return row;
}

/// Rows ordered by (c_out grid position, seed index). Cells run in parallel.
inline std::vector<SbmExperimentRow> sbm_experiment(std::size_t n, std::size_t q, double c_total,
                                                    const std::vector<double>& c_out_grid, std::size_t seeds,
                                                    std::uint64_t seed) {
  std::vector<SbmExperimentRow> rows(c_out_grid.size() * seeds);
  parallel_for(rows.size(), [&](std::size_t cell) {
    rows[cell] = sbm_experiment_row(n, q, c_total, c_out_grid[cell / seeds], cell % seeds, seed);
  });
  return rows;
}

}  // namespace entrograph
