#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "entrograph/entropy.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/parallel.hpp"
#include "entrograph/random.hpp"
#include "entrograph/spectral.hpp"

namespace entrograph {

/// Increase of sum f(d_i) caused by joining u and v; the greedy minimizes it.
inline double edge_centrality(double d_u, double d_v) noexcept {
  return xlog2x(d_u + 1) - xlog2x(d_u) + xlog2x(d_v + 1) - xlog2x(d_v);
}

struct AugmentationResult {
  std::vector<NodePair> chosen_edges;  // every edge added, in order
  std::vector<double> h1_trace;        // H1 after each addition
  std::vector<double> hvn_trace;       // exact entropy after each addition (if requested)
  double initial_h1 = 0.0;
  std::optional<double> initial_hvn;
  std::size_t best_prefix = 0;  // |F*|: the first best_prefix chosen edges

  std::size_t budget_used() const noexcept { return chosen_edges.size(); }

  std::vector<NodePair> best_edges() const {
    return {chosen_edges.begin(), chosen_edges.begin() + static_cast<std::ptrdiff_t>(best_prefix)};
  }
};

struct AugmentOptions {
  bool trace_hvn = false;
};

namespace detail {

// Nodes sorted by (degree, id).
inline std::vector<NodeId> degree_order(const Graph& g) {
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const double da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  return order;
}

// Two-pointer scan over the degree-sorted node list with threshold pruning.
// Pairs with EC >= T are never better, and since EC grows with both positions
// a pruned column stays pruned for every later head. Among pairs of minimal
// EC it returns the one that comes first in (head, partner) sorted position.
inline std::optional<NodePair> min_ec_pair_pruned(const Graph& g) {
  const auto vs = degree_order(g);
  if (vs.size() < 2) return std::nullopt;
  std::size_t head = 0;
  std::size_t tail = vs.size() - 1;
  double threshold = std::numeric_limits<double>::infinity();
  std::optional<NodePair> best;
  while (head < tail) {
    const NodeId u = vs[head];
    const double du = g.degree(u);
    for (std::size_t i = head + 1; i <= tail; ++i) {
      const NodeId v = vs[i];
      const double ec = edge_centrality(du, g.degree(v));
      if (ec >= threshold) {
        tail = i - 1;
        break;
      }
      if (!g.has_edge(u, v)) {
        best = NodePair{u, v};
        threshold = ec;
        tail = i - 1;
        break;
      }
    }
    ++head;
  }
  return best;
}

inline std::optional<NodePair> min_ec_pair_exhaustive(const Graph& g) {
  const auto vs = degree_order(g);
  double threshold = std::numeric_limits<double>::infinity();
  std::optional<NodePair> best;
  for (std::size_t p = 0; p < vs.size(); ++p) {
    for (std::size_t q = p + 1; q < vs.size(); ++q) {
      if (g.has_edge(vs[p], vs[q])) continue;
      const double ec = edge_centrality(g.degree(vs[p]), g.degree(vs[q]));
      if (ec < threshold) {
        threshold = ec;
        best = NodePair{vs[p], vs[q]};
      }
    }
  }
  return best;
}

template <typename PickPair>
AugmentationResult greedy_augment(Graph g, std::size_t budget, const AugmentOptions& opts, PickPair&& pick) {
  require(budget >= 1, ErrorCode::InvalidBudget, "budget must be at least 1");
  AugmentationResult r;
  r.initial_h1 = structural_information(g);
  if (opts.trace_hvn) r.initial_hvn = von_neumann_entropy(g);
  const double cap = std::log2(static_cast<double>(g.node_count()));
  double best_h = 0.0;
  while (r.chosen_edges.size() < budget) {
    const auto pair = pick(g);
    if (!pair) {
      if (r.chosen_edges.empty()) fail(ErrorCode::GraphComplete, "no non-adjacent node pair left");
      break;
    }
    g.add_edge(pair->u, pair->v);
    r.chosen_edges.push_back(*pair);
    const double h = structural_information(g);
    r.h1_trace.push_back(h);
    if (opts.trace_hvn) r.hvn_trace.push_back(von_neumann_entropy(g));
    if (h > best_h) {
      best_h = h;
      r.best_prefix = r.chosen_edges.size();
    }
    if (std::abs(best_h - cap) <= 1e-12) break;
  }
  return r;
}

}  // namespace detail

/// Greedy H1 maximization by edge addition with degree-sorted pruning.
inline AugmentationResult entropy_aug(const Graph& g, std::size_t budget, const AugmentOptions& opts = {}) {
  return detail::greedy_augment(g, budget, opts, [](const Graph& cur) { return detail::min_ec_pair_pruned(cur); });
}

/// Same greedy, scanning every non-adjacent pair. Reference for the pruned scan.
inline AugmentationResult entropy_aug_bruteforce(const Graph& g, std::size_t budget,
                                                 const AugmentOptions& opts = {}) {
  return detail::greedy_augment(g, budget, opts,
                                [](const Graph& cur) { return detail::min_ec_pair_exhaustive(cur); });
}

inline std::vector<NodePair> non_edges(const Graph& g) {
  std::vector<NodePair> out;
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v = u + 1; v < g.node_count(); ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return out;
}

/// k distinct non-edges chosen uniformly at random (fewer if the graph runs out).
inline AugmentationResult baseline_random(const Graph& g, std::size_t budget, std::uint64_t seed,
                                          const AugmentOptions& opts = {}) {
  auto pool = non_edges(g);
  if (pool.empty()) fail(ErrorCode::GraphComplete, "no non-adjacent node pair left");
  Rng rng(seed);
  const std::size_t take = std::min(budget, pool.size());
  for (std::size_t i = 0; i < take; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  std::size_t next = 0;
  auto r = detail::greedy_augment(g, budget, opts, [&](const Graph&) -> std::optional<NodePair> {
    if (next >= take) return std::nullopt;
    return pool[next++];
  });
  return r;
}

/// Second-smallest Laplacian eigenvalue.
inline double algebraic_connectivity(const Graph& g) {
  const auto s = eig_laplacian(g);
  return s.size() >= 2 ? s.eigenvalues[1] : 0.0;
}

/// Greedy lambda_2 maximization: every step tries every non-edge with a full
/// eigendecomposition, so keep n around 200 or below.
inline AugmentationResult baseline_algebraic(const Graph& g, std::size_t budget, const AugmentOptions& opts = {}) {
  return detail::greedy_augment(g, budget, opts, [](const Graph& cur) -> std::optional<NodePair> {
    const auto pool = non_edges(cur);
    if (pool.empty()) return std::nullopt;
    std::vector<double> gain(pool.size());
    parallel_for(pool.size(), [&](std::size_t i) {
      Graph trial = cur;
      trial.add_edge(pool[i].u, pool[i].v);
      gain[i] = algebraic_connectivity(trial);
    });
    // Gains within round-off of each other count as ties; the earlier pair wins.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i)
      if (gain[i] > gain[best] + 1e-10) best = i;
    return pool[best];
  });
}

}  // namespace entrograph
