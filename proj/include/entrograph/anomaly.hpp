#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entrograph/generators.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/random.hpp"
#include "entrograph/similarity.hpp"

namespace entrograph {

enum class Measure { DSi, DQjs, Veo };

inline std::string to_string(Measure m) {
  switch (m) {
    case Measure::DSi: return "d_si";
    case Measure::DQjs: return "d_qjs";
    case Measure::Veo: return "veo";
  }
  return "?";
}

inline Measure parse_measure(std::string_view name) {
  if (name == "d_si" || name == "dsi" || name == "si") return Measure::DSi;
  if (name == "d_qjs" || name == "dqjs" || name == "qjs") return Measure::DQjs;
  if (name == "veo") return Measure::Veo;
  fail(ErrorCode::InvalidParameter, "unknown measure '" + std::string(name) + "'");
}

/// D_SI, sqrt of the quantum divergence, or the VEO score.
inline double graph_distance(const Graph& a, const Graph& b, Measure m) {
  switch (m) {
    case Measure::DSi: return d_si(a, b);
    case Measure::DQjs: return d_qjs(a, b).distance;
    case Measure::Veo: return veo(a, b);
  }
  fail(ErrorCode::InvalidParameter, "unknown measure");
}

/// DDoS-style perturbation: a random target v is joined to k distinct random
/// sources (edges already present are kept as they are).
inline Graph ddos_perturb(const Graph& g, std::size_t k, std::uint64_t seed) {
  const std::size_t n = g.node_count();
  require(n >= 2, ErrorCode::InvalidParameter, "DDoS perturbation needs n >= 2");
  require(k <= n - 1, ErrorCode::InvalidParameter, "attack strength must be at most n - 1");
  Rng rng(seed);
  const auto target = static_cast<NodeId>(rng.below(n));
  std::vector<NodeId> others;
  others.reserve(n - 1);
  for (NodeId i = 0; i < n; ++i)
    if (i != target) others.push_back(i);
  // Partial Fisher-Yates: the first k entries become the sources.
  for (std::size_t i = 0; i < k; ++i) std::swap(others[i], others[i + rng.below(others.size() - i)]);
  Graph out = g;
  for (std::size_t i = 0; i < k; ++i) {
    if (!out.has_edge(target, others[i])) out.add_edge(target, others[i]);
  }
  return out;
}

struct AnomalyRanking {
  std::vector<double> scores;   // per snapshot
  std::vector<std::size_t> order;  // snapshot indices, most anomalous first

  /// 1-based rank of snapshot `index`.
  std::size_t rank_of(std::size_t index) const {
    auto it = std::find(order.begin(), order.end(), index);
    require(it != order.end(), ErrorCode::InvalidParameter, "snapshot index out of range");
    return static_cast<std::size_t>(it - order.begin()) + 1;
  }
};

/// score_t = (theta_{t-1,t} + theta_{t,t+1}) / 2; the first and last snapshots
/// use their single neighbouring distance. Ties keep index order.
inline AnomalyRanking anomaly_rank(std::span<const Graph> series, Measure measure) {
  require(series.size() >= 3, ErrorCode::TooFewSnapshots, "anomaly ranking needs at least 3 snapshots");
  std::vector<double> theta(series.size() - 1);
  for (std::size_t t = 0; t + 1 < series.size(); ++t) theta[t] = graph_distance(series[t], series[t + 1], measure);
  AnomalyRanking r;
  r.scores.resize(series.size());
  r.scores.front() = theta.front();
  r.scores.back() = theta.back();
  for (std::size_t t = 1; t + 1 < series.size(); ++t) r.scores[t] = 0.5 * (theta[t - 1] + theta[t]);
  r.order.resize(series.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) { return r.scores[a] > r.scores[b]; });
  return r;
}

struct DdosSetup {
  std::size_t n = 100;
  double avg_degree = 4.0;
  std::size_t snapshots = 10;
};

struct DdosTrial {
  std::size_t strength = 0;
  std::size_t trial = 0;
  std::size_t attacked = 0;  // index of the perturbed snapshot
  std::vector<std::size_t> ranks;  // one per requested measure
};

/// One attack: independent BA snapshots, one of them perturbed, then each
/// measure ranks the stream.
inline DdosTrial ddos_trial(const DdosSetup& setup, std::size_t strength, std::span<const Measure> measures,
                            std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> series;
  series.reserve(setup.snapshots);
  for (std::size_t t = 0; t < setup.snapshots; ++t) series.push_back(gen_ba(setup.n, setup.avg_degree, rng()));
  DdosTrial out;
  out.strength = strength;
  out.attacked = static_cast<std::size_t>(rng.below(setup.snapshots));
  series[out.attacked] = ddos_perturb(series[out.attacked], strength, rng());
  for (auto m : measures) out.ranks.push_back(anomaly_rank(series, m).rank_of(out.attacked));
  return out;
}

/// Seed of trial `trial` at attack strength `strength` within a run seeded with `seed`.
inline std::uint64_t ddos_trial_seed(std::uint64_t seed, std::size_t strength, std::size_t trial) {
  return derive_seed(derive_seed(seed, strength), trial);
}

}  // namespace entrograph
