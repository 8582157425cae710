#pragma once

// Hand-rolled random inputs for the property tests.

#include <string>
#include <vector>

#include "entrograph/entrograph.hpp"

namespace entrograph::testing {

inline std::string data_file(const std::string& name) { return std::string(ENTROGRAPH_TEST_DATA_DIR) + "/" + name; }

inline Graph zachary() { return load_edge_list(data_file("zachary.txt")); }

// Cycles through ER, BA, WS and SBM with n in [lo, hi]; every graph has an edge.
inline Graph random_model_graph(Rng& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = lo + rng.below(hi - lo + 1);
  const std::uint64_t seed = rng();
  switch (rng.below(4)) {
    case 0: {
      const double d = rng.uniform(1.0, std::min(12.0, static_cast<double>(n - 1)));
      auto g = gen_er(n, d, seed);
      if (g.edge_count() == 0) g.add_edge(0, 1);
      return g;
    }
    case 1:
      return gen_ba(n, 2.0 * static_cast<double>(1 + rng.below(std::min<std::size_t>(4, (n - 1) / 2))), seed);
    case 2: {
      std::size_t k = 2 * (1 + rng.below(3));
      while (k >= n) k -= 2;
      return gen_ws(n, static_cast<double>(k), rng.uniform01(), seed);
    }
    default: {
      const std::size_t q = 2 + rng.below(2);
      const double nd = static_cast<double>(n);
      const double c_in = rng.uniform(2.0, std::min(20.0, nd));
      const double c_out = rng.uniform(0.5, std::min(6.0, nd));
      auto g = gen_sbm(SbmParams::equal_groups(n, q, c_in, c_out), seed).first;
      if (g.edge_count() == 0) g.add_edge(0, 1);
      return g;
    }
  }
}

// Uniform G(n, p) without any guarantee on connectivity.
inline Graph random_gnp(Rng& rng, std::size_t n, double p) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

inline Graph random_weighted(Rng& rng, std::size_t n, double p) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v, rng.uniform(0.1, 5.0));
  return g;
}

// Random insert/delete stream over n nodes. Deletions never empty the graph.
inline GraphStream random_stream(Rng& rng, std::size_t n, std::size_t steps, std::size_t max_ops) {
  GraphStream s;
  s.base = gen_er(n, 4.0, rng());
  if (s.base.edge_count() < 2) {
    s.base.add_edge(0, 1);
    s.base.add_edge(1, 2);
  }
  Graph cur = s.base;
  for (std::size_t k = 0; k < steps; ++k) {
    DeltaGraph d;
    d.timestamp = static_cast<double>(k + 1);
    const std::size_t ops = 1 + rng.below(max_ops);
    std::vector<std::pair<NodeId, NodeId>> used;
    auto fresh = [&](NodeId a, NodeId b) {
      const auto key = std::make_pair(std::min(a, b), std::max(a, b));
      for (const auto& x : used)
        if (x == key) return false;
      used.push_back(key);
      return true;
    };
    std::size_t deletions = 0;
    for (std::size_t i = 0; i < ops; ++i) {
      const auto u = static_cast<NodeId>(rng.below(n));
      const auto v = static_cast<NodeId>(rng.below(n));
      if (u == v || !fresh(u, v)) continue;
      if (cur.has_edge(u, v)) {
        if (cur.edge_count() > deletions + 1) {
          d.deletions.push_back({u, v});
          ++deletions;
        }
      } else {
        d.insertions.push_back({u, v, 1.0});
      }
    }
    cur = apply_delta(cur, d);
    s.deltas.push_back(std::move(d));
  }
  return s;
}

}  // namespace entrograph::testing
