#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entrograph/graph.hpp"
#include "entrograph/partition.hpp"
#include "entrograph/random.hpp"

namespace entrograph {

namespace detail {

inline void check_model_args(std::size_t n, double avg_degree) {
  require(n >= 2, ErrorCode::InvalidParameter, "random graph models need n >= 2");
  require(avg_degree >= 0.0 && avg_degree <= static_cast<double>(n - 1), ErrorCode::InvalidParameter,
          "average degree must lie in [0, n-1]");
}

}  // namespace detail

/// G(n, p) with p = avg_degree / (n - 1). Uses geometric skipping, so the cost
/// is proportional to the number of edges.
inline Graph gen_er(std::size_t n, double avg_degree, std::uint64_t seed) {
  detail::check_model_args(n, avg_degree);
  const double p = avg_degree / static_cast<double>(n - 1);
  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(edges, n);
  }
  if (p > 0.0) {
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = rng.uniform01();
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
    }
  }
  return Graph::from_edges(edges, n);
}

/// Barabasi-Albert preferential attachment with m = round(avg_degree / 2) edges
/// per new node, grown from a star on m + 1 nodes.
inline Graph gen_ba(std::size_t n, double avg_degree, std::uint64_t seed) {
  detail::check_model_args(n, avg_degree);
  const auto m = static_cast<std::size_t>(std::llround(avg_degree / 2.0));
  require(m >= 1 && m < n, ErrorCode::InvalidParameter, "BA needs 1 <= round(avg_degree/2) < n");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<NodeId> repeated;  // each node appears once per unit of degree
  for (NodeId leaf = 1; leaf <= m; ++leaf) {
    edges.push_back({0, leaf});
    repeated.push_back(0);
    repeated.push_back(leaf);
  }
  std::vector<NodeId> targets;
  std::vector<char> picked(n, 0);
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = repeated[rng.below(repeated.size())];
      if (!picked[t]) {
        picked[t] = 1;
        targets.push_back(t);
      }
    }
    for (NodeId t : targets) {
      picked[t] = 0;
      edges.push_back({t, v});
      repeated.push_back(t);
      repeated.push_back(v);
    }
  }
  return Graph::from_edges(edges, n);
}

/// Watts-Strogatz: ring lattice with k = avg_degree neighbours per node, then each
/// lattice edge (u, u+j) is rewired to a uniform non-neighbour with probability p.
inline Graph gen_ws(std::size_t n, double avg_degree, double rewire_p, std::uint64_t seed) {
  detail::check_model_args(n, avg_degree);
  require(rewire_p >= 0.0 && rewire_p <= 1.0, ErrorCode::InvalidParameter, "rewire probability must lie in [0, 1]");
  const auto k = static_cast<std::size_t>(std::llround(avg_degree));
  require(static_cast<double>(k) == avg_degree && k % 2 == 0, ErrorCode::InvalidParameter,
          "WS needs an even integer average degree");
  require(k < n, ErrorCode::InvalidParameter, "WS needs k < n");
  Graph g(n);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const auto v = static_cast<NodeId>((u + j) % n);
      if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
  }
  if (rewire_p == 0.0) return g;
  Rng rng(seed);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      const auto v = static_cast<NodeId>((u + j) % n);
      if (!rng.bernoulli(rewire_p)) continue;
      if (!g.has_edge(u, v) || g.neighbors(u).size() >= n - 1) continue;
      NodeId w = 0;
      do {
        w = static_cast<NodeId>(rng.below(n));
      } while (w == u || g.has_edge(u, w));
      g.remove_edge(u, v);
      g.add_edge(u, w);
    }
  }
  return g;
}

struct SbmParams {
  std::size_t q = 2;
  std::vector<std::size_t> sizes;
  double c_in = 0.0;
  double c_out = 0.0;
  std::size_t n = 0;

  /// q groups of (nearly) equal size; the first n % q groups get one extra node.
  static SbmParams equal_groups(std::size_t n, std::size_t q, double c_in, double c_out) {
    require(q >= 1 && q <= n, ErrorCode::InvalidParameter, "need 1 <= q <= n groups");
    SbmParams p;
    p.q = q;
    p.n = n;
    p.c_in = c_in;
    p.c_out = c_out;
    for (std::size_t g = 0; g < q; ++g) p.sizes.push_back(n / q + (g < n % q ? 1 : 0));
    return p;
  }

  void validate() const {
    require(q >= 1 && sizes.size() == q, ErrorCode::InvalidParameter, "sizes must list one entry per group");
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    require(total == n, ErrorCode::InvalidParameter, "group sizes must sum to n");
    require(n >= 2, ErrorCode::InvalidParameter, "SBM needs n >= 2");
    const double nn = static_cast<double>(n);
    require(c_in >= 0.0 && c_in <= nn && c_out >= 0.0 && c_out <= nn, ErrorCode::InvalidParameter,
            "affinities must satisfy 0 <= c <= n");
  }
};

/// Planted partition: group g holds a contiguous block of node ids.
inline std::pair<Graph, Partition> gen_sbm(const SbmParams& params, std::uint64_t seed) {
  params.validate();
  const std::size_t n = params.n;
  std::vector<std::uint32_t> labels;
  labels.reserve(n);
  for (std::uint32_t g = 0; g < params.q; ++g) labels.insert(labels.end(), params.sizes[g], g);
  const double p_in = params.c_in / static_cast<double>(n);
  const double p_out = params.c_out / static_cast<double>(n);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(labels[u] == labels[v] ? p_in : p_out)) edges.push_back({u, v});
    }
  }
  return {Graph::from_edges(edges, n), Partition(std::move(labels), static_cast<std::uint32_t>(params.q))};
}

// Deterministic families.

inline Graph complete_graph(std::size_t n) {
  require(n >= 2, ErrorCode::InvalidParameter, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(edges, n);
}

/// K_{a,b}: nodes 0..a-1 on one side, a..a+b-1 on the other.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, ErrorCode::InvalidParameter, "bipartite sides need at least one node");
  std::vector<Edge> edges;
  for (NodeId u = 0; u < a; ++u)
    for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<NodeId>(a + j)});
  return Graph::from_edges(edges, a + b);
}

inline Graph path_graph(std::size_t n) {
  require(n >= 2, ErrorCode::InvalidParameter, "path needs n >= 2");
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(edges, n);
}

inline Graph ring_graph(std::size_t n) {
  require(n >= 3, ErrorCode::InvalidParameter, "ring needs n >= 3");
  std::vector<Edge> edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  edges.push_back({0, static_cast<NodeId>(n - 1)});
  return Graph::from_edges(edges, n);
}

/// K_{1,n-1} with centre 0.
inline Graph star_graph(std::size_t n) {
  require(n >= 2, ErrorCode::InvalidParameter, "star needs n >= 2");
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(edges, n);
}

enum class Family { Complete, Bipartite, Path, Ring, Star };

struct FamilySpec {
  Family family = Family::Complete;
  std::size_t n = 0;  // for bipartite: a
  std::size_t b = 0;  // bipartite only

  std::size_t node_count() const noexcept { return family == Family::Bipartite ? n + b : n; }
};

inline std::string to_string(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::Bipartite: return "bipartite";
    case Family::Path: return "path";
    case Family::Ring: return "ring";
    case Family::Star: return "star";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "complete") return Family::Complete;
  if (name == "bipartite") return Family::Bipartite;
  if (name == "path") return Family::Path;
  if (name == "ring") return Family::Ring;
  if (name == "star") return Family::Star;
  fail(ErrorCode::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

inline Graph gen_named(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Complete: return complete_graph(spec.n);
    case Family::Bipartite: return complete_bipartite_graph(spec.n, spec.b);
    case Family::Path: return path_graph(spec.n);
    case Family::Ring: return ring_graph(spec.n);
    case Family::Star: return star_graph(spec.n);
  }
  fail(ErrorCode::InvalidParameter, "unknown family");
}

/// Same topology with i.i.d. weights drawn uniformly from [lo, hi].
inline Graph with_uniform_weights(const Graph& g, double lo, double hi, std::uint64_t seed) {
  require(lo > 0.0 && hi >= lo, ErrorCode::InvalidParameter, "weight range must satisfy 0 < lo <= hi");
  Rng rng(seed);
  auto edges = g.edges();
  for (auto& e : edges) e.weight = lo == hi ? lo : rng.uniform(lo, hi);
  return Graph::from_edges(edges, g.node_count());
}

}  // namespace entrograph
