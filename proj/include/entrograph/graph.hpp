#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entrograph/error.hpp"

namespace entrograph {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Undirected graph with positive edge weights on the dense node set 0..n-1.
///
/// Adjacency rows are kept sorted by neighbor id. Degrees are recomputed from
/// the sorted row after every mutation, so the cached degree of a node is always
/// bit-identical to a from-scratch sum regardless of the mutation history.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n), degrees_(n, 0.0) {}

  /// Builds a graph from an edge list. The node count is max index + 1 (or
  /// `min_nodes` if larger). Rejects self-loops, repeated pairs in either
  /// orientation, and non-positive or non-finite weights.
  static Graph from_edges(std::span<const Edge> edges, std::size_t min_nodes = 0) {
    std::size_t n = min_nodes;
    for (const auto& e : edges) n = std::max<std::size_t>(n, std::size_t{std::max(e.u, e.v)} + 1);
    Graph g(n);
    for (const auto& e : edges) {
      check_edge(e.u, e.v, e.weight);
      g.adjacency_[e.u].push_back({e.v, e.weight});
      g.adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (NodeId i = 0; i < n; ++i) {
      auto& row = g.adjacency_[i];
      std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
      for (std::size_t k = 1; k < row.size(); ++k) {
        if (row[k].node == row[k - 1].node) {
          fail(ErrorCode::DuplicateEdge,
               "edge (" + std::to_string(i) + "," + std::to_string(row[k].node) + ") appears more than once");
        }
      }
      g.refresh_degree(i);
    }
    g.edge_count_ = edges.size();
    g.refresh_volume();
    return g;
  }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  double degree(NodeId i) const { return degrees_.at(i); }
  const std::vector<double>& degrees() const noexcept { return degrees_; }
  double volume() const noexcept { return volume_; }

  std::span<const Neighbor> neighbors(NodeId i) const { return adjacency_.at(i); }

  double weight(NodeId u, NodeId v) const {
    if (u >= node_count() || v >= node_count()) return 0.0;
    const auto& row = adjacency_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v, [](const Neighbor& a, NodeId id) { return a.node < id; });
    return (it != row.end() && it->node == v) ? it->weight : 0.0;
  }

  bool has_edge(NodeId u, NodeId v) const { return weight(u, v) > 0.0; }

  /// All edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < node_count(); ++u) {
      for (const auto& nb : adjacency_[u]) {
        if (u < nb.node) out.push_back({u, nb.node, nb.weight});
      }
    }
    return out;
  }

  bool is_unweighted() const noexcept {
    for (const auto& row : adjacency_) {
      for (const auto& nb : row) {
        if (nb.weight != 1.0) return false;
      }
    }
    return true;
  }

  double max_degree() const noexcept {
    double best = 0.0;
    for (double d : degrees_) best = std::max(best, d);
    return best;
  }

  /// Minimum degree over nodes with positive degree; 0 for an edgeless graph.
  double min_positive_degree() const noexcept {
    double best = 0.0;
    for (double d : degrees_) {
      if (d > 0.0 && (best == 0.0 || d < best)) best = d;
    }
    return best;
  }

  std::size_t isolated_count() const noexcept {
    return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), 0.0));
  }

  /// Grows the node set with isolated nodes.
  void ensure_nodes(std::size_t n) {
    if (n > node_count()) {
      adjacency_.resize(n);
      degrees_.resize(n, 0.0);
    }
  }

  // Single-writer in-place mutation. Prefer apply_delta() for value semantics.

  void add_edge(NodeId u, NodeId v, double w = 1.0) {
    check_edge(u, v, w);
    ensure_nodes(std::size_t{std::max(u, v)} + 1);
    if (has_edge(u, v)) {
      fail(ErrorCode::EdgeAlreadyExists, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already exists");
    }
    insert_sorted(adjacency_[u], {v, w});
    insert_sorted(adjacency_[v], {u, w});
    ++edge_count_;
    refresh_degree(u);
    refresh_degree(v);
    refresh_volume();
  }

  /// Removes an existing edge and returns its weight.
  double remove_edge(NodeId u, NodeId v) {
    const double w = weight(u, v);
    if (w <= 0.0) {
      fail(ErrorCode::MissingEdgeOnDelete, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not present");
    }
    erase_sorted(adjacency_[u], v);
    erase_sorted(adjacency_[v], u);
    --edge_count_;
    refresh_degree(u);
    refresh_degree(v);
    refresh_volume();
    return w;
  }

  /// Multiplies every edge weight by `factor` (> 0).
  Graph scaled(double factor) const {
    require(factor > 0.0, ErrorCode::InvalidParameter, "scale factor must be positive");
    Graph g = *this;
    for (auto& row : g.adjacency_) {
      for (auto& nb : row) nb.weight *= factor;
    }
    for (NodeId i = 0; i < g.node_count(); ++i) g.refresh_degree(i);
    g.refresh_volume();
    return g;
  }

  /// Recomputes every degree from adjacency and compares with the cache.
  bool degrees_consistent() const {
    for (NodeId i = 0; i < node_count(); ++i) {
      if (row_sum(adjacency_[i]) != degrees_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  static void check_edge(NodeId u, NodeId v, double w) {
    if (u == v) fail(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(u));
    if (!(w > 0.0) || !std::isfinite(w)) {
      fail(ErrorCode::NonPositiveWeight,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has weight " + std::to_string(w));
    }
  }

  static double row_sum(const std::vector<Neighbor>& row) noexcept {
    double s = 0.0;
    for (const auto& nb : row) s += nb.weight;
    return s;
  }

  static void insert_sorted(std::vector<Neighbor>& row, Neighbor nb) {
    auto it = std::lower_bound(row.begin(), row.end(), nb.node,
                               [](const Neighbor& a, NodeId id) { return a.node < id; });
    row.insert(it, nb);
  }

  static void erase_sorted(std::vector<Neighbor>& row, NodeId id) {
    auto it = std::lower_bound(row.begin(), row.end(), id, [](const Neighbor& a, NodeId x) { return a.node < x; });
    row.erase(it);
  }

  void refresh_degree(NodeId i) { degrees_[i] = row_sum(adjacency_[i]); }
  void refresh_volume() { volume_ = std::accumulate(degrees_.begin(), degrees_.end(), 0.0); }

  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> degrees_;
  double volume_ = 0.0;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::span<const Edge> edges, std::size_t min_nodes = 0) {
  return Graph::from_edges(edges, min_nodes);
}

/// True when every node is reachable from node 0. Graphs with n <= 1 count as connected.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(u)) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++reached;
        stack.push_back(nb.node);
      }
    }
  }
  return reached == n;
}

/// Disjoint union; nodes of `b` are shifted by a.node_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<NodeId>(a.node_count());
  for (auto e : b.edges()) edges.push_back({e.u + shift, e.v + shift, e.weight});
  return Graph::from_edges(edges, a.node_count() + b.node_count());
}

// ---------------------------------------------------------------------------
// Streams

struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const NodePair&, const NodePair&) = default;
};

struct DegreeChange {
  NodeId node = 0;
  double delta = 0.0;
};

/// One timestamped batch of edge insertions and deletions.
struct DeltaGraph {
  double timestamp = 0.0;
  std::vector<Edge> insertions;
  std::vector<NodePair> deletions;

  bool empty() const noexcept { return insertions.empty() && deletions.empty(); }

  /// Rejects self-loops, repeated operations on one pair, and pairs that are
  /// both inserted and deleted.
  void validate() const {
    std::vector<std::pair<NodeId, NodeId>> keys;
    keys.reserve(insertions.size() + deletions.size());
    for (const auto& e : insertions) {
      if (e.u == e.v) fail(ErrorCode::SelfLoop, "insertion of self-loop at node " + std::to_string(e.u));
      if (!(e.weight > 0.0)) fail(ErrorCode::NonPositiveWeight, "insertion with non-positive weight");
      keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    for (const auto& p : deletions) {
      if (p.u == p.v) fail(ErrorCode::SelfLoop, "deletion of self-loop at node " + std::to_string(p.u));
      keys.emplace_back(std::min(p.u, p.v), std::max(p.u, p.v));
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
      fail(ErrorCode::InvariantViolation, "delta at t=" + std::to_string(timestamp) +
                                              " touches the same pair twice (insert/delete overlap or repeat)");
    }
  }

  /// V_k: nodes covered by the operations, ascending.
  std::vector<NodeId> touched_nodes() const {
    std::vector<NodeId> nodes;
    for (const auto& e : insertions) {
      nodes.push_back(e.u);
      nodes.push_back(e.v);
    }
    for (const auto& p : deletions) {
      nodes.push_back(p.u);
      nodes.push_back(p.v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
  }

  NodeId max_node() const noexcept {
    NodeId m = 0;
    for (const auto& e : insertions) m = std::max({m, e.u, e.v});
    for (const auto& p : deletions) m = std::max({m, p.u, p.v});
    return m;
  }
};

/// Signed degree change per touched node. `deleted_weight(u, v)` supplies the
/// weight removed by each deletion (1 for unweighted streams).
template <typename DeletedWeight>
std::vector<DegreeChange> delta_degrees(const DeltaGraph& delta, DeletedWeight&& deleted_weight) {
  std::vector<DegreeChange> changes;
  changes.reserve(2 * (delta.insertions.size() + delta.deletions.size()));
  for (const auto& e : delta.insertions) {
    changes.push_back({e.u, e.weight});
    changes.push_back({e.v, e.weight});
  }
  for (const auto& p : delta.deletions) {
    const double w = deleted_weight(p.u, p.v);
    changes.push_back({p.u, -w});
    changes.push_back({p.v, -w});
  }
  std::sort(changes.begin(), changes.end(), [](const DegreeChange& a, const DegreeChange& b) { return a.node < b.node; });
  std::vector<DegreeChange> merged;
  for (const auto& c : changes) {
    if (!merged.empty() && merged.back().node == c.node) {
      merged.back().delta += c.delta;
    } else {
      merged.push_back(c);
    }
  }
  return merged;
}

inline std::vector<DegreeChange> delta_degrees(const DeltaGraph& delta) {
  return delta_degrees(delta, [](NodeId, NodeId) { return 1.0; });
}

/// Applies a delta to a copy of `g`.
inline Graph apply_delta(const Graph& g, const DeltaGraph& delta) {
  delta.validate();
  Graph out = g;
  out.ensure_nodes(std::size_t{delta.max_node()} + 1);
  for (const auto& p : delta.deletions) out.remove_edge(p.u, p.v);
  for (const auto& e : delta.insertions) out.add_edge(e.u, e.v, e.weight);
  return out;
}

/// The delta that undoes `delta` when applied to apply_delta(before, delta).
inline DeltaGraph reverse_delta(const Graph& before, const DeltaGraph& delta) {
  DeltaGraph rev;
  rev.timestamp = delta.timestamp;
  for (const auto& e : delta.insertions) rev.deletions.push_back({e.u, e.v});
  for (const auto& p : delta.deletions) rev.insertions.push_back({p.u, p.v, before.weight(p.u, p.v)});
  return rev;
}

/// Base graph followed by deltas with strictly increasing timestamps.
struct GraphStream {
  Graph base;
  double base_timestamp = 0.0;
  std::vector<DeltaGraph> deltas;

  void validate() const {
    double prev = base_timestamp;
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      if (!(deltas[k].timestamp > prev)) {
        fail(ErrorCode::InvariantViolation, "delta " + std::to_string(k) + " has timestamp " +
                                                std::to_string(deltas[k].timestamp) + " not after " +
                                                std::to_string(prev));
      }
      prev = deltas[k].timestamp;
      deltas[k].validate();
      if (!deltas[k].empty() && deltas[k].max_node() >= base.node_count()) {
        fail(ErrorCode::InvariantViolation, "delta " + std::to_string(k) + " references node " +
                                                std::to_string(deltas[k].max_node()) + " outside the base node set");
      }
    }
  }

  /// Materializes G_1..G_K. Costs O(K * |E|); meant for scratch checks.
  std::vector<Graph> snapshots() const {
    std::vector<Graph> out;
    out.reserve(deltas.size() + 1);
    out.push_back(base);
    for (const auto& d : deltas) out.push_back(apply_delta(out.back(), d));
    return out;
  }
};

}  // namespace entrograph
