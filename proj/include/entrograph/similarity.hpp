#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "entrograph/entropy.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/spectral.hpp"

namespace entrograph {

/// p_i = d_i / vol over the node set 0..n-1.
struct DegreeDistribution {
  std::vector<double> p;

  static DegreeDistribution from_graph(const Graph& g) {
    require(g.volume() > 0.0, ErrorCode::EmptyGraph, "degree distribution of an edgeless graph");
    DegreeDistribution d;
    d.p.reserve(g.node_count());
    for (double deg : g.degrees()) d.p.push_back(deg / g.volume());
    d.validate();
    return d;
  }

  void validate() const {
    double s = 0.0;
    for (double x : p) {
      require(x >= 0.0, ErrorCode::InvariantViolation, "negative probability");
      s += x;
    }
    require(std::abs(s - 1.0) <= 1e-10, ErrorCode::InvariantViolation, "probabilities do not sum to 1");
  }
};

namespace detail {

// Square-root argument that should be >= 0 in exact arithmetic.
inline double clamp_nonnegative(double x, double tol, const char* what) {
  if (x >= 0.0) return x;
  if (x > -tol) return 0.0;
  fail(ErrorCode::InternalConsistency, std::string(what) + " is negative (" + std::to_string(x) + ")");
}

inline void require_aligned(const Graph& g1, const Graph& g2) {
  if (g1.node_count() != g2.node_count()) {
    fail(ErrorCode::DimensionMismatch, "graphs have " + std::to_string(g1.node_count()) + " and " +
                                           std::to_string(g2.node_count()) + " nodes");
  }
}

}  // namespace detail

inline constexpr double kSqrtClampTolerance = 1e-12;
// The quantum divergence goes through three eigendecompositions; their
// round-off is a few ulps of log2 n per eigenvalue.
inline constexpr double kQjsClampTolerance = 1e-9;

/// Jensen-Shannon divergence in bits.
inline double jsd(const DegreeDistribution& p, const DegreeDistribution& q) {
  require(p.p.size() == q.p.size(), ErrorCode::DimensionMismatch, "distributions differ in support size");
  std::vector<double> mid(p.p.size());
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (p.p[i] + q.p[i]);
  const double v = shannon_entropy(mid) - 0.5 * shannon_entropy(p.p) - 0.5 * shannon_entropy(q.p);
  return detail::clamp_nonnegative(v, kSqrtClampTolerance, "Jensen-Shannon divergence");
}

/// Structural information distance: sqrt(H1(G_bar) - (H1(G1) + H1(G2)) / 2) where
/// G_bar has weights A1/(2 vol1) + A2/(2 vol2).
inline double d_si(const Graph& g1, const Graph& g2) {
  detail::require_aligned(g1, g2);
  require(g1.volume() > 0.0 && g2.volume() > 0.0, ErrorCode::EmptyGraph, "D_SI needs two graphs with edges");
  const double s1 = 0.5 / g1.volume();
  const double s2 = 0.5 / g2.volume();
  std::vector<double> mid(g1.node_count());
  for (NodeId i = 0; i < mid.size(); ++i) mid[i] = g1.degree(i) * s1 + g2.degree(i) * s2;
  const double h_bar = shannon_entropy(mid);
  const double v = h_bar - 0.5 * (structural_information(g1) + structural_information(g2));
  return std::sqrt(detail::clamp_nonnegative(v, kSqrtClampTolerance, "D_SI squared"));
}

/// A1/(2 vol1) + A2/(2 vol2); its volume is 1.
inline Graph averaged_graph(const Graph& g1, const Graph& g2) {
  detail::require_aligned(g1, g2);
  require(g1.volume() > 0.0 && g2.volume() > 0.0, ErrorCode::EmptyGraph, "averaging needs two graphs with edges");
  const double s1 = 0.5 / g1.volume();
  const double s2 = 0.5 / g2.volume();
  auto e1 = g1.edges();
  auto e2 = g2.edges();
  std::vector<Edge> merged;
  merged.reserve(e1.size() + e2.size());
  std::size_t i = 0;
  std::size_t j = 0;
  auto key_less = [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; };
  while (i < e1.size() || j < e2.size()) {
    if (j == e2.size() || (i < e1.size() && key_less(e1[i], e2[j]))) {
      merged.push_back({e1[i].u, e1[i].v, e1[i].weight * s1});
      ++i;
    } else if (i == e1.size() || key_less(e2[j], e1[i])) {
      merged.push_back({e2[j].u, e2[j].v, e2[j].weight * s2});
      ++j;
    } else {
      merged.push_back({e1[i].u, e1[i].v, e1[i].weight * s1 + e2[j].weight * s2});
      ++i;
      ++j;
    }
  }
  return Graph::from_edges(merged, g1.node_count());
}

struct QjsResult {
  double divergence = 0.0;  // Hvn(G_bar) - (Hvn(G1) + Hvn(G2)) / 2
  double distance = 0.0;    // sqrt(divergence)
};

inline QjsResult d_qjs(const Graph& g1, const Graph& g2) {
  const Graph bar = averaged_graph(g1, g2);
  const double h_bar = von_neumann_entropy(bar);
  const double v = h_bar - 0.5 * (von_neumann_entropy(g1) + von_neumann_entropy(g2));
  QjsResult r;
  r.divergence = detail::clamp_nonnegative(v, kQjsClampTolerance, "quantum Jensen-Shannon divergence");
  r.distance = std::sqrt(r.divergence);
  return r;
}

/// Vertex/edge overlap change rate. Node sets are the nodes with positive degree.
inline double veo(const Graph& g1, const Graph& g2) {
  std::size_t v1 = 0, v2 = 0, v_common = 0;
  const std::size_t n = std::max(g1.node_count(), g2.node_count());
  for (NodeId i = 0; i < n; ++i) {
    const bool in1 = i < g1.node_count() && g1.degree(i) > 0.0;
    const bool in2 = i < g2.node_count() && g2.degree(i) > 0.0;
    v1 += in1;
    v2 += in2;
    v_common += in1 && in2;
  }
  std::size_t e_common = 0;
  for (const auto& e : g1.edges()) e_common += g2.has_edge(e.u, e.v);
  const std::size_t total = v1 + v2 + g1.edge_count() + g2.edge_count();
  if (total == 0) return 0.0;
  return 1.0 - 2.0 * static_cast<double>(v_common + e_common) / static_cast<double>(total);
}

}  // namespace entrograph
