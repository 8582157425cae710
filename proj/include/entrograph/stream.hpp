#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entrograph/entropy.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/similarity.hpp"

namespace entrograph {

struct DistancePoint {
  double timestamp = 0.0;
  double d_si = 0.0;
  std::optional<double> d_qjs;  // sqrt of the quantum divergence
  std::optional<double> veo;
  std::size_t added = 0;
  std::size_t deleted = 0;
};

/// D_SI(G_k, G_{k+1}) for consecutive snapshots of a stream.
struct DistanceSeries {
  std::vector<DistancePoint> points;

  std::vector<double> d_si_values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.d_si);
    return out;
  }
};

/// Incremental D_SI over a graph stream.
///
/// Keeps the degree vector, the total edge weight m and H1 of the current
/// snapshot. Each delta is processed in time proportional to the number of
/// touched nodes: the untouched nodes enter H1 of the averaged graph only
/// through the aggregates y = sum d_i and z = sum f(d_i) over the touched set.
class IncrementalSimilarity {
 public:
  explicit IncrementalSimilarity(const Graph& base)
      : degrees_(base.degrees()), m_(0.5 * base.volume()), h1_(structural_information(base)) {
    if (!(m_ > 0.0)) fail(ErrorCode::ZeroVolumeSnapshot, "base snapshot has no edges");
    weights_.reserve(2 * base.edge_count());
    for (const auto& e : base.edges()) weights_.emplace(key(e.u, e.v), e.weight);
  }

  std::size_t node_count() const noexcept { return degrees_.size(); }
  double edge_weight_total() const noexcept { return m_; }
  double h1() const noexcept { return h1_; }
  const std::vector<double>& degrees() const noexcept { return degrees_; }

  /// |h1 - H1 recomputed from the degree vector|.
  double drift() const noexcept { return std::abs(h1_ - normalized_entropy(degrees_, 2.0 * m_)); }

  /// Applies one delta and returns D_SI between the snapshots before and after it.
  double advance(const DeltaGraph& delta) {
    delta.validate();
    const auto n = static_cast<NodeId>(degrees_.size());
    for (const auto& e : delta.insertions) {
      if (e.u >= n || e.v >= n) fail(ErrorCode::InvariantViolation, "insertion outside the node set");
      if (weights_.count(key(e.u, e.v))) {
        fail(ErrorCode::EdgeAlreadyExists,
             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") already exists");
      }
    }
    for (const auto& p : delta.deletions) {
      if (p.u >= n || p.v >= n || !weights_.count(key(p.u, p.v))) {
        fail(ErrorCode::MissingEdgeOnDelete,
             "edge (" + std::to_string(p.u) + "," + std::to_string(p.v) + ") is not present");
      }
    }
    if (delta.empty()) return 0.0;

    const auto changes = delta_degrees(delta, [&](NodeId u, NodeId v) { return weights_.at(key(u, v)); });
    double dm = 0.0;
    for (const auto& e : delta.insertions) dm += e.weight;
    for (const auto& p : delta.deletions) dm -= weights_.at(key(p.u, p.v));

    const double m = m_;
    const double m_next = m + dm;
    for (const auto& c : changes) {
      if (degrees_[c.node] + c.delta < -1e-12 * std::max(1.0, degrees_[c.node])) {
        fail(ErrorCode::NegativeDegree, "delta drives node " + std::to_string(c.node) + " below degree 0");
      }
    }
    if (!(m_next > 0.0) || m_next <= 1e-12 * m) fail(ErrorCode::ZeroVolumeSnapshot, "delta empties the graph");

    double a = 0.0, b = 0.0, y = 0.0, z = 0.0;
    for (const auto& c : changes) {
      const double d = degrees_[c.node];
      const double d_next = std::max(0.0, d + c.delta);
      a += xlog2x(d_next) - xlog2x(d);
      y += d;
      z += xlog2x(d);
      b += xlog2x(d / (4.0 * m) + d_next / (4.0 * m_next));
    }
    const double c = (2.0 * m + dm) / (4.0 * m * m_next);
    const double vol = 2.0 * m;
    const double vol_next = 2.0 * m_next;
    const double sum_f = xlog2x(vol) - vol * h1_;  // sum_i f(d_i) before the delta

    const double h1_next = (xlog2x(vol_next) - a - sum_f) / vol_next;
    const double h1_bar = -b - (vol - y) * xlog2x(c) - c * (sum_f - z);
    const double sq = h1_bar - 0.5 * (h1_ + h1_next);

    for (const auto& cg : changes) degrees_[cg.node] = std::max(0.0, degrees_[cg.node] + cg.delta);
    for (const auto& p : delta.deletions) weights_.erase(key(p.u, p.v));
    for (const auto& e : delta.insertions) weights_.emplace(key(e.u, e.v), e.weight);
    m_ = m_next;
    h1_ = h1_next;
    return std::sqrt(detail::clamp_nonnegative(sq, kSqrtClampTolerance, "incremental D_SI squared"));
  }

 private:
  static std::uint64_t key(NodeId u, NodeId v) noexcept {
    if (u > v) std::swap(u, v);
    return (std::uint64_t{u} << 32) | v;
  }

  std::vector<double> degrees_;
  double m_ = 0.0;
  double h1_ = 0.0;
  std::unordered_map<std::uint64_t, double> weights_;
};

struct StreamOptions {
  bool with_qjs = false;
  bool with_veo = false;
};

/// IncreSim. Extra measures need materialized snapshots and cost O(n + m) or
/// more per step; D_SI alone stays proportional to the touched nodes.
inline DistanceSeries incre_sim(const GraphStream& stream, const StreamOptions& opts = {}) {
  stream.validate();
  IncrementalSimilarity engine(stream.base);
  DistanceSeries series;
  series.points.reserve(stream.deltas.size());
  const bool materialize = opts.with_qjs || opts.with_veo;
  Graph current = materialize ? stream.base : Graph{};
  for (const auto& delta : stream.deltas) {
    DistancePoint pt;
    pt.timestamp = delta.timestamp;
    pt.added = delta.insertions.size();
    pt.deleted = delta.deletions.size();
    pt.d_si = engine.advance(delta);
    if (materialize) {
      Graph next = apply_delta(current, delta);
      if (opts.with_qjs) pt.d_qjs = d_qjs(current, next).distance;
      if (opts.with_veo) pt.veo = veo(current, next);
      current = std::move(next);
    }
    series.points.push_back(pt);
  }
  return series;
}

/// Reference implementation: D_SI recomputed from full snapshots.
inline DistanceSeries scratch_sim(const GraphStream& stream) {
  stream.validate();
  DistanceSeries series;
  Graph current = stream.base;
  for (const auto& delta : stream.deltas) {
    Graph next = apply_delta(current, delta);
    require(next.volume() > 0.0, ErrorCode::ZeroVolumeSnapshot, "delta empties the graph");
    series.points.push_back({delta.timestamp, d_si(current, next), std::nullopt, std::nullopt,
                             delta.insertions.size(), delta.deletions.size()});
    current = std::move(next);
  }
  return series;
}

}  // namespace entrograph
