#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "entrograph/graph.hpp"
#include "entrograph/partition.hpp"

namespace entrograph {

struct LoadOptions {
  // Drop self-loops and repeated pairs (first occurrence wins) instead of
  // rejecting them. Useful for raw public datasets.
  bool simplify = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

inline NodeId parse_node(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value > 0xfffffffeULL) {
    parse_fail(line, "invalid node index '" + std::string(tok) + "'");
  }
  return static_cast<NodeId>(value);
}

inline double parse_real(std::string_view tok, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    parse_fail(line, "invalid number '" + std::string(tok) + "'");
  }
  return value;
}

inline std::string format_real(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

// "# nodes N" records trailing isolated nodes so that write/read round-trips.
inline bool parse_nodes_hint(std::string_view comment, std::size_t& n) {
  auto toks = split_ws(comment.substr(1));
  if (toks.size() >= 2 && toks[0] == "nodes") {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(toks[1].data(), toks[1].data() + toks[1].size(), value);
    if (ec == std::errc{} && ptr == toks[1].data() + toks[1].size()) {
      n = static_cast<std::size_t>(value);
      return true;
    }
  }
  return false;
}

struct PendingEdge {
  Edge edge;
  std::size_t line = 0;
};

inline void check_pending(const PendingEdge& p) {
  if (p.edge.u == p.edge.v) {
    fail(ErrorCode::InvariantViolation, "line " + std::to_string(p.line) + ": self-loop at node " +
                                            std::to_string(p.edge.u));
  }
  if (!(p.edge.weight > 0.0) || !std::isfinite(p.edge.weight)) {
    fail(ErrorCode::InvariantViolation, "line " + std::to_string(p.line) + ": non-positive weight");
  }
}

inline Graph graph_from_pending(std::vector<PendingEdge> pending, std::size_t min_nodes, const LoadOptions& opts) {
  std::vector<Edge> edges;
  edges.reserve(pending.size());
  if (opts.simplify) {
    std::vector<std::pair<std::pair<NodeId, NodeId>, std::size_t>> keys;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const auto& e = pending[i].edge;
      if (e.u == e.v) continue;
      keys.push_back({{std::min(e.u, e.v), std::max(e.u, e.v)}, i});
    }
    std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (k > 0 && keys[k].first == keys[k - 1].first) continue;
      check_pending(pending[keys[k].second]);
      edges.push_back(pending[keys[k].second].edge);
    }
    for (const auto& p : pending) min_nodes = std::max<std::size_t>(min_nodes, std::size_t{std::max(p.edge.u, p.edge.v)} + 1);
  } else {
    std::vector<std::pair<std::pair<NodeId, NodeId>, std::size_t>> keys;
    for (const auto& p : pending) {
      check_pending(p);
      keys.push_back({{std::min(p.edge.u, p.edge.v), std::max(p.edge.u, p.edge.v)}, p.line});
      edges.push_back(p.edge);
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t k = 1; k < keys.size(); ++k) {
      if (keys[k].first == keys[k - 1].first) {
        fail(ErrorCode::InvariantViolation, "line " + std::to_string(std::max(keys[k].second, keys[k - 1].second)) +
                                                ": duplicate edge (" + std::to_string(keys[k].first.first) + "," +
                                                std::to_string(keys[k].first.second) + ")");
      }
    }
  }
  return Graph::from_edges(edges, min_nodes);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

/// Reads `u v [w]` lines. '#' starts a comment line; blank lines are skipped.
inline Graph read_edge_list(std::istream& in, const LoadOptions& opts = {}) {
  std::vector<detail::PendingEdge> pending;
  std::size_t min_nodes = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = detail::trim(raw);
    if (s.empty()) continue;
    if (s.front() == '#') {
      std::size_t hint = 0;
      if (detail::parse_nodes_hint(s, hint)) min_nodes = std::max(min_nodes, hint);
      continue;
    }
    const auto toks = detail::split_ws(s);
    if (toks.size() != 2 && toks.size() != 3) detail::parse_fail(line, "expected 'u v [w]'");
    detail::PendingEdge p;
    p.line = line;
    p.edge.u = detail::parse_node(toks[0], line);
    p.edge.v = detail::parse_node(toks[1], line);
    if (toks.size() == 3) p.edge.weight = detail::parse_real(toks[2], line);
    pending.push_back(p);
  }
  return detail::graph_from_pending(std::move(pending), min_nodes, opts);
}

inline Graph load_edge_list(const std::string& path, const LoadOptions& opts = {}) {
  auto in = detail::open_input(path);
  return read_edge_list(in, opts);
}

inline Graph parse_edge_list(std::string_view text, const LoadOptions& opts = {}) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in, opts);
}

/// Writes an edge list that read_edge_list turns back into an identical graph.
/// Weights are omitted when every edge has weight 1.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  const bool weighted = !g.is_unweighted();
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (weighted) out << ' ' << detail::format_real(e.weight);
    out << '\n';
  }
}

inline void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  write_edge_list(out, g);
}

/// Stream format:
///   BASE [n]
///   u v [w]
///   DELTA t
///   + u v [w]
///   - u v
inline GraphStream read_stream(std::istream& in) {
  enum class Section { None, Base, Delta };
  Section section = Section::None;
  std::vector<detail::PendingEdge> base_edges;
  std::size_t min_nodes = 0;
  GraphStream stream;
  bool seen_base = false;
  std::string raw;
  std::size_t line = 0;
  NodeId max_seen = 0;
  bool any_node = false;
  auto note = [&](NodeId a, NodeId b) {
    max_seen = std::max({max_seen, a, b});
    any_node = true;
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto s = detail::trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto toks = detail::split_ws(s);
    if (toks[0] == "BASE") {
      if (seen_base) detail::parse_fail(line, "second BASE block");
      if (toks.size() > 2) detail::parse_fail(line, "expected 'BASE [n]'");
      if (toks.size() == 2) min_nodes = detail::parse_node(toks[1], line);
      seen_base = true;
      section = Section::Base;
      continue;
    }
    if (toks[0] == "DELTA") {
      if (!seen_base) detail::parse_fail(line, "DELTA before BASE");
      if (toks.size() != 2) detail::parse_fail(line, "expected 'DELTA t'");
      DeltaGraph d;
      d.timestamp = detail::parse_real(toks[1], line);
      stream.deltas.push_back(std::move(d));
      section = Section::Delta;
      continue;
    }
    switch (section) {
      case Section::None:
        detail::parse_fail(line, "edge line before BASE");
      case Section::Base: {
        if (toks.size() != 2 && toks.size() != 3) detail::parse_fail(line, "expected 'u v [w]'");
        detail::PendingEdge p;
        p.line = line;
        p.edge.u = detail::parse_node(toks[0], line);
        p.edge.v = detail::parse_node(toks[1], line);
        if (toks.size() == 3) p.edge.weight = detail::parse_real(toks[2], line);
        note(p.edge.u, p.edge.v);
        base_edges.push_back(p);
        break;
      }
      case Section::Delta: {
        auto& d = stream.deltas.back();
        if (toks[0] == "+") {
          if (toks.size() != 3 && toks.size() != 4) detail::parse_fail(line, "expected '+ u v [w]'");
          Edge e{detail::parse_node(toks[1], line), detail::parse_node(toks[2], line), 1.0};
          if (toks.size() == 4) e.weight = detail::parse_real(toks[3], line);
          if (e.u == e.v) fail(ErrorCode::InvariantViolation, "line " + std::to_string(line) + ": self-loop");
          note(e.u, e.v);
          d.insertions.push_back(e);
        } else if (toks[0] == "-") {
          if (toks.size() != 3) detail::parse_fail(line, "expected '- u v'");
          NodePair p{detail::parse_node(toks[1], line), detail::parse_node(toks[2], line)};
          if (p.u == p.v) fail(ErrorCode::InvariantViolation, "line " + std::to_string(line) + ": self-loop");
          note(p.u, p.v);
          d.deletions.push_back(p);
        } else {
          detail::parse_fail(line, "expected '+' or '-' operation");
        }
        break;
      }
    }
  }
  if (!seen_base) fail(ErrorCode::ParseError, "stream has no BASE block");
  if (any_node) min_nodes = std::max<std::size_t>(min_nodes, std::size_t{max_seen} + 1);
  stream.base = detail::graph_from_pending(std::move(base_edges), min_nodes, {});
  stream.validate();
  return stream;
}

inline GraphStream load_stream(const std::string& path) {
  auto in = detail::open_input(path);
  return read_stream(in);
}

inline GraphStream parse_stream(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_stream(in);
}

inline void write_stream(std::ostream& out, const GraphStream& stream) {
  out << "BASE " << stream.base.node_count() << '\n';
  const bool weighted = !stream.base.is_unweighted();
  for (const auto& e : stream.base.edges()) {
    out << e.u << ' ' << e.v;
    if (weighted) out << ' ' << detail::format_real(e.weight);
    out << '\n';
  }
  for (const auto& d : stream.deltas) {
    out << "DELTA " << detail::format_real(d.timestamp) << '\n';
    for (const auto& e : d.insertions) {
      out << "+ " << e.u << ' ' << e.v;
      if (e.weight != 1.0) out << ' ' << detail::format_real(e.weight);
      out << '\n';
    }
    for (const auto& p : d.deletions) out << "- " << p.u << ' ' << p.v << '\n';
  }
}

/// Partition file: `node label` per line, '#' comments. Every node 0..n-1 must
/// appear exactly once; k is max label + 1.
inline Partition read_partition(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = detail::trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto toks = detail::split_ws(s);
    if (toks.size() != 2) detail::parse_fail(line, "expected 'node label'");
    entries.emplace_back(detail::parse_node(toks[0], line), detail::parse_node(toks[1], line));
  }
  std::sort(entries.begin(), entries.end());
  std::vector<std::uint32_t> labels;
  std::uint32_t k = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != i) {
      fail(ErrorCode::InvariantViolation, "partition file misses or repeats node " + std::to_string(i));
    }
    labels.push_back(entries[i].second);
    k = std::max(k, entries[i].second + 1);
  }
  return Partition(std::move(labels), k);
}

inline Partition load_partition(const std::string& path) {
  auto in = detail::open_input(path);
  return read_partition(in);
}

inline void write_partition(std::ostream& out, const Partition& p) {
  out << "# clusters " << p.k << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) out << i << ' ' << p.labels[i] << '\n';
}

struct TimedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double t = 0.0;
};

/// `u v t` lines, '#' comments.
inline std::vector<TimedEdge> read_temporal_edges(std::istream& in) {
  std::vector<TimedEdge> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = detail::trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto toks = detail::split_ws(s);
    if (toks.size() != 3) detail::parse_fail(line, "expected 'u v t'");
    out.push_back({detail::parse_node(toks[0], line), detail::parse_node(toks[1], line),
                   detail::parse_real(toks[2], line)});
    if (!std::isfinite(out.back().t)) detail::parse_fail(line, "timestamp is not finite");
  }
  return out;
}

/// Buckets timestamped edges into windows [t0 + kw, t0 + (k+1)w) and turns the
/// sequence of non-empty window graphs into a stream. Self-loops are dropped and
/// repeated pairs within a window collapse to one unit edge. Empty windows are
/// skipped, since a snapshot without edges has no degree distribution.
inline GraphStream temporal_to_stream(const std::vector<TimedEdge>& edges, double width) {
  require(width > 0.0 && std::isfinite(width), ErrorCode::InvalidParameter, "interval width must be positive");
  require(!edges.empty(), ErrorCode::EmptyGraph, "temporal edge list is empty");
  double t0 = edges.front().t;
  NodeId max_node = 0;
  for (const auto& e : edges) {
    t0 = std::min(t0, e.t);
    max_node = std::max({max_node, e.u, e.v});
  }
  std::map<std::int64_t, std::vector<std::pair<NodeId, NodeId>>> windows;
  for (const auto& e : edges) {
    if (e.u == e.v) continue;
    const auto k = static_cast<std::int64_t>(std::floor((e.t - t0) / width));
    windows[k].emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  require(!windows.empty(), ErrorCode::EmptyGraph, "temporal edge list has no usable edges");
  for (auto& [k, pairs] : windows) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }
  const std::size_t n = std::size_t{max_node} + 1;
  GraphStream stream;
  auto it = windows.begin();
  {
    std::vector<Edge> base;
    for (auto [u, v] : it->second) base.push_back({u, v});
    stream.base = Graph::from_edges(base, n);
    stream.base_timestamp = t0 + static_cast<double>(it->first) * width;
  }
  for (auto prev = it++; it != windows.end(); prev = it++) {
    DeltaGraph d;
    d.timestamp = t0 + static_cast<double>(it->first) * width;
    const auto& a = prev->second;
    const auto& b = it->second;
    std::vector<std::pair<NodeId, NodeId>> diff;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
    for (auto [u, v] : diff) d.insertions.push_back({u, v});
    diff.clear();
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    for (auto [u, v] : diff) d.deletions.push_back({u, v});
    stream.deltas.push_back(std::move(d));
  }
  return stream;
}

}  // namespace entrograph
