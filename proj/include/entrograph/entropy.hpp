#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "entrograph/generators.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/majorization.hpp"
#include "entrograph/spectral.hpp"

namespace entrograph {

inline constexpr double kLog2E = std::numbers::log2e;
// Hvn at or below this is rounding noise from a spectrum like {0, 2}.
inline constexpr double kZeroEntropy = 1e-12;

/// f(x) = x log2 x with f(0) = 0. Inputs below 1e-15 count as 0 so round-off
/// never produces -inf or NaN.
inline double xlog2x(double x) noexcept { return x < 1e-15 ? 0.0 : x * std::log2(x); }

/// -sum f(p_i) for a vector that already sums to one.
inline double shannon_entropy(std::span<const double> p) noexcept {
  double h = 0.0;
  for (double x : p) h -= xlog2x(x);
  return h;
}

/// -sum f(x_i / total); 0 when total is 0.
inline double normalized_entropy(std::span<const double> x, double total) noexcept {
  if (!(total > 0.0)) return 0.0;
  double h = 0.0;
  for (double v : x) h -= xlog2x(v / total);
  return h;
}

/// log2(total) - sum f(x_i) / total; algebraically equal to normalized_entropy.
inline double normalized_entropy_rearranged(std::span<const double> x, double total) noexcept {
  if (!(total > 0.0)) return 0.0;
  double s = 0.0;
  for (double v : x) s += xlog2x(v);
  return std::log2(total) - s / total;
}

/// H1: Shannon entropy of d_i / vol. Edgeless graphs get 0.
inline double structural_information(const Graph& g) noexcept {
  return normalized_entropy(g.degrees(), g.volume());
}

inline double structural_information_rearranged(const Graph& g) noexcept {
  return normalized_entropy_rearranged(g.degrees(), g.volume());
}

/// Hvn: Shannon entropy of lambda_i / vol. A zero-volume spectrum gives 0.
inline double von_neumann_entropy(const Spectrum& s) noexcept {
  return normalized_entropy(s.eigenvalues, s.source_volume);
}

inline double von_neumann_entropy(const Graph& g) { return von_neumann_entropy(eig_laplacian(g)); }

struct EntropyReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double volume = 0.0;
  double d_max = 0.0;
  double delta = 0.0;  // minimum positive degree
  bool unweighted = true;

  double h1 = 0.0;
  std::optional<double> hvn;
  std::optional<double> gap;

  double gap_lower = 0.0;
  bool gap_lower_applies = false;  // false: graph not connected (or n < 2) and 0 is reported
  double gap_upper_thm1 = 0.0;
  std::optional<double> gap_upper_b1;  // unweighted only
  std::optional<double> gap_upper_b2;  // unweighted only
  double gap_upper_final = 0.0;

  std::optional<double> rel_error;

  /// Human-readable descriptions of every violated report invariant.
  std::vector<std::string> violations(double tol = 1e-9) const {
    std::vector<std::string> out;
    const double cap = std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
    if (h1 > cap + tol) out.push_back("h1 exceeds log2 n");
    if (hvn && *hvn > cap + tol) out.push_back("hvn exceeds log2 n");
    if (gap) {
      if (!(*gap > -tol)) out.push_back("gap is not positive");
      if (*gap > gap_upper_thm1 + tol) out.push_back("gap exceeds the trace bound");
      if (*gap > gap_upper_final + tol) out.push_back("gap exceeds the final upper bound");
      if (*gap < gap_lower - tol) out.push_back("gap is below the lower bound");
    }
    return out;
  }
};

/// Bound families for the gap. Needs E non-empty.
inline EntropyReport entropy_bounds(const Graph& g) {
  require(g.edge_count() > 0, ErrorCode::EmptyGraph, "entropy gap needs at least one edge");
  EntropyReport r;
  r.n = g.node_count();
  r.m = g.edge_count();
  r.volume = g.volume();
  r.d_max = g.max_degree();
  r.delta = g.min_positive_degree();
  r.unweighted = g.is_unweighted();
  r.h1 = structural_information(g);

  const auto moments = laplacian_moments(g);
  r.gap_upper_thm1 = kLog2E * moments.tr_a2 / (r.delta * r.volume);

  double sum_fd = 0.0;
  double sum_d2 = 0.0;
  for (double d : g.degrees()) {
    sum_fd += xlog2x(d);
    sum_d2 += d * d;
  }

  if (r.unweighted) {
    double sum_fconj = 0.0;
    for (double c : conjugate_degrees(g.degrees())) sum_fconj += xlog2x(c);
    r.gap_upper_b1 = (sum_fconj - sum_fd) / r.volume;
    r.gap_upper_b2 = std::log2(1.0 + sum_d2 / r.volume) - sum_fd / r.volume;
    r.gap_upper_final = std::min({kLog2E, *r.gap_upper_b1, *r.gap_upper_b2});

    if (r.n >= 2 && is_connected(g)) {
      r.gap_lower_applies = true;
      r.gap_lower = (xlog2x(r.d_max + 1) - xlog2x(r.d_max) + xlog2x(r.delta - 1) - xlog2x(r.delta)) / r.volume;
    }
  } else {
    r.gap_upper_final = r.gap_upper_thm1;
  }
  return r;
}

/// Full report with the exact entropy from a precomputed spectrum of `g`.
inline EntropyReport entropy_gap(const Graph& g, const Spectrum& s) {
  require(s.size() == g.node_count(), ErrorCode::DimensionMismatch, "spectrum does not belong to this graph");
  EntropyReport r = entropy_bounds(g);
  r.hvn = von_neumann_entropy(s);
  r.gap = r.h1 - *r.hvn;
  if (*r.hvn > kZeroEntropy) r.rel_error = *r.gap / *r.hvn;
  const auto bad = r.violations();
  if (!bad.empty()) fail(ErrorCode::InternalConsistency, "entropy report invariant violated: " + bad.front());
  return r;
}

inline EntropyReport entropy_gap(const Graph& g) { return entropy_gap(g, eig_laplacian(g)); }

/// gap / hvn.
inline double relative_error(const EntropyReport& r) {
  require(r.hvn.has_value() && r.gap.has_value(), ErrorCode::InvalidParameter, "report has no exact entropy");
  if (*r.hvn <= kZeroEntropy) fail(ErrorCode::DivisionByZero, "relative error undefined for hvn = 0");
  return *r.gap / *r.hvn;
}

// Analytic values for the deterministic families.

struct ClosedForm {
  FamilySpec spec;
  double h1 = 0.0;
  double hvn = 0.0;  // exact, or the large-n approximation when is_asymptotic
  double gap = 0.0;
  bool is_asymptotic = false;
};

inline ClosedForm closed_form(const FamilySpec& spec) {
  ClosedForm c;
  c.spec = spec;
  switch (spec.family) {
    case Family::Complete: {
      require(spec.n >= 2, ErrorCode::InvalidParameter, "complete graph needs n >= 2");
      const double n = static_cast<double>(spec.n);
      c.h1 = std::log2(n);
      c.hvn = std::log2(n - 1);
      c.gap = std::log2(1.0 + 1.0 / (n - 1));
      return c;
    }
    case Family::Bipartite: {
      require(spec.n >= 1 && spec.b >= 1, ErrorCode::InvalidParameter, "bipartite sides need at least one node");
      const double a = static_cast<double>(spec.n);
      const double b = static_cast<double>(spec.b);
      c.h1 = 1.0 + 0.5 * std::log2(a * b);
      c.gap = std::log2(1.0 + b / a) / (2.0 * b) + std::log2(1.0 + a / b) / (2.0 * a);
      c.hvn = c.h1 - c.gap;
      return c;
    }
    case Family::Star: {
      require(spec.n >= 2, ErrorCode::InvalidParameter, "star needs n >= 2");
      const double n = static_cast<double>(spec.n);
      c.h1 = 1.0 + 0.5 * std::log2(n - 1);
      c.hvn = std::log2(2 * n - 2) - n / (2 * n - 2) * std::log2(n);
      c.gap = c.h1 - c.hvn;
      return c;
    }
    case Family::Path: {
      require(spec.n >= 2, ErrorCode::InvalidParameter, "path needs n >= 2");
      const double n = static_cast<double>(spec.n);
      c.h1 = std::log2(n - 1) + 1.0 / (n - 1);
      c.hvn = std::log2(n - 1) + 1.0 - kLog2E;
      c.gap = kLog2E - 1.0;
      c.is_asymptotic = true;
      return c;
    }
    case Family::Ring: {
      require(spec.n >= 3, ErrorCode::InvalidParameter, "ring needs n >= 3");
      const double n = static_cast<double>(spec.n);
      c.h1 = std::log2(n);
      c.hvn = std::log2(n) + 1.0 - kLog2E;
      c.gap = kLog2E - 1.0;
      c.is_asymptotic = true;
      return c;
    }
  }
  fail(ErrorCode::InvalidParameter, "unknown family");
}

// FINGER approximations, Q = 1 - tr(L^2) / tr(L)^2.

inline double finger_q(const LaplacianMoments& m) { return 1.0 - m.tr_l2 / (m.tr_l * m.tr_l); }

inline double finger_hat(const Graph& g, const Spectrum& s) {
  require(g.volume() > 0.0, ErrorCode::EmptyGraph, "FINGER needs at least one edge");
  const auto m = laplacian_moments(g, &s);
  return -finger_q(m) * std::log2(m.lambda_max_bound / m.tr_l);
}

inline double finger_tilde(const Graph& g) {
  require(g.volume() > 0.0, ErrorCode::EmptyGraph, "FINGER needs at least one edge");
  const auto m = laplacian_moments(g);
  return -finger_q(m) * std::log2(2.0 * g.max_degree() / m.tr_l);
}

}  // namespace entrograph
