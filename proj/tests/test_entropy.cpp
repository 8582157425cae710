#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entrograph/entropy.hpp"
#include "support.hpp"

namespace eg = entrograph;

namespace {

double plogp_entropy(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double h = 0.0;
  for (double w : weights)
    if (w > 0) h -= (w / total) * std::log2(w / total);
  return h;
}

// Spectrum of K_{a,b}: 0, a (b-1 times), b (a-1 times), a+b.
double bipartite_hvn_oracle(std::size_t a, std::size_t b) {
  std::vector<double> lambda{0.0, static_cast<double>(a + b)};
  for (std::size_t i = 1; i < b; ++i) lambda.push_back(static_cast<double>(a));
  for (std::size_t i = 1; i < a; ++i) lambda.push_back(static_cast<double>(b));
  return plogp_entropy(lambda);
}

// Ring spectrum 2 - 2cos(2 pi k / n).
double ring_hvn_oracle(std::size_t n) {
  std::vector<double> lambda;
  for (std::size_t k = 0; k < n; ++k) lambda.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  return plogp_entropy(lambda);
}

}  // namespace

TEST(StructuralInformation, Examples) {
  EXPECT_DOUBLE_EQ(eg::structural_information(eg::complete_graph(2)), 1.0);
  EXPECT_NEAR(eg::structural_information(eg::ring_graph(500)), std::log2(500.0), 1e-12);
  EXPECT_NEAR(eg::structural_information(eg::testing::zachary()), 4.7044, 1e-3);
  EXPECT_EQ(eg::structural_information(eg::Graph(5)), 0.0);
}

TEST(StructuralInformation, IsolatedNodesContributeNothing) {
  auto g = eg::path_graph(4);
  auto padded = g;
  padded.ensure_nodes(9);
  EXPECT_DOUBLE_EQ(eg::structural_information(g), eg::structural_information(padded));
}

TEST(StructuralInformation, RearrangementAgrees) {
  eg::Rng rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    auto g = rep % 2 ? eg::testing::random_weighted(rng, 40, 0.1) : eg::testing::random_model_graph(rng, 10, 200);
    EXPECT_NEAR(eg::structural_information(g), eg::structural_information_rearranged(g), 1e-10);
    EXPECT_NEAR(eg::structural_information(g), plogp_entropy(g.degrees()), 1e-12);
  }
}

TEST(VonNeumannEntropy, Examples) {
  EXPECT_NEAR(eg::von_neumann_entropy(eg::complete_graph(2)), 0.0, 1e-12);
  EXPECT_NEAR(eg::von_neumann_entropy(eg::complete_graph(4)), std::log2(3.0), 1e-12);
  EXPECT_NEAR(eg::von_neumann_entropy(eg::testing::zachary()), 4.5504, 1e-3);
  EXPECT_EQ(eg::von_neumann_entropy(eg::Graph(3)), 0.0);
  EXPECT_NEAR(eg::von_neumann_entropy(eg::ring_graph(64)), ring_hvn_oracle(64), 1e-10);
}

TEST(EntropyGap, CompleteAndRing) {
  auto k = eg::entropy_gap(eg::complete_graph(500));
  EXPECT_NEAR(*k.gap, std::log2(1.0 + 1.0 / 499.0), 1e-10);
  auto r = eg::entropy_gap(eg::ring_graph(500));
  EXPECT_NEAR(r.h1, 8.9658, 1e-3);
  EXPECT_NEAR(*r.gap, 0.4427, 5e-3);
}

TEST(EntropyGap, EmptyGraphIsRejected) {
  try {
    eg::entropy_gap(eg::Graph(4));
    FAIL();
  } catch (const eg::Error& e) {
    EXPECT_EQ(e.code(), eg::ErrorCode::EmptyGraph);
  }
}

TEST(EntropyGap, ZacharyRelativeError) {
  auto rep = eg::entropy_gap(eg::testing::zachary());
  EXPECT_NEAR(*rep.gap, 0.1540, 1e-3);
  EXPECT_NEAR(eg::relative_error(rep), 0.0338, 5e-4);
}

TEST(EntropyGap, RelativeErrorUndefinedForSingleEdge) {
  auto rep = eg::entropy_gap(eg::complete_graph(2));
  EXPECT_FALSE(rep.rel_error.has_value());
  try {
    eg::relative_error(rep);
    FAIL();
  } catch (const eg::Error& e) {
    EXPECT_EQ(e.code(), eg::ErrorCode::DivisionByZero);
  }
}

TEST(EntropyGap, ErdosRenyiRelativeErrorIsSmall) {
  auto rep = eg::entropy_gap(eg::gen_er(500, 40, 1));
  EXPECT_NEAR(*rep.rel_error, 0.0022, 5e-4);
}

// Positivity, the upper-bound chain and the sharpened lower bound over a mixed
// random corpus.
TEST(EntropyGap, BoundsHoldOnRandomCorpus) {
  eg::Rng rng(2024);
  std::size_t lower_checked = 0;
  for (int rep = 0; rep < 120; ++rep) {
    auto g = eg::testing::random_model_graph(rng, 10, 200);
    auto r = eg::entropy_gap(g);
    ASSERT_TRUE(r.gap && r.gap_upper_b1 && r.gap_upper_b2);
    EXPECT_GT(*r.gap, 0.0);
    EXPECT_LE(*r.gap, eg::kLog2E);
    EXPECT_LE(*r.gap, *r.gap_upper_b1 + 1e-12);
    EXPECT_LE(*r.gap, *r.gap_upper_b2 + 1e-12);
    EXPECT_LE(*r.gap, r.gap_upper_thm1 + 1e-12);
    EXPECT_DOUBLE_EQ(r.gap_upper_final, std::min({eg::kLog2E, *r.gap_upper_b1, *r.gap_upper_b2}));
    EXPECT_LE(r.hvn.value(), std::log2(static_cast<double>(g.node_count())) + 1e-12);
    EXPECT_LE(r.h1, std::log2(static_cast<double>(g.node_count())) + 1e-12);
    EXPECT_EQ(r.gap_lower_applies, eg::is_connected(g));
    if (r.gap_lower_applies) {
      ++lower_checked;
      EXPECT_GE(*r.gap, r.gap_lower - 1e-12);
    } else {
      EXPECT_EQ(r.gap_lower, 0.0);
    }
    EXPECT_TRUE(r.violations().empty());
  }
  EXPECT_GT(lower_checked, 40u);
}

TEST(EntropyGap, WeightedGraphsUseFirstBound) {
  eg::Rng rng(8);
  for (int rep = 0; rep < 40; ++rep) {
    auto g = eg::testing::random_weighted(rng, 30, 0.2);
    if (g.edge_count() == 0) continue;
    auto r = eg::entropy_gap(g);
    EXPECT_FALSE(r.gap_upper_b1.has_value());
    EXPECT_GT(*r.gap, 0.0);
    EXPECT_LE(*r.gap, r.gap_upper_thm1 + 1e-12);
    EXPECT_EQ(r.gap_upper_final, r.gap_upper_thm1);
  }
}

TEST(EntropyGap, RegularLatticeBound) {
  for (std::size_t d : {6u, 10u, 20u, 50u}) {
    auto r = eg::entropy_gap(eg::gen_ws(200, static_cast<double>(d), 0.0, 1));
    EXPECT_LE(*r.gap, eg::kLog2E / static_cast<double>(d));
  }
}

TEST(EntropyGap, ScaleInvariance) {
  eg::Rng rng(6);
  for (int rep = 0; rep < 20; ++rep) {
    auto g = eg::testing::random_model_graph(rng, 10, 80);
    auto a = eg::entropy_gap(g);
    for (double c : {0.01, 3.0, 1000.0}) {
      auto b = eg::entropy_gap(g.scaled(c));
      EXPECT_NEAR(a.h1, b.h1, 1e-10);
      EXPECT_NEAR(*a.hvn, *b.hvn, 1e-9);
      EXPECT_NEAR(*a.gap, *b.gap, 1e-9);
    }
  }
}

TEST(ClosedForm, CompleteGraphs) {
  for (std::size_t n : {3u, 10u, 100u}) {
    auto cf = eg::closed_form({eg::Family::Complete, n, 0});
    const double nd = static_cast<double>(n);
    EXPECT_DOUBLE_EQ(cf.h1, std::log2(nd));
    EXPECT_DOUBLE_EQ(cf.hvn, std::log2(nd - 1));
    EXPECT_FALSE(cf.is_asymptotic);
    auto r = eg::entropy_gap(eg::complete_graph(n));
    EXPECT_NEAR(r.h1, cf.h1, 1e-8);
    EXPECT_NEAR(*r.hvn, cf.hvn, 1e-8);
    EXPECT_NEAR(*r.gap, cf.gap, 1e-8);
  }
}

TEST(ClosedForm, CompleteBipartiteGraphs) {
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 1}, {2, 3}, {10, 40}, {7, 7}};
  for (auto [a, b] : cases) {
    auto cf = eg::closed_form({eg::Family::Bipartite, a, b});
    EXPECT_NEAR(cf.hvn, bipartite_hvn_oracle(a, b), 1e-10);
    auto r = eg::entropy_gap(eg::complete_bipartite_graph(a, b));
    EXPECT_NEAR(r.h1, cf.h1, 1e-8);
    EXPECT_NEAR(*r.hvn, cf.hvn, 1e-8);
    EXPECT_NEAR(*r.gap, cf.gap, 1e-8);
  }
  EXPECT_NEAR(eg::closed_form({eg::Family::Bipartite, 1, 1}).gap, 1.0, 1e-15);
}

TEST(ClosedForm, Star) {
  for (std::size_t n : {3u, 9u, 50u}) {
    auto cf = eg::closed_form({eg::Family::Star, n, 0});
    const double nd = static_cast<double>(n);
    EXPECT_NEAR(cf.hvn, std::log2(2 * nd - 2) - nd / (2 * nd - 2) * std::log2(nd), 1e-12);
    EXPECT_NEAR(cf.hvn, bipartite_hvn_oracle(1, n - 1), 1e-10);
    auto r = eg::entropy_gap(eg::star_graph(n));
    EXPECT_NEAR(*r.hvn, cf.hvn, 1e-8);
    EXPECT_NEAR(r.h1, cf.h1, 1e-8);
  }
}

TEST(ClosedForm, PathAndRingApproachAsymptote) {
  const double limit = eg::kLog2E - 1.0;
  for (auto fam : {eg::Family::Path, eg::Family::Ring}) {
    double prev = 1.0;
    for (std::size_t n : {50u, 100u, 500u, 1000u}) {
      auto cf = eg::closed_form({fam, n, 0});
      EXPECT_TRUE(cf.is_asymptotic);
      EXPECT_NEAR(cf.gap, limit, 1e-15);
      auto r = eg::entropy_gap(eg::gen_named({fam, n, 0}));
      EXPECT_NEAR(r.h1, cf.h1, 1e-10);
      const double dev = std::abs(*r.gap - limit);
      EXPECT_LT(dev, prev);
      prev = dev;
    }
    EXPECT_LT(prev, 5e-3);
  }
}

TEST(ClosedForm, RejectsBadParameters) {
  EXPECT_THROW(eg::closed_form({eg::Family::Complete, 1, 0}), eg::Error);
  EXPECT_THROW(eg::closed_form({eg::Family::Bipartite, 3, 0}), eg::Error);
}

TEST(Finger, SingleEdgeIsExact) {
  auto g = eg::complete_graph(2);
  auto s = eg::eig_laplacian(g);
  EXPECT_NEAR(eg::finger_q(eg::laplacian_moments(g)), 0.0, 1e-15);
  EXPECT_NEAR(eg::finger_hat(g, s), 0.0, 1e-12);
}

TEST(Finger, TildeNeverExceedsHat) {
  eg::Rng rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    auto g = eg::testing::random_model_graph(rng, 10, 120);
    auto s = eg::eig_laplacian(g);
    EXPECT_LE(eg::finger_tilde(g), eg::finger_hat(g, s) + 1e-12);
  }
}

TEST(Finger, ZacharyStructuralInformationIsCloser) {
  auto g = eg::testing::zachary();
  auto s = eg::eig_laplacian(g);
  const double hvn = eg::von_neumann_entropy(s);
  const double err_h1 = std::abs(eg::structural_information(g) - hvn);
  EXPECT_LT(err_h1, std::abs(eg::finger_hat(g, s) - hvn));
  EXPECT_LT(err_h1, std::abs(eg::finger_tilde(g) - hvn));
  EXPECT_THROW(eg::finger_tilde(eg::Graph(3)), eg::Error);
}

TEST(Entropy, XLogXHandlesZero) {
  EXPECT_EQ(eg::xlog2x(0.0), 0.0);
  EXPECT_EQ(eg::xlog2x(1e-16), 0.0);
  EXPECT_DOUBLE_EQ(eg::xlog2x(4.0), 8.0);
}
