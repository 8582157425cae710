#include <gtest/gtest.h>

#include <cmath>

#include "entrograph/netdesign.hpp"
#include "support.hpp"

namespace eg = entrograph;

namespace {

eg::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const eg::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an entrograph::Error";
  return eg::ErrorCode::InternalConsistency;
}

bool same_pair(const eg::NodePair& p, eg::NodeId a, eg::NodeId b) {
  return (p.u == a && p.v == b) || (p.u == b && p.v == a);
}

}  // namespace

TEST(EdgeCentrality, Examples) {
  EXPECT_NEAR(eg::edge_centrality(1, 1), 4.0, 1e-12);
  EXPECT_NEAR(eg::edge_centrality(2, 3), 6.0, 1e-12);
  EXPECT_NEAR(eg::edge_centrality(0, 0), 0.0, 1e-15);
}

TEST(EdgeCentrality, MonotoneInBothDegrees) {
  for (int d1 = 0; d1 <= 25; ++d1)
    for (int d2 = d1; d2 <= 25; ++d2)
      for (int e1 = 0; e1 <= 25; ++e1)
        for (int e2 = e1; e2 <= 25; e2 += 3) EXPECT_LE(eg::edge_centrality(d1, e1), eg::edge_centrality(d2, e2) + 1e-12);
}

TEST(EntropyAug, StarJoinsTwoLeaves) {
  auto r = eg::entropy_aug(eg::star_graph(5), 1);
  ASSERT_EQ(r.chosen_edges.size(), 1u);
  EXPECT_NE(r.chosen_edges[0].u, 0u);
  EXPECT_NE(r.chosen_edges[0].v, 0u);
}

TEST(EntropyAug, PathJoinsItsEnds) {
  auto r = eg::entropy_aug(eg::path_graph(4), 1);
  ASSERT_EQ(r.chosen_edges.size(), 1u);
  EXPECT_TRUE(same_pair(r.chosen_edges[0], 0, 3));
  auto brute = eg::entropy_aug_bruteforce(eg::path_graph(4), 1);
  EXPECT_EQ(brute.chosen_edges, r.chosen_edges);
}

TEST(EntropyAug, RegularGraphPicksMinimumDegreePair) {
  auto g = eg::gen_ws(12, 4, 0.0, 1);
  auto r = eg::entropy_aug(g, 1);
  ASSERT_EQ(r.chosen_edges.size(), 1u);
  EXPECT_FALSE(g.has_edge(r.chosen_edges[0].u, r.chosen_edges[0].v));
}

TEST(EntropyAug, Errors) {
  EXPECT_EQ(code_of([] { eg::entropy_aug(eg::complete_graph(5), 1); }), eg::ErrorCode::GraphComplete);
  EXPECT_EQ(code_of([] { eg::entropy_aug_bruteforce(eg::complete_graph(5), 1); }), eg::ErrorCode::GraphComplete);
  EXPECT_EQ(code_of([] { eg::entropy_aug(eg::path_graph(5), 0); }), eg::ErrorCode::InvalidBudget);
}

TEST(EntropyAug, PrunedScanMatchesBruteForce) {
  eg::Rng rng(41);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 4 + rng.below(37);
    auto g = rep % 3 == 0 ? eg::testing::random_gnp(rng, n, rng.uniform(0.05, 0.6))
                          : eg::testing::random_model_graph(rng, std::min<std::size_t>(n, 10), 40);
    const std::size_t k = 1 + rng.below(10);
    std::vector<eg::NodePair> fast, slow;
    try {
      fast = eg::entropy_aug(g, k).chosen_edges;
    } catch (const eg::Error&) {
      EXPECT_THROW(eg::entropy_aug_bruteforce(g, k), eg::Error);
      continue;
    }
    slow = eg::entropy_aug_bruteforce(g, k).chosen_edges;
    EXPECT_EQ(fast, slow) << "graph " << rep;
  }
}

TEST(EntropyAug, PrunedPairEqualsExhaustiveMinimumEveryStep) {
  eg::Rng rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    auto g = eg::testing::random_gnp(rng, 3 + rng.below(30), rng.uniform(0.0, 0.9));
    auto a = eg::detail::min_ec_pair_pruned(g);
    auto b = eg::detail::min_ec_pair_exhaustive(g);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(*a, *b);
    }
  }
}

TEST(EntropyAug, StructuralInformationNeverDecreases) {
  auto r = eg::entropy_aug(eg::testing::zachary(), 20);
  ASSERT_EQ(r.chosen_edges.size(), 20u);
  double prev = r.initial_h1;
  for (double h : r.h1_trace) {
    EXPECT_GE(h, prev - 1e-12);
    EXPECT_LE(h, std::log2(34.0) + 1e-12);
    prev = h;
  }
  EXPECT_EQ(r.best_prefix, 20u);
}

TEST(EntropyAug, StopsAtMaximum) {
  // P_4 plus (0,3) is the 4-cycle, which already has H1 = log2 4.
  auto r = eg::entropy_aug(eg::path_graph(4), 5);
  EXPECT_EQ(r.chosen_edges.size(), 1u);
  EXPECT_NEAR(r.h1_trace.back(), 2.0, 1e-12);
}

TEST(EntropyAug, TracesExactEntropyOnRequest) {
  eg::AugmentOptions opts;
  opts.trace_hvn = true;
  auto g = eg::testing::zachary();
  auto r = eg::entropy_aug(g, 3, opts);
  ASSERT_EQ(r.hvn_trace.size(), 3u);
  auto h = g;
  for (const auto& p : r.chosen_edges) h.add_edge(p.u, p.v);
  EXPECT_NEAR(r.hvn_trace.back(), eg::von_neumann_entropy(h), 1e-10);
  EXPECT_NEAR(*r.initial_hvn, eg::von_neumann_entropy(g), 1e-10);
}

TEST(Baselines, RandomIsReproducibleAndValid) {
  auto g = eg::testing::zachary();
  auto a = eg::baseline_random(g, 15, 3);
  auto b = eg::baseline_random(g, 15, 3);
  EXPECT_EQ(a.chosen_edges, b.chosen_edges);
  auto h = g;
  for (const auto& p : a.chosen_edges) {
    EXPECT_FALSE(g.has_edge(p.u, p.v));
    h.add_edge(p.u, p.v);
  }
  EXPECT_NE(a.chosen_edges, eg::baseline_random(g, 15, 4).chosen_edges);
}

TEST(Baselines, AlgebraicBridgesTwoTriangles) {
  auto g = eg::disjoint_union(eg::complete_graph(3), eg::complete_graph(3));
  EXPECT_NEAR(eg::algebraic_connectivity(g), 0.0, 1e-10);
  auto r = eg::baseline_algebraic(g, 1);
  ASSERT_EQ(r.chosen_edges.size(), 1u);
  const auto& p = r.chosen_edges[0];
  EXPECT_NE(p.u < 3, p.v < 3);
  auto h = g;
  h.add_edge(p.u, p.v);
  EXPECT_GT(eg::algebraic_connectivity(h), 1e-6);
}

TEST(Baselines, AlgebraicPicksBestCandidate) {
  eg::Rng rng(43);
  auto g = eg::testing::random_gnp(rng, 14, 0.3);
  auto r = eg::baseline_algebraic(g, 1);
  ASSERT_EQ(r.chosen_edges.size(), 1u);
  auto best_graph = g;
  best_graph.add_edge(r.chosen_edges[0].u, r.chosen_edges[0].v);
  const double best = eg::algebraic_connectivity(best_graph);
  for (const auto& p : eg::non_edges(g)) {
    auto h = g;
    h.add_edge(p.u, p.v);
    EXPECT_LE(eg::algebraic_connectivity(h), best + 1e-10);
  }
}

TEST(EntropyAug, BeatsRandomOnZachary) {
  auto g = eg::testing::zachary();
  eg::AugmentOptions opts;
  opts.trace_hvn = true;
  const double ours = eg::entropy_aug(g, 50, opts).hvn_trace.back();
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_GE(ours, eg::baseline_random(g, 50, s, opts).hvn_trace.back());
}
