// Acceptance gate: one line per criterion, PASS / FAIL / BLOCKED.
//
// Exit status: 1 if any criterion fails, 77 if the only non-passing criteria
// are blocked on missing fixture files, 0 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"

namespace eg = entrograph;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { Pass, Fail, Blocked };

struct Outcome {
  Status status = Status::Pass;
  std::ostringstream detail;

  // Records one sub-check; the first failure sticks.
  void check(bool ok, const std::string& what) {
    if (!ok) {
      status = Status::Fail;
      detail << "[FAILED] ";
    }
    detail << what << "; ";
  }

  void blocked(const std::string& what) {
    if (status == Status::Pass) status = Status::Blocked;
    detail << "[BLOCKED] " << what << "; ";
  }
};

std::string fmt(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::optional<eg::Graph> optional_fixture(const std::string& name) {
  const auto path = eg::testing::data_file(name + ".txt");
  if (!std::filesystem::exists(path)) return std::nullopt;
  return eg::load_edge_list(path, {true});
}

struct RealGraph {
  std::string name;
  std::optional<eg::Graph> graph;
};

std::vector<RealGraph> real_graphs() {
  return {{"zachary", eg::testing::zachary()}, {"dolphins", optional_fixture("dolphins")},
          {"jazz", optional_fixture("jazz")}};
}

// 1 --------------------------------------------------------------------------

void reference_values(Outcome& o) {
  const auto t0 = Clock::now();
  auto z = eg::entropy_gap(eg::testing::zachary());
  o.check(std::abs(z.h1 - 4.7044) <= 1e-3 && std::abs(*z.hvn - 4.5504) <= 1e-3 && std::abs(*z.gap - 0.1540) <= 1e-3,
          "zachary h1=" + fmt(z.h1) + " hvn=" + fmt(*z.hvn) + " gap=" + fmt(*z.gap));
  if (auto d = optional_fixture("dolphins")) {
    auto r = eg::entropy_gap(*d);
    o.check(std::abs(r.h1 - 5.7005) <= 1e-3 && std::abs(*r.hvn - 5.5489) <= 1e-3 && std::abs(*r.gap - 0.1516) <= 1e-3,
            "dolphins h1=" + fmt(r.h1) + " hvn=" + fmt(*r.hvn) + " gap=" + fmt(*r.gap));
  } else {
    o.blocked("dolphins fixture missing");
  }
  auto k = eg::entropy_gap(eg::complete_graph(500));
  const double k_expected = std::log2(1.0 + 1.0 / 499.0);
  o.check(std::abs(*k.gap - k_expected) <= 1e-4, "K500 gap=" + fmt(*k.gap, 6) + " expected " + fmt(k_expected, 6));
  auto r = eg::entropy_gap(eg::ring_graph(500));
  o.check(std::abs(r.h1 - 8.9658) <= 1e-3 && std::abs(*r.gap - 0.4427) <= 5e-3,
          "R500 h1=" + fmt(r.h1) + " gap=" + fmt(*r.gap));
  const double secs = seconds_since(t0);
  o.check(secs < 10.0, "runtime " + fmt(secs, 2) + " s");
}

// 2 --------------------------------------------------------------------------

void closed_forms(Outcome& o) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (std::size_t n : {3u, 10u, 100u}) {
    auto cf = eg::closed_form({eg::Family::Complete, n, 0});
    auto r = eg::entropy_gap(eg::complete_graph(n));
    worst = std::max({worst, std::abs(r.h1 - cf.h1), std::abs(*r.hvn - cf.hvn), std::abs(*r.gap - cf.gap)});
  }
  const std::pair<std::size_t, std::size_t> bip[] = {{1, 1}, {2, 3}, {10, 40}};
  for (auto [a, b] : bip) {
    auto cf = eg::closed_form({eg::Family::Bipartite, a, b});
    auto r = eg::entropy_gap(eg::complete_bipartite_graph(a, b));
    worst = std::max({worst, std::abs(r.h1 - cf.h1), std::abs(*r.hvn - cf.hvn), std::abs(*r.gap - cf.gap)});
  }
  o.check(worst <= 1e-8, "K_n and K_{a,b} max deviation " + sci(worst));
  const double limit = eg::kLog2E - 1.0;
  for (auto fam : {eg::Family::Path, eg::Family::Ring}) {
    std::vector<double> dev;
    for (std::size_t n : {50u, 100u, 500u, 1000u}) dev.push_back(std::abs(*eg::entropy_gap(eg::gen_named({fam, n, 0})).gap - limit));
    const bool monotone = std::is_sorted(dev.rbegin(), dev.rend()) && std::adjacent_find(dev.begin(), dev.end()) == dev.end();
    o.check(monotone && dev.back() < 5e-3, eg::to_string(fam) + " |gap - (log2 e - 1)| = " + sci(dev[0]) + " > " +
                                              sci(dev[1]) + " > " + sci(dev[2]) + " > " + sci(dev[3]));
  }
  const double secs = seconds_since(t0);
  o.check(secs < 30.0, "runtime " + fmt(secs, 2) + " s");
}

// 3 --------------------------------------------------------------------------

void bound_suite(Outcome& o) {
  const auto t0 = Clock::now();
  eg::Rng rng(3003);
  std::size_t violations = 0, connected = 0, positive_fail = 0;
  double tightest_upper = 1e9, tightest_lower = 1e9;
  for (int rep = 0; rep < 300; ++rep) {
    auto g = eg::testing::random_model_graph(rng, 10, 500);
    auto r = eg::entropy_gap(g);
    const double gap = *r.gap;
    if (!(gap > 0.0)) ++positive_fail;
    const double upper = std::min({eg::kLog2E, *r.gap_upper_b1, *r.gap_upper_b2});
    if (gap > upper || gap > r.gap_upper_thm1) ++violations;
    tightest_upper = std::min(tightest_upper, std::min(upper, r.gap_upper_thm1) - gap);
    if (r.gap_lower_applies) {
      ++connected;
      if (gap < r.gap_lower) ++violations;
      tightest_lower = std::min(tightest_lower, gap - r.gap_lower);
    }
  }
  o.check(positive_fail == 0 && violations == 0,
          "300 graphs, " + std::to_string(connected) + " connected: " + std::to_string(violations) +
              " bound violations, " + std::to_string(positive_fail) + " non-positive gaps, min upper slack " +
              sci(tightest_upper) + ", min lower slack " + sci(tightest_lower));
  const double secs = seconds_since(t0);
  o.check(secs < 300.0, "runtime " + fmt(secs, 2) + " s");
}

// 4 --------------------------------------------------------------------------

void majorization(Outcome& o) {
  eg::Rng rng(4004);
  double spec_deg = 1e9, conj_spec = 1e9, grone = 1e9;
  std::size_t connected = 0;
  for (int rep = 0; rep < 200; ++rep) {
    auto g = eg::testing::random_model_graph(rng, 10, 300);
    auto s = eg::eig_laplacian(g);
    auto deg = g.degrees();
    spec_deg = std::min(spec_deg, eg::check_majorization(s.eigenvalues, deg).min_partial_slack);
    conj_spec = std::min(conj_spec, eg::check_majorization(eg::conjugate_degrees(deg), s.eigenvalues).min_partial_slack);
    if (eg::is_connected(g)) {
      ++connected;
      grone = std::min(grone, eg::check_majorization(s.eigenvalues, eg::grone_sequence(deg)).min_partial_slack);
    }
  }
  o.check(spec_deg >= -1e-6, "spectrum > degrees, min slack " + sci(spec_deg));
  o.check(conj_spec >= -1e-6, "conjugate degrees > spectrum, min slack " + sci(conj_spec));
  o.check(grone >= -1e-6, "spectrum > (d1+1,...,dn-1) on " + std::to_string(connected) + " connected, min slack " +
                              sci(grone));
}

// 5 --------------------------------------------------------------------------

void pseudometric(Outcome& o) {
  eg::Rng rng(5005);
  std::size_t triples = 0, asym = 0, negative = 0, over_one = 0;
  double tri_slack = 1e9;
  while (triples < 200) {
    const std::size_t n = 5 + rng.below(60);
    auto a = eg::testing::random_gnp(rng, n, rng.uniform(0.03, 0.5));
    auto b = eg::testing::random_gnp(rng, n, rng.uniform(0.03, 0.5));
    auto c = eg::testing::random_gnp(rng, n, rng.uniform(0.03, 0.5));
    if (!a.edge_count() || !b.edge_count() || !c.edge_count()) continue;
    ++triples;
    const double ab = eg::d_si(a, b), bc = eg::d_si(b, c), ac = eg::d_si(a, c);
    asym += ab != eg::d_si(b, a);
    negative += ab < 0 || bc < 0 || ac < 0;
    over_one += ab > 1.0 || bc > 1.0 || ac > 1.0;
    tri_slack = std::min({tri_slack, ab + bc - ac, ab + ac - bc, ac + bc - ab});
  }
  o.check(asym == 0 && negative == 0 && over_one == 0 && tri_slack >= -1e-9,
          "200 triples: asymmetric " + std::to_string(asym) + ", negative " + std::to_string(negative) + ", >1 " +
              std::to_string(over_one) + ", min triangle slack " + sci(tri_slack));
  eg::Graph x(8), y(8);
  x.add_edge(0, 1);
  x.add_edge(1, 2);
  x.add_edge(2, 3);
  y.add_edge(4, 5);
  y.add_edge(5, 6);
  y.add_edge(6, 7);
  y.add_edge(4, 7);
  const double dsi = eg::d_si(x, y);
  const double qjs = eg::d_qjs(x, y).distance;
  o.check(std::abs(dsi - 1.0) <= 1e-9 && std::abs(qjs - 1.0) <= 1e-6,
          "degree-disjoint pair d_si=" + fmt(dsi, 12) + " sqrt(d_qjs)=" + fmt(qjs, 9));
}

// 6 --------------------------------------------------------------------------

// Alternating deltas that insert and then delete the same two edges over four
// distinct nodes, so |V_k| = 4 at every step.
std::vector<eg::DeltaGraph> four_node_deltas(const eg::Graph& g, std::size_t count, std::uint64_t seed) {
  eg::Rng rng(seed);
  const std::size_t n = g.node_count();
  std::vector<eg::DeltaGraph> out;
  double t = 1.0;
  while (out.size() < count) {
    eg::NodeId q[4];
    for (auto& x : q) x = static_cast<eg::NodeId>(rng.below(n));
    if (q[0] == q[1] || q[0] == q[2] || q[0] == q[3] || q[1] == q[2] || q[1] == q[3] || q[2] == q[3]) continue;
    if (g.has_edge(q[0], q[1]) || g.has_edge(q[2], q[3])) continue;
    eg::DeltaGraph ins, del;
    ins.timestamp = t++;
    ins.insertions = {{q[0], q[1], 1.0}, {q[2], q[3], 1.0}};
    del.timestamp = t++;
    del.deletions = {{q[0], q[1]}, {q[2], q[3]}};
    out.push_back(std::move(ins));
    out.push_back(std::move(del));
  }
  return out;
}

double per_delta_seconds(std::size_t n) {
  const auto g = eg::gen_er(n, 6, 600 + n);
  const auto deltas = four_node_deltas(g, 20000, 7);
  double best = 1e9;
  for (int round = 0; round < 5; ++round) {
    eg::IncrementalSimilarity inc(g);
    for (std::size_t i = 0; i < 2000; ++i) inc.advance(deltas[i]);  // warm-up
    volatile double sink = 0.0;
    const auto t0 = Clock::now();
    for (std::size_t i = 2000; i < deltas.size(); ++i) sink = sink + inc.advance(deltas[i]);
    best = std::min(best, seconds_since(t0) / static_cast<double>(deltas.size() - 2000));
  }
  return best;
}

void incresim(Outcome& o) {
  eg::Rng rng(6006);
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    auto stream = eg::testing::random_stream(rng, 200, 100, 10);
    auto inc = eg::incre_sim(stream);
    auto scratch = eg::scratch_sim(stream);
    for (std::size_t k = 0; k < inc.points.size(); ++k)
      worst = std::max(worst, std::abs(inc.points[k].d_si - scratch.points[k].d_si));
  }
  o.check(worst < 1e-9, "5 streams x 100 deltas at n=200, max |incremental - scratch| = " + sci(worst));
  const double small = per_delta_seconds(200);
  const double large = per_delta_seconds(2000);
  const double ratio = std::max(small, large) / std::min(small, large);
  o.check(ratio < 3.0, "per-delta cost n=200 " + sci(small) + " s, n=2000 " + sci(large) + " s, ratio " +
                           fmt(ratio, 2));
}

// 7 --------------------------------------------------------------------------

void entropy_aug(Outcome& o) {
  eg::Rng rng(7007);
  std::size_t mismatches = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 5 + rng.below(36);
    auto g = eg::testing::random_gnp(rng, n, rng.uniform(0.05, 0.5));
    const std::size_t k = 1 + rng.below(10);
    mismatches += eg::entropy_aug(g, k).chosen_edges != eg::entropy_aug_bruteforce(g, k).chosen_edges;
  }
  o.check(mismatches == 0, "pruned vs brute force on 50 graphs: " + std::to_string(mismatches) + " mismatches");
  eg::AugmentOptions opts;
  opts.trace_hvn = true;
  for (const auto& rg : real_graphs()) {
    if (!rg.graph) {
      o.blocked(rg.name + " fixture missing");
      continue;
    }
    const double ours = eg::entropy_aug(*rg.graph, 50, opts).hvn_trace.back();
    double best_random = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s)
      best_random = std::max(best_random, eg::baseline_random(*rg.graph, 50, s, opts).hvn_trace.back());
    o.check(ours >= best_random, rg.name + " k=50 Hvn " + fmt(ours) + " vs best random " + fmt(best_random));
  }
}

// 8 --------------------------------------------------------------------------

void finger(Outcome& o) {
  for (const auto& rg : real_graphs()) {
    if (!rg.graph) {
      o.blocked(rg.name + " fixture missing");
      continue;
    }
    auto s = eg::eig_laplacian(*rg.graph);
    const double hvn = eg::von_neumann_entropy(s);
    const double e1 = std::abs(eg::structural_information(*rg.graph) - hvn);
    const double e_hat = std::abs(eg::finger_hat(*rg.graph, s) - hvn);
    const double e_tilde = std::abs(eg::finger_tilde(*rg.graph) - hvn);
    o.check(e1 < e_hat && e1 < e_tilde,
            rg.name + " |H1-Hvn|=" + fmt(e1) + " |hat-Hvn|=" + fmt(e_hat) + " |tilde-Hvn|=" + fmt(e_tilde));
  }
}

// 9 --------------------------------------------------------------------------

void sbm_phase(Outcome& o) {
  auto rows = eg::sbm_experiment(100, 2, 30, {2.0, 14.0}, 10, 9009);
  double err2 = 0, err14 = 0, g32 = 0, g43 = 0;
  for (const auto& r : rows) {
    if (r.c_out == 2.0) {
      err2 += static_cast<double>(r.metrics.detection_error) / 10.0;
      g32 += r.metrics.gap_32 / 10.0;
      g43 += r.metrics.gap_43 / 10.0;
    } else {
      err14 += static_cast<double>(r.metrics.detection_error) / 10.0;
    }
  }
  o.check(err2 < err14, "mean detection error c_out=2 " + fmt(err2, 1) + " vs c_out=14 " + fmt(err14, 1));
  o.check(g32 >= 5.0 * g43, "c_out=2 mean (l3-l2)=" + fmt(g32, 3) + " mean (l4-l3)=" + fmt(g43, 3) + " ratio " +
                                fmt(g32 / g43, 2));
}

// 10 -------------------------------------------------------------------------

void obfuscation(Outcome& o) {
  for (auto obj : {eg::ObfuscationObjective::MaxEntropy, eg::ObfuscationObjective::MinPolarization}) {
    double initial = 0.0, final_err = 0.0;
    int worst_increases = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      const std::uint64_t seed = eg::derive_seed(10010, s);
      auto [g, truth] = eg::gen_sbm(eg::SbmParams::equal_groups(100, 2, 28, 2), seed);
      eg::ObfuscationOptions opts;
      opts.objective = obj;
      opts.seed = eg::derive_seed(seed, 1);
      auto trace = eg::obfuscate(g, truth, 200, opts);
      initial += static_cast<double>(trace.steps.front().metrics.detection_error) / 10.0;
      final_err += static_cast<double>(trace.steps.back().metrics.detection_error) / 10.0;
      int increases = 0;
      for (std::size_t i = 1; i < trace.steps.size(); ++i)
        increases += trace.steps[i].metrics.polarization > trace.steps[i - 1].metrics.polarization;
      worst_increases = std::max(worst_increases, increases);
    }
    // With a zero baseline "5x" is read as: at least 5x and strictly larger.
    o.check(final_err >= 5.0 * initial && final_err > initial,
            eg::to_string(obj) + " mean detection error " + fmt(initial, 1) + " -> " + fmt(final_err, 1));
    if (obj == eg::ObfuscationObjective::MinPolarization)
      o.check(worst_increases <= 1, "polarization increases per run (max) " + std::to_string(worst_increases));
  }
}

// 11 -------------------------------------------------------------------------

void anomaly(Outcome& o) {
  const eg::Measure measures[] = {eg::Measure::DSi};
  for (std::size_t k : {20u, 30u, 40u}) {
    std::vector<eg::DdosTrial> trials(100);
    eg::parallel_for(trials.size(),
                     [&](std::size_t t) { trials[t] = eg::ddos_trial({}, k, measures, eg::ddos_trial_seed(11011, k, t)); });
    std::size_t first = 0;
    for (const auto& t : trials) first += t.ranks[0] == 1;
    o.check(first >= 85, "k=" + std::to_string(k) + " rank 1 in " + std::to_string(first) + "/100");
  }
}

// 12 -------------------------------------------------------------------------

void weighted(Outcome& o) {
  std::vector<RealGraph> graphs = real_graphs();
  graphs.push_back({"K1000", eg::complete_graph(1000)});
  graphs.push_back({"R1000", eg::ring_graph(1000)});
  for (const auto& rg : graphs) {
    if (!rg.graph) {
      o.blocked(rg.name + " fixture missing");
      continue;
    }
    double lo = 1e9, hi = -1e9;
    for (int w = 1; w <= 20; ++w) {
      auto g = eg::with_uniform_weights(*rg.graph, 1.0, static_cast<double>(w), eg::derive_seed(12012, w));
      const double gap = *eg::entropy_gap(g).gap;
      lo = std::min(lo, gap);
      hi = std::max(hi, gap);
    }
    o.check(hi - lo < 0.05, rg.name + " gap range " + fmt(hi - lo, 5));
  }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"reference entropy values", reference_values},
      {"closed forms", closed_forms},
      {"entropy gap bounds", bound_suite},
      {"majorization", majorization},
      {"D_SI pseudometric", pseudometric},
      {"incremental similarity", incresim},
      {"EntropyAug correctness", entropy_aug},
      {"FINGER accuracy ordering", finger},
      {"SBM phase behaviour", sbm_phase},
      {"community obfuscation", obfuscation},
      {"DDoS anomaly ranking", anomaly},
      {"weighted insensitivity", weighted},
  };
  int failed = 0, blocked = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const char* label = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "BLOCKED";
    failed += o.status == Status::Fail;
    blocked += o.status == Status::Blocked;
    std::printf("%-7s %2d %s (%.1f s): %s\n", label, index, name, seconds_since(t0), o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d passed, %d failed, %d blocked\n", index - failed - blocked, failed, blocked);
  if (failed) return 1;
  return blocked ? 77 : 0;
}
