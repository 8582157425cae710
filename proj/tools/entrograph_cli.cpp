// entrograph command-line front end.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entrograph/entrograph.hpp"
#include "table.hpp"

#ifndef ENTROGRAPH_DEFAULT_DATA_DIR
#define ENTROGRAPH_DEFAULT_DATA_DIR "data"
#endif

namespace eg = entrograph;
using eg::cli::Table;
using eg::cli::cell;
using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kSizeCap = 3000;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeCap = 3;

struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  std::string out = "-";
  std::string format = "csv";
  std::string record;
  bool force = false;
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats = {"csv", "json"}) {
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--out,-o", c.out, "Output file ('-' for stdout)")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  sub->add_option("--record", c.record, "Write an experiment record (JSON) to this file");
  sub->add_flag("--force", c.force, "Lift the n <= 3000 cap on dense spectral work");
}

void check_cap(std::size_t n, const Common& c) {
  if (n > kSizeCap && !c.force) {
    throw SizeCapExceeded("graph has " + std::to_string(n) + " nodes; exact spectra are capped at " +
                          std::to_string(kSizeCap) + " (use --force)");
  }
}

// Output sink shared by every subcommand.
struct Run {
  std::string command;
  std::vector<std::string> argv;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

Run* g_run = nullptr;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) eg::fail(eg::ErrorCode::ParseError, "cannot write '" + path + "'");
  f << text;
}

void write_record(const Common& c, const std::string& text) {
  if (c.record.empty()) return;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - g_run->start).count();
  json rec;
  rec["command"] = g_run->command;
  rec["parameters"] = g_run->argv;
  rec["seed"] = c.seed;
  rec["version"] = ENTROGRAPH_VERSION;
  rec["duration_seconds"] = secs;
  rec["outputs"] = json::array({json{{"path", c.out}, {"fnv1a64", eg::cli::hex64(eg::cli::fnv1a64(text))}}});
  write_text(c.record, rec.dump(2) + "\n");
}

void emit(const Common& c, const Table& t, const json& summary = json()) {
  std::string text;
  if (c.format == "json") {
    json doc;
    doc["command"] = g_run->command;
    doc["columns"] = t.columns;
    doc["rows"] = eg::cli::to_json_rows(t);
    if (!summary.is_null()) doc["summary"] = summary;
    text = doc.dump(2) + "\n";
  } else {
    text = eg::cli::to_csv(t);
  }
  write_text(c.out, text);
  write_record(c, text);
}

// "a:b:step" (inclusive) or "x,y,z".
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(std::stod(tok));
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
      eg::fail(eg::ErrorCode::InvalidParameter, "grid '" + spec + "' must be start:stop:step with step > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  if (out.empty()) eg::fail(eg::ErrorCode::InvalidParameter, "empty grid '" + spec + "'");
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

struct GraphSource {
  std::string path;
  std::string family;
  std::size_t n = 0;
  std::size_t b = 0;
  bool simplify = false;

  void add_to(CLI::App* sub, bool positional = true) {
    if (positional) {
      sub->add_option("graph", path, "Edge-list file");
    } else {
      sub->add_option("--graph", path, "Edge-list file");
    }
    sub->add_option("--family", family, "Named family instead of a file")
        ->check(CLI::IsMember({"complete", "bipartite", "path", "ring", "star"}));
    sub->add_option("--n", n, "Family size (first side for bipartite)");
    sub->add_option("--b", b, "Second side for bipartite");
    sub->add_flag("--simplify", simplify, "Drop self-loops and repeated edges while loading");
  }

  bool has_family() const { return !family.empty(); }

  eg::FamilySpec spec() const { return {eg::parse_family(family), n, b}; }

  std::string label() const {
    if (!has_family()) return std::filesystem::path(path).filename().string();
    return family + (family == "bipartite" ? "_" + std::to_string(n) + "_" + std::to_string(b)
                                           : "_" + std::to_string(n));
  }

  eg::Graph load() const {
    if (has_family()) return eg::gen_named(spec());
    if (path.empty()) eg::fail(eg::ErrorCode::InvalidParameter, "give a graph file or --family");
    return eg::load_edge_list(path, {simplify});
  }
};

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  Common common;
  std::string model = "er";
  std::size_t n = 100;
  std::size_t b = 0;
  double avg_degree = 4.0;
  double rewire = 0.1;
  std::size_t groups = 2;
  double c_in = 28.0;
  double c_out = 2.0;
  std::string weights;
  std::string labels;
};

int cmd_gen(const GenArgs& a) {
  eg::Graph g;
  std::optional<eg::Partition> truth;
  if (a.model == "er") {
    g = eg::gen_er(a.n, a.avg_degree, a.common.seed);
  } else if (a.model == "ba") {
    g = eg::gen_ba(a.n, a.avg_degree, a.common.seed);
  } else if (a.model == "ws") {
    g = eg::gen_ws(a.n, a.avg_degree, a.rewire, a.common.seed);
  } else if (a.model == "sbm") {
    auto [sg, part] = eg::gen_sbm(eg::SbmParams::equal_groups(a.n, a.groups, a.c_in, a.c_out), a.common.seed);
    g = std::move(sg);
    truth = std::move(part);
  } else {
    g = eg::gen_named({eg::parse_family(a.model), a.n, a.b});
  }
  if (!a.weights.empty()) {
    const auto colon = a.weights.find(':');
    const double lo = std::stod(a.weights.substr(0, colon));
    const double hi = colon == std::string::npos ? lo : std::stod(a.weights.substr(colon + 1));
    g = eg::with_uniform_weights(g, lo, hi, eg::derive_seed(a.common.seed, 1));
  }
  if (!a.labels.empty()) {
    if (!truth) eg::fail(eg::ErrorCode::InvalidParameter, "--labels is only available for --model sbm");
    std::ostringstream os;
    eg::write_partition(os, *truth);
    write_text(a.labels, os.str());
  }
  if (a.common.format == "edgelist") {
    std::ostringstream os;
    eg::write_edge_list(os, g);
    write_text(a.common.out, os.str());
    write_record(a.common, os.str());
    return 0;
  }
  Table t{{"u", "v", "weight"}, {}};
  for (const auto& e : g.edges()) t.add({cell(e.u), cell(e.v), cell(e.weight)});
  emit(a.common, t);
  return 0;
}

// ---------------------------------------------------------------------------
// entropy

struct EntropyArgs {
  Common common;
  GraphSource source;
  bool exact = false;
  bool bounds = false;
  bool baselines = false;
  bool table1 = false;
  std::string data_dir;
};

const std::vector<std::string> kEntropyColumns = {
    "graph",          "n",           "m",           "volume",         "h1",           "hvn",
    "gap",            "rel_error",   "gap_lower",   "gap_lower_applies", "gap_upper_thm1", "gap_upper_b1",
    "gap_upper_b2",   "gap_upper_final", "finger_hat", "finger_tilde", "closed_h1",    "closed_hvn",
    "closed_gap",     "closed_asymptotic"};

std::vector<eg::cli::Cell> entropy_row(const std::string& name, const eg::Graph& g, bool exact, bool bounds,
                                       bool baselines, const std::optional<eg::FamilySpec>& family,
                                       const Common& c) {
  std::vector<eg::cli::Cell> row;
  std::optional<eg::Spectrum> spectrum;
  if (exact) {
    check_cap(g.node_count(), c);
    spectrum = eg::eig_laplacian(g);
  }
  row.push_back(cell(name));
  row.push_back(cell(g.node_count()));
  row.push_back(cell(g.edge_count()));
  row.push_back(cell(g.volume()));
  row.push_back(cell(eg::structural_information(g)));
  if (g.edge_count() == 0) {
    row.resize(kEntropyColumns.size());
    return row;
  }
  const auto rep = spectrum ? eg::entropy_gap(g, *spectrum) : eg::entropy_bounds(g);
  row.push_back(cell(rep.hvn));
  row.push_back(cell(rep.gap));
  row.push_back(cell(rep.rel_error));
  if (bounds) {
    row.push_back(cell(rep.gap_lower));
    row.push_back(cell(rep.gap_lower_applies));
    row.push_back(cell(rep.gap_upper_thm1));
    row.push_back(cell(rep.gap_upper_b1));
    row.push_back(cell(rep.gap_upper_b2));
    row.push_back(cell(rep.gap_upper_final));
  } else {
    row.resize(row.size() + 6);
  }
  if (baselines) {
    row.push_back(spectrum ? cell(eg::finger_hat(g, *spectrum)) : eg::cli::Cell{});
    row.push_back(cell(eg::finger_tilde(g)));
  } else {
    row.resize(row.size() + 2);
  }
  if (family) {
    const auto cf = eg::closed_form(*family);
    row.push_back(cell(cf.h1));
    row.push_back(cell(cf.hvn));
    row.push_back(cell(cf.gap));
    row.push_back(cell(cf.is_asymptotic));
  } else {
    row.resize(row.size() + 4);
  }
  return row;
}

std::string data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ENTROGRAPH_DATA")) return env;
  return ENTROGRAPH_DEFAULT_DATA_DIR;
}

int cmd_entropy(const EntropyArgs& a) {
  Table t{kEntropyColumns, {}};
  if (a.table1) {
    const auto dir = std::filesystem::path(data_dir(a.data_dir));
    for (const char* name : {"zachary", "dolphins"}) {
      const auto file = dir / (std::string(name) + ".txt");
      if (!std::filesystem::exists(file)) {
        std::cerr << "note: " << file.string() << " not found; skipping " << name << "\n";
        continue;
      }
      t.add(entropy_row(name, eg::load_edge_list(file.string()), true, true, true, std::nullopt, a.common));
    }
    t.add(entropy_row("er_500_d40", eg::gen_er(500, 40, a.common.seed), true, true, true, std::nullopt, a.common));
    t.add(entropy_row("ba_500_d8", eg::gen_ba(500, 8, a.common.seed), true, true, true, std::nullopt, a.common));
    const eg::FamilySpec complete{eg::Family::Complete, 500, 0};
    const eg::FamilySpec ring{eg::Family::Ring, 500, 0};
    t.add(entropy_row("complete_500", eg::gen_named(complete), true, true, true, complete, a.common));
    t.add(entropy_row("ring_500", eg::gen_named(ring), true, true, true, ring, a.common));
  } else {
    const auto g = a.source.load();
    std::optional<eg::FamilySpec> fam;
    if (a.source.has_family()) fam = a.source.spec();
    t.add(entropy_row(a.source.label(), g, a.exact, a.bounds, a.baselines, fam, a.common));
  }
  emit(a.common, t);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  Common common;
  std::string model = "er";
  std::string graph;
  std::string n_list = "500";
  std::string degrees = "10";
  double rewire = 0.1;
  std::size_t seeds = 1;
  std::size_t max_weight = 0;
};

int cmd_sweep(const SweepArgs& a) {
  struct Cell {
    std::size_t n = 0;
    double avg_degree = 0.0;
    std::size_t w = 1;
    std::size_t seed_index = 0;
  };
  const bool random_model = a.model == "er" || a.model == "ba" || a.model == "ws";
  const bool from_file = a.model == "file";
  std::optional<eg::Graph> file_graph;
  std::vector<double> ns;
  if (from_file) {
    file_graph = eg::load_edge_list(a.graph);
    ns = {static_cast<double>(file_graph->node_count())};
  } else {
    ns = parse_grid(a.n_list);
  }
  const auto degs = random_model ? parse_grid(a.degrees) : std::vector<double>{0.0};
  std::vector<Cell> cells;
  for (double n : ns) {
    check_cap(static_cast<std::size_t>(n), a.common);
    for (double d : degs)
      for (std::size_t w = (a.max_weight ? 1 : 0); w <= a.max_weight; ++w)
        for (std::size_t s = 0; s < a.seeds; ++s) cells.push_back({static_cast<std::size_t>(n), d, w, s});
  }
  struct Result {
    std::size_t m = 0;
    double h1 = 0, hvn = 0, gap = 0;
    std::optional<double> rel;
    std::uint64_t seed = 0;
  };
  std::vector<Result> results(cells.size());
  eg::parallel_for(cells.size(), [&](std::size_t i) {
    const auto& c = cells[i];
    Result r;
    r.seed = eg::derive_seed(a.common.seed, c.seed_index);
    eg::Graph g;
    if (from_file) {
      g = *file_graph;
    } else if (a.model == "er") {
      g = eg::gen_er(c.n, c.avg_degree, r.seed);
    } else if (a.model == "ba") {
      g = eg::gen_ba(c.n, c.avg_degree, r.seed);
    } else if (a.model == "ws") {
      g = eg::gen_ws(c.n, c.avg_degree, a.rewire, r.seed);
    } else {
      g = eg::gen_named({eg::parse_family(a.model), c.n, 0});
    }
    if (c.w >= 1) g = eg::with_uniform_weights(g, 1.0, static_cast<double>(c.w), eg::derive_seed(r.seed, 1000 + c.w));
    r.m = g.edge_count();
    if (r.m == 0) {
      results[i] = r;
      return;
    }
    const auto rep = eg::entropy_gap(g);
    r.h1 = rep.h1;
    r.hvn = *rep.hvn;
    r.gap = *rep.gap;
    r.rel = rep.rel_error;
    results[i] = r;
  });
  Table t{{"model", "n", "avg_degree", "max_weight", "seed_index", "seed", "m", "h1", "hvn", "gap", "rel_error"}, {}};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const auto& r = results[i];
    t.add({cell(a.model), cell(c.n), random_model ? cell(c.avg_degree) : eg::cli::Cell{},
           c.w ? cell(c.w) : eg::cli::Cell{}, cell(c.seed_index), cell(r.seed), cell(r.m), cell(r.h1), cell(r.hvn),
           cell(r.gap), cell(r.rel)});
  }
  emit(a.common, t);
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
  Common common;
  GraphSource source;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const auto g = a.source.load();
  check_cap(g.node_count(), a.common);
  const auto s = eg::eig_laplacian(g);
  Table t{{"index", "eigenvalue", "gap_to_next"}, {}};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool last = i + 1 == s.size();
    t.add({cell(i + 1), cell(s.eigenvalues[i]),
           last ? eg::cli::Cell{} : cell(s.eigenvalues[i + 1] - s.eigenvalues[i])});
  }
  emit(a.common, t);
  return 0;
}

// ---------------------------------------------------------------------------
// stream

struct StreamArgs {
  Common common;
  std::string path;
  std::string temporal;
  double interval = 0.0;
  std::string measures = "d_si";
  bool check = false;
};

int cmd_stream(const StreamArgs& a) {
  eg::GraphStream stream;
  if (!a.temporal.empty()) {
    if (!(a.interval > 0)) eg::fail(eg::ErrorCode::InvalidParameter, "--temporal needs --interval > 0");
    std::ifstream in(a.temporal);
    if (!in) eg::fail(eg::ErrorCode::ParseError, "cannot open '" + a.temporal + "'");
    stream = eg::temporal_to_stream(eg::read_temporal_edges(in), a.interval);
  } else {
    if (a.path.empty()) eg::fail(eg::ErrorCode::InvalidParameter, "give a stream file or --temporal");
    stream = eg::load_stream(a.path);
  }
  eg::StreamOptions opts;
  for (const auto& m : split_list(a.measures)) {
    switch (eg::parse_measure(m)) {
      case eg::Measure::DSi: break;
      case eg::Measure::DQjs: opts.with_qjs = true; break;
      case eg::Measure::Veo: opts.with_veo = true; break;
    }
  }
  if (opts.with_qjs) check_cap(stream.base.node_count(), a.common);
  const auto series = eg::incre_sim(stream, opts);
  std::optional<eg::DistanceSeries> scratch;
  if (a.check) scratch = eg::scratch_sim(stream);
  Table t{{"t", "added", "deleted", "d_si", "d_qjs", "veo", "scratch_d_si", "abs_deviation"}, {}};
  double max_dev = 0.0;
  for (std::size_t k = 0; k < series.points.size(); ++k) {
    const auto& p = series.points[k];
    std::optional<double> sc, dev;
    if (scratch) {
      sc = scratch->points[k].d_si;
      dev = std::abs(*sc - p.d_si);
      max_dev = std::max(max_dev, *dev);
    }
    t.add({cell(p.timestamp), cell(p.added), cell(p.deleted), cell(p.d_si), cell(p.d_qjs), cell(p.veo), cell(sc),
           cell(dev)});
  }
  json summary;
  if (scratch) {
    std::cerr << "max |incremental - scratch| = " << eg::cli::format_double(max_dev) << "\n";
    summary["max_abs_deviation"] = max_dev;
  }
  emit(a.common, t, summary);
  return 0;
}

// ---------------------------------------------------------------------------
// anomaly

struct AnomalyArgs {
  Common common;
  std::size_t n = 100;
  double avg_degree = 4.0;
  std::size_t snapshots = 10;
  std::string strengths = "5,10,20,30,40";
  std::size_t trials = 100;
  std::string measures = "d_si,d_qjs,veo";
  bool per_trial = false;
};

int cmd_anomaly(const AnomalyArgs& a) {
  check_cap(a.n, a.common);
  std::vector<eg::Measure> measures;
  for (const auto& m : split_list(a.measures)) measures.push_back(eg::parse_measure(m));
  std::vector<std::size_t> strengths;
  for (double k : parse_grid(a.strengths)) strengths.push_back(static_cast<std::size_t>(k));
  const eg::DdosSetup setup{a.n, a.avg_degree, a.snapshots};
  std::vector<eg::DdosTrial> trials(strengths.size() * a.trials);
  eg::parallel_for(trials.size(), [&](std::size_t i) {
    const std::size_t k = strengths[i / a.trials];
    trials[i] = eg::ddos_trial(setup, k, measures, eg::ddos_trial_seed(a.common.seed, k, i % a.trials));
    trials[i].trial = i % a.trials;
  });
  if (a.per_trial) {
    Table t{{"strength", "trial", "attacked"}, {}};
    for (auto m : measures) t.columns.push_back("rank_" + eg::to_string(m));
    for (const auto& tr : trials) {
      std::vector<eg::cli::Cell> row{cell(tr.strength), cell(tr.trial), cell(tr.attacked)};
      for (auto r : tr.ranks) row.push_back(cell(r));
      t.add(std::move(row));
    }
    emit(a.common, t);
    return 0;
  }
  Table t{{"measure", "strength", "rank", "count", "fraction"}, {}};
  for (std::size_t mi = 0; mi < measures.size(); ++mi) {
    for (std::size_t si = 0; si < strengths.size(); ++si) {
      std::vector<std::size_t> hist(a.snapshots + 1, 0);
      for (std::size_t j = 0; j < a.trials; ++j) ++hist[trials[si * a.trials + j].ranks[mi]];
      for (std::size_t r = 1; r <= a.snapshots; ++r) {
        t.add({cell(eg::to_string(measures[mi])), cell(strengths[si]), cell(r), cell(hist[r]),
               cell(static_cast<double>(hist[r]) / static_cast<double>(a.trials))});
      }
    }
  }
  emit(a.common, t);
  return 0;
}

// ---------------------------------------------------------------------------
// design

struct DesignArgs {
  Common common;
  GraphSource source;
  std::size_t budget = 10;
  std::string method = "entropyaug";
  bool exact = false;
};

int cmd_design(const DesignArgs& a) {
  const auto g = a.source.load();
  if (a.exact || a.method == "algebraic") check_cap(g.node_count(), a.common);
  eg::AugmentOptions opts;
  opts.trace_hvn = a.exact;
  eg::AugmentationResult r;
  if (a.method == "entropyaug") {
    r = eg::entropy_aug(g, a.budget, opts);
  } else if (a.method == "bruteforce") {
    r = eg::entropy_aug_bruteforce(g, a.budget, opts);
  } else if (a.method == "random") {
    r = eg::baseline_random(g, a.budget, a.common.seed, opts);
  } else {
    r = eg::baseline_algebraic(g, a.budget, opts);
  }
  Table t{{"step", "u", "v", "h1", "hvn", "in_best_prefix"}, {}};
  t.add({cell(0), {}, {}, cell(r.initial_h1), cell(r.initial_hvn), cell(true)});
  for (std::size_t i = 0; i < r.chosen_edges.size(); ++i) {
    t.add({cell(i + 1), cell(r.chosen_edges[i].u), cell(r.chosen_edges[i].v), cell(r.h1_trace[i]),
           a.exact ? cell(r.hvn_trace[i]) : eg::cli::Cell{}, cell(i < r.best_prefix)});
  }
  emit(a.common, t);
  return 0;
}

// ---------------------------------------------------------------------------
// obfuscate / sbm-experiment

std::vector<std::string> metric_columns() {
  return {"detection_error", "h1", "hvn", "polarization", "lambda2", "lambda3", "lambda4", "lambda5",
          "gap_32", "gap_43", "gap_54"};
}

void push_metrics(std::vector<eg::cli::Cell>& row, const eg::CommunityMetrics& m) {
  row.push_back(cell(m.detection_error));
  row.push_back(cell(m.h1));
  row.push_back(cell(m.hvn));
  row.push_back(cell(m.polarization));
  for (std::size_t i = 1; i < 5; ++i) row.push_back(i < m.eigen_low.size() ? cell(m.eigen_low[i]) : eg::cli::Cell{});
  row.push_back(cell(m.gap_32));
  row.push_back(cell(m.gap_43));
  row.push_back(cell(m.gap_54));
}

struct ObfuscateArgs {
  Common common;
  std::string graph;
  std::string labels;
  std::size_t n = 100;
  std::size_t groups = 2;
  double c_in = 28.0;
  double c_out = 2.0;
  std::size_t budget = 200;
  std::string objective = "max_entropy";
};

int cmd_obfuscate(const ObfuscateArgs& a) {
  eg::Graph g;
  eg::Partition truth;
  if (!a.graph.empty()) {
    if (a.labels.empty()) eg::fail(eg::ErrorCode::InvalidParameter, "--graph needs --labels");
    g = eg::load_edge_list(a.graph);
    truth = eg::load_partition(a.labels);
  } else {
    auto [sg, part] = eg::gen_sbm(eg::SbmParams::equal_groups(a.n, a.groups, a.c_in, a.c_out), a.common.seed);
    g = std::move(sg);
    truth = std::move(part);
  }
  check_cap(g.node_count(), a.common);
  eg::ObfuscationOptions opts;
  opts.objective = eg::parse_objective(a.objective);
  opts.seed = eg::derive_seed(a.common.seed, 7);
  const auto trace = eg::obfuscate(g, truth, a.budget, opts);
  Table t{{"step", "u", "v"}, {}};
  for (auto& c : metric_columns()) t.columns.push_back(c);
  for (const auto& st : trace.steps) {
    std::vector<eg::cli::Cell> row{cell(st.step), st.edge ? cell(st.edge->u) : eg::cli::Cell{},
                                   st.edge ? cell(st.edge->v) : eg::cli::Cell{}};
    push_metrics(row, st.metrics);
    t.add(std::move(row));
  }
  emit(a.common, t);
  return 0;
}

struct SbmArgs {
  Common common;
  std::size_t n = 100;
  std::size_t groups = 2;
  double c_total = 30.0;
  std::string grid = "0:15:1";
  std::size_t seeds = 10;
};

int cmd_sbm(const SbmArgs& a) {
  check_cap(a.n, a.common);
  const auto rows = eg::sbm_experiment(a.n, a.groups, a.c_total, parse_grid(a.grid), a.seeds, a.common.seed);
  Table t{{"c_in", "c_out", "seed_index", "seed", "edges", "gap"}, {}};
  for (auto& c : metric_columns()) t.columns.push_back(c);
  for (const auto& r : rows) {
    std::vector<eg::cli::Cell> row{cell(r.c_in), cell(r.c_out), cell(r.seed_index), cell(r.seed), cell(r.edges),
                                   cell(r.metrics.h1 - r.metrics.hvn)};
    push_metrics(row, r.metrics);
    t.add(std::move(row));
  }
  emit(a.common, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entrograph: von Neumann graph entropy, structural information and their applications"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ENTROGRAPH_VERSION);

  GenArgs gen;
  auto* sub_gen = app.add_subcommand("gen", "Generate a graph");
  gen.common.format = "edgelist";
  add_common(sub_gen, gen.common, {"edgelist", "csv", "json"});
  sub_gen->add_option("--model", gen.model, "er|ba|ws|sbm|complete|bipartite|path|ring|star")
      ->check(CLI::IsMember({"er", "ba", "ws", "sbm", "complete", "bipartite", "path", "ring", "star"}))
      ->capture_default_str();
  sub_gen->add_option("--n", gen.n, "Node count (first side for bipartite)")->capture_default_str();
  sub_gen->add_option("--b", gen.b, "Second side for bipartite");
  sub_gen->add_option("--avg-degree", gen.avg_degree, "Average degree for er/ba/ws")->capture_default_str();
  sub_gen->add_option("--rewire", gen.rewire, "WS rewiring probability")->capture_default_str();
  sub_gen->add_option("--groups", gen.groups, "SBM group count")->capture_default_str();
  sub_gen->add_option("--cin", gen.c_in, "SBM intra-group affinity")->capture_default_str();
  sub_gen->add_option("--cout", gen.c_out, "SBM inter-group affinity")->capture_default_str();
  sub_gen->add_option("--weights", gen.weights, "Uniform edge weights lo:hi");
  sub_gen->add_option("--labels", gen.labels, "Write the SBM ground-truth partition here");

  EntropyArgs ent;
  auto* sub_ent = app.add_subcommand("entropy", "Structural information, von Neumann entropy and gap bounds");
  add_common(sub_ent, ent.common);
  ent.source.add_to(sub_ent);
  sub_ent->add_flag("--exact", ent.exact, "Compute the Laplacian spectrum and the exact entropy");
  sub_ent->add_flag("--bounds", ent.bounds, "Report all gap bounds");
  sub_ent->add_flag("--baselines", ent.baselines, "Report FINGER approximations");
  sub_ent->add_flag("--table1", ent.table1, "Run the bundled reference suite");
  sub_ent->add_option("--data-dir", ent.data_dir, "Directory with bundled edge lists");

  SweepArgs sw;
  auto* sub_sw = app.add_subcommand("sweep", "Entropy gap over a parameter grid");
  add_common(sub_sw, sw.common);
  sub_sw->add_option("--model", sw.model, "er|ba|ws|complete|ring|path|star|file")
      ->check(CLI::IsMember({"er", "ba", "ws", "complete", "ring", "path", "star", "file"}))
      ->capture_default_str();
  sub_sw->add_option("--graph", sw.graph, "Edge-list file for --model file");
  sub_sw->add_option("--n", sw.n_list, "Sizes: list a,b,c or range start:stop:step")->capture_default_str();
  sub_sw->add_option("--avg-degree", sw.degrees, "Average degrees: list or range")->capture_default_str();
  sub_sw->add_option("--rewire", sw.rewire, "WS rewiring probability")->capture_default_str();
  sub_sw->add_option("--seeds", sw.seeds, "Seeds per grid point")->capture_default_str();
  sub_sw->add_option("--weights", sw.max_weight, "Uniform weights in [1,w] for w = 1..W");

  SpectrumArgs sp;
  auto* sub_sp = app.add_subcommand("spectrum", "Laplacian eigenvalues");
  add_common(sub_sp, sp.common);
  sp.source.add_to(sub_sp);

  StreamArgs st;
  auto* sub_st = app.add_subcommand("stream", "Distances between consecutive snapshots of a stream");
  add_common(sub_st, st.common);
  sub_st->add_option("stream", st.path, "Stream file (BASE/DELTA blocks)");
  sub_st->add_option("--temporal", st.temporal, "Timestamped edge list 'u v t' instead of a stream file");
  sub_st->add_option("--interval", st.interval, "Window width for --temporal");
  sub_st->add_option("--measure", st.measures, "Comma list of d_si, d_qjs, veo")->capture_default_str();
  sub_st->add_flag("--check-against-scratch", st.check, "Recompute every distance from full snapshots");

  AnomalyArgs an;
  auto* sub_an = app.add_subcommand("anomaly", "DDoS ranking experiment on BA snapshot streams");
  add_common(sub_an, an.common);
  sub_an->add_option("--n", an.n, "Nodes per snapshot")->capture_default_str();
  sub_an->add_option("--avg-degree", an.avg_degree, "BA average degree")->capture_default_str();
  sub_an->add_option("--snapshots", an.snapshots, "Snapshots per stream")->capture_default_str();
  sub_an->add_option("--strengths", an.strengths, "Attack strengths")->capture_default_str();
  sub_an->add_option("--trials", an.trials, "Trials per strength")->capture_default_str();
  sub_an->add_option("--measures", an.measures, "Comma list of d_si, d_qjs, veo")->capture_default_str();
  sub_an->add_flag("--per-trial", an.per_trial, "One row per trial instead of rank histograms");

  DesignArgs de;
  auto* sub_de = app.add_subcommand("design", "Greedy edge addition");
  add_common(sub_de, de.common);
  de.source.add_to(sub_de);
  sub_de->add_option("--budget", de.budget, "Edges to add")->capture_default_str();
  sub_de->add_option("--method", de.method, "entropyaug|bruteforce|random|algebraic")
      ->check(CLI::IsMember({"entropyaug", "bruteforce", "random", "algebraic"}))
      ->capture_default_str();
  sub_de->add_flag("--exact", de.exact, "Trace the exact von Neumann entropy");

  ObfuscateArgs ob;
  auto* sub_ob = app.add_subcommand("obfuscate", "Community obfuscation by inter-community edge addition");
  add_common(sub_ob, ob.common);
  sub_ob->add_option("--graph", ob.graph, "Edge-list file (default: generate an SBM)");
  sub_ob->add_option("--labels", ob.labels, "Ground-truth partition file for --graph");
  sub_ob->add_option("--n", ob.n, "SBM nodes")->capture_default_str();
  sub_ob->add_option("--groups", ob.groups, "SBM groups")->capture_default_str();
  sub_ob->add_option("--cin", ob.c_in, "SBM intra-group affinity")->capture_default_str();
  sub_ob->add_option("--cout", ob.c_out, "SBM inter-group affinity")->capture_default_str();
  sub_ob->add_option("--budget", ob.budget, "Edges to add")->capture_default_str();
  sub_ob->add_option("--objective", ob.objective, "max_entropy|min_polarization")
      ->check(CLI::IsMember({"max_entropy", "min_polarization"}))
      ->capture_default_str();

  SbmArgs sb;
  auto* sub_sb = app.add_subcommand("sbm-experiment", "Detection error and spectra across c_out");
  add_common(sub_sb, sb.common);
  sub_sb->add_option("--n", sb.n, "Nodes")->capture_default_str();
  sub_sb->add_option("--groups", sb.groups, "Groups (2 or 3)")->capture_default_str();
  sub_sb->add_option("--ctotal", sb.c_total, "c_in + c_out")->capture_default_str();
  sub_sb->add_option("--cout-grid", sb.grid, "c_out values: list or start:stop:step")->capture_default_str();
  sub_sb->add_option("--seeds", sb.seeds, "Seeds per c_out")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  Run run;
  run.argv.assign(argv + 1, argv + argc);
  g_run = &run;
  try {
    if (sub_gen->parsed()) return run.command = "gen", cmd_gen(gen);
    if (sub_ent->parsed()) return run.command = "entropy", cmd_entropy(ent);
    if (sub_sw->parsed()) return run.command = "sweep", cmd_sweep(sw);
    if (sub_sp->parsed()) return run.command = "spectrum", cmd_spectrum(sp);
    if (sub_st->parsed()) return run.command = "stream", cmd_stream(st);
    if (sub_an->parsed()) return run.command = "anomaly", cmd_anomaly(an);
    if (sub_de->parsed()) return run.command = "design", cmd_design(de);
    if (sub_ob->parsed()) return run.command = "obfuscate", cmd_obfuscate(ob);
    if (sub_sb->parsed()) return run.command = "sbm-experiment", cmd_sbm(sb);
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const eg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == eg::ErrorCode::ParseError ? kExitParse : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
