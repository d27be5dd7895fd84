// bva: command-line front end for the boundary vicinity library.
//
// Exit codes: 0 success, 1 usage, 2 input error, 3 too many unconverged
// boundary walks (outputs are still written).

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bva/bva.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace bva;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnconverged = 3;

struct InputError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 1;
  double q_threshold = kDefaultQThreshold;
  double min_gain = kDefaultMinModularityGain;
  WalkConfig walk;
  unsigned threads = 1;
  double max_unconverged = 0.05;

  // betweenness
  bool oracle = false;
  // boundary
  bool nodes_only = false;
  // overlap
  std::string a_path;
  std::string b_path;
  std::int64_t k_min = 1;
  std::int64_t k_max = 0;
  // generate
  std::size_t n = 100;
  double p = 0.06;
  std::size_t m = 2;
  std::size_t parts = 3;
  std::size_t linkers = 26;
  std::string kind = "er";
  std::string truth;
  // temporal
  std::string events;
  std::int64_t window = 3600;
  double z = kDefaultSpikeZ;
};

LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return load_edge_list(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Writes to a file, or stdout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot write " + path);
  }
  std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string params_line(const Options& o, bool with_walk) {
  std::ostringstream s;
  s << "seed=" << o.seed << " q_threshold=" << report::format_double(o.q_threshold)
    << " min_modularity_gain=" << report::format_double(o.min_gain);
  if (with_walk) {
    s << " walknum=" << o.walk.walknum << " stepnum=" << o.walk.stepnum
      << " step_fraction=" << report::format_double(o.walk.step_fraction)
      << " psrf_low=" << report::format_double(o.walk.psrf_low)
      << " psrf_high=" << report::format_double(o.walk.psrf_high)
      << " max_batches=" << o.walk.max_batches << " num_chains=" << o.walk.num_chains;
  }
  return s.str();
}

std::string preamble(const std::string& command, const std::string& params) {
  return std::string("bva ") + kVersion + " " + command + "\n" + params;
}

json params_json(const Options& o, bool with_walk) {
  json p{{"q_threshold", o.q_threshold}, {"min_modularity_gain", o.min_gain}};
  if (with_walk) {
    p["walknum"] = o.walk.walknum;
    p["stepnum"] = o.walk.stepnum;
    p["step_fraction"] = o.walk.step_fraction;
    p["psrf_low"] = o.walk.psrf_low;
    p["psrf_high"] = o.walk.psrf_high;
    p["max_batches"] = o.walk.max_batches;
    p["num_chains"] = o.walk.num_chains;
    p["max_unconverged"] = o.max_unconverged;
  }
  return p;
}

json versions_json() {
  return {{"bva", kVersion}, {"compiler", __VERSION__}, {"cxx_standard", __cplusplus}};
}

json input_json(const std::string& path, const LoadedGraph& lg) {
  return {{"path", path},
          {"nodes", lg.graph.num_nodes()},
          {"edges", lg.graph.num_edges()},
          {"self_loops_dropped", lg.dropped.self_loops},
          {"duplicates_dropped", lg.dropped.duplicates}};
}

json components_json(const ComponentCommunities& cc) {
  json out = json::array();
  for (const auto& c : cc.components) {
    out.push_back({{"index", c.index},
                   {"nodes", c.nodes},
                   {"edges", c.edges},
                   {"communities", c.num_communities},
                   {"passes", c.passes},
                   {"modularity", c.modularity},
                   {"skipped", c.skipped}});
  }
  return out;
}

const std::string& label(const LoadedGraph& lg, NodeId v) { return lg.labels[v]; }

int cmd_components(const Options& o) {
  const auto lg = load_graph(o.input);
  const auto parts = connected_components(lg.graph);
  Sink sink(o.out);
  if (o.format == "json") {
    json comps = json::array();
    for (const auto& c : parts.components) {
      json members = json::array();
      for (NodeId v : c) members.push_back(label(lg, v));
      comps.push_back(std::move(members));
    }
    sink.get() << json{{"version", kVersion}, {"input", input_json(o.input, lg)}, {"components", comps}}.dump(2)
               << '\n';
  } else {
    report::write_components_csv(sink.get(), parts, lg.labels, preamble("components", "input=" + o.input));
  }
  return 0;
}

ComponentCommunities communities_for(const Options& o, const LoadedGraph& lg) {
  return detect_communities_by_component(lg.graph, o.seed, o.q_threshold, o.min_gain, o.threads);
}

int cmd_communities(const Options& o) {
  const auto lg = load_graph(o.input);
  const auto cc = communities_for(o, lg);
  Sink sink(o.out);
  if (o.format == "json") {
    json labels = json::object();
    for (NodeId v = 0; v < lg.graph.num_nodes(); ++v) labels[label(lg, v)] = cc.labeling.labels[v];
    sink.get() << json{{"version", kVersion},
                       {"seed", o.seed},
                       {"parameters", params_json(o, false)},
                       {"modularity", cc.labeling.modularity},
                       {"num_communities", cc.labeling.num_communities},
                       {"components", components_json(cc)},
                       {"labels", labels}}
                      .dump(2)
               << '\n';
  } else {
    report::write_communities_csv(sink.get(), cc.labeling, lg.labels,
                                  preamble("communities", params_line(o, false)));
  }
  return 0;
}

int cmd_boundary(const Options& o) {
  const auto lg = load_graph(o.input);
  const auto cc = communities_for(o, lg);
  const auto b = structural_boundary(lg.graph, cc);
  Sink sink(o.out);
  if (o.format == "json") {
    json edges = json::array();
    for (const Edge& e : b.edges) edges.push_back({label(lg, e.u), label(lg, e.v)});
    json nodes = json::array();
    for (std::size_t i = 0; i < b.nodes.size(); ++i)
      nodes.push_back({{"node", label(lg, b.nodes[i])}, {"community", b.home_community[i]}});
    sink.get() << json{{"version", kVersion},
                       {"seed", o.seed},
                       {"parameters", params_json(o, false)},
                       {"edges", edges},
                       {"nodes", nodes}}
                      .dump(2)
               << '\n';
  } else if (o.nodes_only) {
    report::write_boundary_nodes_csv(sink.get(), b, lg.labels, preamble("boundary", params_line(o, false)));
  } else {
    report::write_boundary_edges_csv(sink.get(), b, cc.labeling, lg.labels,
                                     preamble("boundary", params_line(o, false)));
  }
  return 0;
}

int cmd_betweenness(const Options& o) {
  const auto lg = load_graph(o.input);
  if (o.oracle && lg.graph.num_nodes() > kBruteForceMaxNodes)
    throw InputError("--oracle is limited to " + std::to_string(kBruteForceMaxNodes) + " nodes");
  const auto bc = o.oracle ? betweenness_bruteforce(lg.graph) : betweenness_brandes(lg.graph, o.threads);
  Sink sink(o.out);
  const std::string method = o.oracle ? "bruteforce" : "brandes";
  if (o.format == "json") {
    json values = json::object();
    for (NodeId v = 0; v < lg.graph.num_nodes(); ++v) values[label(lg, v)] = bc.values[v];
    sink.get() << json{{"version", kVersion}, {"method", method}, {"betweenness", values}}.dump(2) << '\n';
  } else {
    report::write_betweenness_csv(sink.get(), bc, lg.labels, preamble("betweenness", "method=" + method));
  }
  return 0;
}

report::ScoreColumn read_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return report::read_score_csv(in);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_overlap(const Options& o) {
  const auto a = read_scores(o.a_path);
  const auto b = read_scores(o.b_path);
  if (a.ids != b.ids) throw InputError("score files list different nodes or a different order");
  const auto n = static_cast<std::int64_t>(a.ids.size());
  const std::int64_t hi = o.k_max == 0 ? n : o.k_max;
  if (o.k_min < 1 || hi < o.k_min || hi > n)
    throw InvalidArgument("k range must satisfy 1 <= k-min <= k-max <= " + std::to_string(n));
  std::vector<std::int64_t> ks;
  for (std::int64_t k = o.k_min; k <= hi; ++k) ks.push_back(k);
  const auto curve = rank_overlap(a.values, b.values, ks);
  Sink sink(o.out);
  if (o.format == "json") {
    json points = json::array();
    for (std::size_t i = 0; i < curve.ks.size(); ++i)
      points.push_back({{"k", curve.ks[i]}, {"proportion", curve.proportions[i]}});
    sink.get() << json{{"version", kVersion}, {"a", o.a_path}, {"b", o.b_path}, {"overlap", points}}.dump(2)
               << '\n';
  } else {
    report::write_overlap_csv(sink.get(), curve, preamble("overlap", "a=" + o.a_path + " b=" + o.b_path));
  }
  return 0;
}

int cmd_generate(const Options& o, const std::string& model) {
  std::string params = "seed=" + std::to_string(o.seed) + " n=" + std::to_string(o.n);
  Graph g;
  std::optional<PlantedNetwork> planted;
  if (model == "er") {
    g = erdos_renyi(o.n, o.p, o.seed);
    params += " p=" + report::format_double(o.p);
  } else if (model == "pa") {
    g = preferential_attachment(o.n, o.m, o.seed);
    params += " m=" + std::to_string(o.m);
  } else {
    planted = o.kind == "pa" ? planted_preferential_attachment(o.parts, o.n, o.m, o.linkers, o.seed)
                             : planted_erdos_renyi(o.parts, o.n, o.p, o.linkers, o.seed);
    params += " kind=" + o.kind + " parts=" + std::to_string(o.parts) + " k=" + std::to_string(o.linkers) +
              (o.kind == "pa" ? " m=" + std::to_string(o.m) : " p=" + report::format_double(o.p));
    g = planted->graph;
  }
  Sink sink(o.out);
  sink.get() << "# bva " << kVersion << " generate " << model << "\n# " << params << '\n';
  write_edge_list(sink.get(), g);
  if (planted && !o.truth.empty()) {
    Sink truth(o.truth);
    truth.get() << "# bva " << kVersion << " generate planted\n# " << params << '\n'
                << "node_id,planted_community,linker,planted_boundary\n";
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const bool linker = std::binary_search(planted->linkers.begin(), planted->linkers.end(), v);
      const bool boundary =
          std::binary_search(planted->planted_boundary.begin(), planted->planted_boundary.end(), v);
      truth.get() << v << ',' << planted->planted_labels[v] << ',' << linker << ',' << boundary << '\n';
    }
  }
  return 0;
}

json spikes_json(const SpikeReport& s) {
  json z = json::array();
  for (double x : s.zscores) z.push_back(x);  // non-finite values are written as null
  return {{"spike_windows", s.spike_windows}, {"median", s.median}, {"mad", s.mad}, {"zscores", z}};
}

int cmd_temporal(const Options& o) {
  const auto lg = load_graph(o.input);
  std::ifstream in(o.events);
  if (!in) throw InputError("cannot read " + o.events);
  EventLog log;
  try {
    log = load_events(in, lg);
  } catch (const ParseError& e) {
    throw InputError(o.events + ": " + e.what());
  }
  const auto cc = communities_for(o, lg);
  const auto b = structural_boundary(lg.graph, cc);
  if (b.empty()) throw InputError("graph has no boundary nodes at this modularity threshold");
  std::vector<NodeId> all(lg.graph.num_nodes());
  for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
  if (2 * b.nodes.size() > all.size())
    throw InputError("boundary covers more than half the graph; no disjoint control set of equal size");

  const auto total = bin_events(log.events, o.window);
  const auto boundary = bin_events(log.events, o.window, std::span<const NodeId>(b.nodes));
  const auto control = control_series(log.events, b.nodes, all, o.window, o.seed);
  const std::string params = params_line(o, false) + " window_seconds=" + std::to_string(o.window) +
                             " z_threshold=" + report::format_double(o.z);
  Sink sink(o.out);
  if (o.format == "json") {
    std::optional<SpikeReport> st, sb, sc;
    if (total.totals.size() >= 5) {
      st = detect_spikes(total.totals, o.z);
      sb = detect_spikes(boundary.actives, o.z);
      sc = detect_spikes(control.actives, o.z);
    }
    json doc{{"version", kVersion},
             {"seed", o.seed},
             {"parameters", params_json(o, false)},
             {"window_seconds", o.window},
             {"t0", total.t0},
             {"boundary_nodes", b.nodes.size()},
             {"unknown_event_labels", log.unknown_labels.size()},
             {"total", total.totals},
             {"boundary_active", boundary.actives},
             {"control_active", control.actives}};
    if (st) {
      doc["spikes"] = {{"total", spikes_json(*st)}, {"boundary", spikes_json(*sb)}, {"control", spikes_json(*sc)}};
    } else {
      doc["spikes"] = nullptr;
    }
    sink.get() << doc.dump(2) << '\n';
  } else {
    report::write_temporal_csv(sink.get(), total, boundary, control, preamble("temporal", params));
  }
  return 0;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  fn(out);
}

int cmd_pipeline(const Options& o) {
  const auto lg = load_graph(o.input);
  PipelineConfig cfg;
  cfg.seed = o.seed;
  cfg.q_threshold = o.q_threshold;
  cfg.min_modularity_gain = o.min_gain;
  cfg.walk = o.walk;
  cfg.threads = o.threads;
  const auto r = run_pipeline(lg.graph, cfg);

  const fs::path dir = o.out == "-" ? fs::path("bva_out") : fs::path(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());

  const std::string pre = preamble("pipeline", params_line(o, true));
  std::vector<std::string> artifacts{"components.csv", "communities.csv", "boundary_edges.csv",
                                     "boundary_nodes.csv", "scores.csv"};
  write_file(dir / "components.csv", [&](std::ostream& s) {
    report::write_components_csv(s, r.communities.partition, lg.labels, pre);
  });
  write_file(dir / "communities.csv", [&](std::ostream& s) {
    report::write_communities_csv(s, r.communities.labeling, lg.labels, pre);
  });
  write_file(dir / "boundary_edges.csv", [&](std::ostream& s) {
    report::write_boundary_edges_csv(s, r.boundary, r.communities.labeling, lg.labels, pre);
  });
  write_file(dir / "boundary_nodes.csv",
             [&](std::ostream& s) { report::write_boundary_nodes_csv(s, r.boundary, lg.labels, pre); });
  write_file(dir / "scores.csv", [&](std::ostream& s) { report::write_scores_csv(s, r.scores, lg.labels, pre); });
  if (o.format == "dot") {
    artifacts.push_back("scores.dot");
    write_file(dir / "scores.dot",
               [&](std::ostream& s) { report::write_dot(s, lg.graph, r.scores.normalized, lg.labels, pre); });
  } else if (o.format == "json") {
    artifacts.push_back("scores.json");
    json scores = json::array();
    for (NodeId v = 0; v < lg.graph.num_nodes(); ++v)
      scores.push_back({{"node", label(lg, v)}, {"raw", r.scores.raw[v]}, {"normalized", r.scores.normalized[v]}});
    write_file(dir / "scores.json", [&](std::ostream& s) {
      s << json{{"version", kVersion}, {"seed", o.seed}, {"parameters", params_json(o, true)}, {"scores", scores}}
               .dump(2)
        << '\n';
    });
  }

  const std::size_t unconverged = r.scores.unconverged();
  const double fraction =
      r.boundary.nodes.empty() ? 0.0 : static_cast<double>(unconverged) / static_cast<double>(r.boundary.nodes.size());
  const bool too_many = fraction > o.max_unconverged;

  json walks = json::array();
  for (const auto& w : r.scores.walks) {
    walks.push_back({{"node", label(lg, w.node)},
                     {"community", w.community},
                     {"stepnum", w.stepnum},
                     {"walkers", w.walkers_used},
                     {"batches", w.batches},
                     {"psrf", w.psrf},
                     {"converged", w.converged}});
  }
  artifacts.push_back("manifest.json");
  json manifest{
      {"tool", "bva"},
      {"command", "pipeline"},
      {"versions", versions_json()},
      {"input", input_json(o.input, lg)},
      {"seed", o.seed},
      {"parameters", params_json(o, true)},
      {"runtime",
       {{"threads", o.threads},
        {"timings_ms",
         {{"communities", r.timings.communities_ms},
          {"boundary", r.timings.boundary_ms},
          {"walks", r.timings.walks_ms}}}}},
      {"components", components_json(r.communities)},
      {"communities", {{"count", r.communities.labeling.num_communities}, {"modularity", r.communities.labeling.modularity}}},
      {"boundary", {{"edges", r.boundary.edges.size()}, {"nodes", r.boundary.nodes.size()}}},
      {"convergence", {{"unconverged", unconverged}, {"fraction", fraction}, {"exceeds_limit", too_many}}},
      {"walks", walks},
      {"status", r.warnings.empty() ? "ok" : "warning"},
      {"warnings", r.warnings},
      {"artifacts", artifacts},
  };
  write_file(dir / "manifest.json", [&](std::ostream& s) { s << manifest.dump(2) << '\n'; });

  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  if (too_many) {
    std::cerr << "error: " << unconverged << " of " << r.boundary.nodes.size()
              << " boundary walks did not converge (limit " << o.max_unconverged << ")\n";
    return kExitUnconverged;
  }
  return 0;
}

void add_community_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Master random seed")->capture_default_str();
  cmd->add_option("--q-threshold", o.q_threshold, "Minimum modularity for a component to be analysed")
      ->capture_default_str();
  cmd->add_option("--min-gain", o.min_gain, "Louvain stopping gain")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("-i,--input", o.input, "Edge list file")->required();
}

void add_output(CLI::App* cmd, Options& o, std::vector<std::string> formats) {
  cmd->add_option("-o,--out", o.out, "Output file ('-' for stdout)")->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")->capture_default_str()->check(CLI::IsMember(formats));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary vicinity ranking, betweenness baselines and synthetic networks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* pipeline = app.add_subcommand("pipeline", "Components, communities, boundary and vicinity scores");
  add_input(pipeline, o);
  add_community_flags(pipeline, o);
  pipeline->add_option("--walknum", o.walk.walknum, "Walkers per convergence batch")->capture_default_str();
  pipeline->add_option("--stepnum", o.walk.stepnum, "Steps per walk (0 = from component size)")
      ->capture_default_str();
  pipeline->add_option("--step-fraction", o.walk.step_fraction, "Multiplier for the automatic step count")
      ->capture_default_str();
  pipeline->add_option("--psrf-low", o.walk.psrf_low, "Lower PSRF convergence bound")->capture_default_str();
  pipeline->add_option("--psrf-high", o.walk.psrf_high, "Upper PSRF convergence bound")->capture_default_str();
  pipeline->add_option("--max-batches", o.walk.max_batches, "Batches before giving up")->capture_default_str();
  pipeline->add_option("--max-unconverged", o.max_unconverged, "Tolerated fraction of unconverged boundary nodes")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  pipeline->add_option("-o,--out", o.out, "Output directory")->default_str("bva_out");
  pipeline->add_option("--format", o.format, "Extra score format besides CSV")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json", "dot"}));

  auto* components = app.add_subcommand("components", "Connected components");
  add_input(components, o);
  add_output(components, o, {"csv", "json"});

  auto* communities = app.add_subcommand("communities", "Louvain communities per component");
  add_input(communities, o);
  add_community_flags(communities, o);
  add_output(communities, o, {"csv", "json"});

  auto* boundary = app.add_subcommand("boundary", "Boundary edges between communities");
  add_input(boundary, o);
  add_community_flags(boundary, o);
  add_output(boundary, o, {"csv", "json"});
  boundary->add_flag("--nodes", o.nodes_only, "Write boundary nodes instead of edges");

  auto* betweenness = app.add_subcommand("betweenness", "Exact betweenness centrality");
  add_input(betweenness, o);
  add_output(betweenness, o, {"csv", "json"});
  betweenness->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
  betweenness->add_flag("--oracle", o.oracle, "Use the all-pairs brute-force reference (small graphs)");

  auto* overlap = app.add_subcommand("overlap", "Top-k overlap of two score files");
  overlap->add_option("-a", o.a_path, "First score CSV")->required();
  overlap->add_option("-b", o.b_path, "Second score CSV")->required();
  overlap->add_option("--k-min", o.k_min, "Smallest k")->capture_default_str();
  overlap->add_option("--k-max", o.k_max, "Largest k (0 = number of nodes)")->capture_default_str();
  add_output(overlap, o, {"csv", "json"});

  auto* generate = app.add_subcommand("generate", "Synthetic graphs");
  generate->require_subcommand(1);
  std::string model;
  for (const char* name : {"er", "pa", "planted"}) {
    auto* g = generate->add_subcommand(name, std::string(name) == "er"   ? "Erdos-Renyi G(n, p)"
                                             : std::string(name) == "pa" ? "Preferential attachment"
                                                                         : "Parts stitched by linker nodes");
    g->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    g->add_option("-n", o.n, "Nodes (per part for planted)")->capture_default_str();
    g->add_option("-o,--out", o.out, "Edge list file ('-' for stdout)")->capture_default_str();
    if (std::string(name) != "pa") g->add_option("-p", o.p, "Edge probability")->capture_default_str();
    if (std::string(name) != "er") g->add_option("-m", o.m, "Edges per arriving node")->capture_default_str();
    if (std::string(name) == "planted") {
      g->add_option("--kind", o.kind, "Part model")->capture_default_str()->check(CLI::IsMember({"er", "pa"}));
      g->add_option("--parts", o.parts, "Number of parts")->capture_default_str();
      g->add_option("-k,--linkers", o.linkers, "Cross-linking nodes")->capture_default_str();
      g->add_option("--truth", o.truth, "Write planted labels and boundary to this CSV");
    }
    g->callback([&model, name] { model = name; });
  }

  auto* temporal = app.add_subcommand("temporal", "Boundary and control activity per time window");
  add_input(temporal, o);
  add_community_flags(temporal, o);
  add_output(temporal, o, {"csv", "json"});
  temporal->add_option("--events", o.events, "epoch_seconds,node_id file")->required();
  temporal->add_option("--window", o.window, "Window length in seconds")->capture_default_str();
  temporal->add_option("--z", o.z, "Spike threshold on the robust z-score")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    o.walk.seed = o.seed;
    o.walk.validate();
    if (pipeline->parsed()) return cmd_pipeline(o);
    if (components->parsed()) return cmd_components(o);
    if (communities->parsed()) return cmd_communities(o);
    if (boundary->parsed()) return cmd_boundary(o);
    if (betweenness->parsed()) return cmd_betweenness(o);
    if (overlap->parsed()) return cmd_overlap(o);
    if (generate->parsed()) return cmd_generate(o, model);
    if (temporal->parsed()) return cmd_temporal(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
