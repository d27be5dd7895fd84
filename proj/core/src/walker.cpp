#include "bva/walker.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "bva/error.hpp"
#include "parallel.hpp"

namespace bva {

void WalkConfig::validate() const {
  if (!(psrf_low < 1.0 && 1.0 < psrf_high)) {
    throw InvalidArgument("PSRF window must satisfy psrf_low < 1 < psrf_high");
  }
  if (walknum < 4) throw InvalidArgument("walknum must be at least 4");
  if (max_batches < 1) throw InvalidArgument("max_batches must be positive");
  if (num_chains < 2) throw InvalidArgument("num_chains must be at least 2");
  if (!(step_fraction > 0.0)) {
    throw InvalidArgument("step_fraction must be positive");
  }
}

std::uint32_t default_step_count(std::size_t n) {
  if (n < 2) throw InvalidArgument("default_step_count needs n >= 2");
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_ln_n = std::log(ln_n);
  const double steps = ln_ln_n >= 1.0 ? std::ceil(ln_n / ln_ln_n) : std::ceil(ln_n);
  return std::max<std::uint32_t>(2, static_cast<std::uint32_t>(steps));
}

std::vector<NodeId> walk_path(const Graph& mask, NodeId start,
                              std::uint32_t stepnum, Rng& rng) {
  if (start >= mask.num_nodes()) {
    throw InvalidArgument("walk start " + std::to_string(start) +
                          " is not a node of the mask");
  }
  std::vector<NodeId> path;
  path.reserve(static_cast<std::size_t>(stepnum) + 1);
  NodeId node = start;
  path.push_back(node);
  for (std::uint32_t s = 0; s < stepnum; ++s) {
    const auto nb = mask.neighbors(node);
    if (nb.empty()) break;
    node = nb[rng.below(nb.size())];
    path.push_back(node);
  }
  return path;
}

VisitCounts random_walk(const Graph& mask, NodeId start, std::uint32_t stepnum,
                        Rng& rng) {
  VisitCounts counts(mask.num_nodes(), 0);
  for (NodeId v : walk_path(mask, start, stepnum, rng)) ++counts[v];
  return counts;
}

VisitCounts WalkBatch::counts(std::size_t walk) const {
  VisitCounts out(num_nodes, 0);
  for (NodeId v : paths.at(walk)) ++out[v];
  return out;
}

std::vector<std::uint64_t> WalkBatch::totals() const {
  std::vector<std::uint64_t> out(num_nodes, 0);
  for (const auto& path : paths) {
    for (NodeId v : path) ++out[v];
  }
  return out;
}

namespace {

double psrf_of(std::span<const std::vector<NodeId>> paths,
               std::size_t num_nodes, std::size_t num_chains) {
  if (num_chains < 2) throw InvalidArgument("PSRF needs at least 2 chains");
  if (paths.size() % num_chains != 0) {
    throw InvalidArgument("walk count is not divisible by the chain count");
  }
  const std::size_t n = paths.size() / num_chains;
  if (n < 2) throw InvalidArgument("PSRF needs at least 2 walks per chain");

  // Per chain and node: sum and sum of squares of per-walk counts. Counts are
  // small integers, so these sums are exact in double.
  std::vector<double> sum(num_chains * num_nodes, 0.0);
  std::vector<double> sumsq(num_chains * num_nodes, 0.0);
  std::vector<char> seen(num_nodes, 0);
  std::vector<NodeId> touched;
  std::vector<NodeId> sorted;
  for (std::size_t w = 0; w < paths.size(); ++w) {
    const std::size_t chain = w / n;
    sorted.assign(paths[w].begin(), paths[w].end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      const NodeId v = sorted[i];
      if (v >= num_nodes) throw InvalidArgument("walk visits unknown node");
      const auto c = static_cast<double>(j - i);
      sum[chain * num_nodes + v] += c;
      sumsq[chain * num_nodes + v] += c * c;
      if (!seen[v]) {
        seen[v] = 1;
        touched.push_back(v);
      }
      i = j;
    }
  }

  const auto nd = static_cast<double>(n);
  const auto md = static_cast<double>(num_chains);
  bool any = false;
  double worst = 0.0;
  for (NodeId v : touched) {
    double within = 0.0;
    double mean_of_means = 0.0;
    for (std::size_t c = 0; c < num_chains; ++c) {
      const double s = sum[c * num_nodes + v];
      const double q = sumsq[c * num_nodes + v];
      within += (nd * q - s * s) / (nd * (nd - 1.0));
      mean_of_means += s / nd;
    }
    within /= md;
    if (!(within > 0.0)) continue;
    mean_of_means /= md;
    double between_over_n = 0.0;
    for (std::size_t c = 0; c < num_chains; ++c) {
      const double d = sum[c * num_nodes + v] / nd - mean_of_means;
      between_over_n += d * d;
    }
    between_over_n /= md - 1.0;
    const double pooled = (nd - 1.0) / nd * within + between_over_n;
    const double r = std::sqrt(pooled / within);
    worst = any ? std::max(worst, r) : r;
    any = true;
  }
  return any ? worst : 1.0;
}

}  // namespace

double psrf(const WalkBatch& batch, std::size_t num_chains) {
  return psrf_of(batch.paths, batch.num_nodes, num_chains);
}

ConvergedWalks run_converged_walks(const Graph& mask, NodeId start,
                                   const WalkConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  if (cfg.stepnum < 1) throw InvalidArgument("stepnum must be at least 1");
  if (start >= mask.num_nodes()) {
    throw InvalidArgument("walk start " + std::to_string(start) +
                          " is not a node of the mask");
  }
  ConvergedWalks out;
  out.batch.origin = start;
  out.batch.num_nodes = mask.num_nodes();
  std::uint64_t walker = 0;
  while (out.batches < cfg.max_batches) {
    for (std::uint32_t w = 0; w < cfg.walknum; ++w, ++walker) {
      Rng rng(derive_seed(cfg.seed, stream, walker));
      out.batch.paths.push_back(walk_path(mask, start, cfg.stepnum, rng));
    }
    ++out.batches;
    const std::size_t usable =
        out.batch.size() - out.batch.size() % cfg.num_chains;
    out.psrf = psrf_of(std::span(out.batch.paths).first(usable),
                       out.batch.num_nodes, cfg.num_chains);
    if (out.psrf >= cfg.psrf_low && out.psrf <= cfg.psrf_high) {
      out.converged = true;
      break;
    }
  }
  return out;
}

std::vector<double> scale_community_weights(std::span<const double> visits,
                                            std::size_t community_size,
                                            std::size_t n_total) {
  if (n_total == 0 || community_size > n_total) {
    throw InvalidArgument("community size must lie in [0, n_total], n_total >= 1");
  }
  const double factor =
      static_cast<double>(community_size) / static_cast<double>(n_total);
  std::vector<double> out(visits.begin(), visits.end());
  for (double& x : out) x *= factor;
  return out;
}

std::size_t VisitScores::unconverged() const {
  return static_cast<std::size_t>(std::count_if(
      walks.begin(), walks.end(), [](const auto& w) { return !w.converged; }));
}

namespace {

struct NodeResult {
  BoundaryWalkReport report;
  // Per-walker mean visits, scaled, keyed by parent node id.
  std::vector<std::pair<NodeId, double>> contribution;
};

}  // namespace

VisitScores boundary_vicinity_scores(const Graph& g, const CommunityLabeling& labeling,
                const BoundarySet& boundary, const WalkConfig& cfg,
                unsigned threads) {
  cfg.validate();
  if (labeling.labels.size() != g.num_nodes()) {
    throw InvalidArgument("labeling does not match graph");
  }
  if (boundary.home_community.size() != boundary.nodes.size()) {
    throw InvalidArgument("boundary set is inconsistent");
  }
  VisitScores out;
  out.raw.assign(g.num_nodes(), 0.0);
  out.normalized.assign(g.num_nodes(), 0.0);
  if (boundary.nodes.empty()) {
    out.status = ScoreStatus::empty_boundary;
    return out;
  }

  std::vector<std::vector<NodeId>> members(labeling.num_communities);
  for (NodeId v = 0; v < g.num_nodes(); ++v) members[labeling.labels[v]].push_back(v);
  std::unordered_map<CommunityId, Subgraph> masks;
  for (CommunityId c : boundary.home_community) {
    if (!masks.contains(c)) masks.emplace(c, subgraph(g, members[c]));
  }

  std::vector<std::uint32_t> steps(boundary.nodes.size(), cfg.stepnum);
  if (cfg.stepnum == 0) {
    const auto parts = connected_components(g);
    for (std::size_t i = 0; i < boundary.nodes.size(); ++i) {
      const auto size = parts.components[parts.component_id[boundary.nodes[i]]].size();
      const double scaled = std::ceil(cfg.step_fraction * default_step_count(size));
      steps[i] = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(scaled));
    }
  }

  std::vector<NodeResult> results(boundary.nodes.size());
  detail::parallel_for(boundary.nodes.size(), threads, [&](std::size_t i) {
    const NodeId node = boundary.nodes[i];
    const CommunityId c = boundary.home_community[i];
    const Subgraph& mask = masks.at(c);
    WalkConfig local = cfg;
    local.stepnum = steps[i];
    const auto walks =
        run_converged_walks(mask.graph, *mask.local_id(node), local, node);

    NodeResult& r = results[i];
    r.report = {node, c, steps[i], walks.batch.size(), walks.batches,
                walks.psrf, walks.converged};
    const auto totals = walks.batch.totals();
    const auto used = static_cast<double>(walks.batch.size());
    std::vector<double> mean_visits(totals.size());
    for (std::size_t k = 0; k < totals.size(); ++k) {
      mean_visits[k] = static_cast<double>(totals[k]) / used;
    }
    const auto scaled = scale_community_weights(
        mean_visits, mask.graph.num_nodes(), g.num_nodes());
    for (NodeId local_id = 0; local_id < scaled.size(); ++local_id) {
      if (totals[local_id] != 0) {
        r.contribution.emplace_back(mask.to_parent[local_id], scaled[local_id]);
      }
    }
  });

  out.walks.reserve(results.size());
  for (const NodeResult& r : results) {
    out.walks.push_back(r.report);
    for (const auto& [v, x] : r.contribution) out.raw[v] += x;
  }
  const double top = *std::max_element(out.raw.begin(), out.raw.end());
  if (top > 0.0) {
    for (std::size_t v = 0; v < out.raw.size(); ++v) out.normalized[v] = out.raw[v] / top;
  }
  return out;
}

}  // namespace bva
