#include "bva/pipeline.hpp"

#include <chrono>

#include "bva/rng.hpp"
#include "parallel.hpp"

namespace bva {

ComponentCommunities detect_communities_by_component(
    const Graph& g, std::uint64_t seed, double q_threshold,
    double min_modularity_gain, unsigned threads) {
  ComponentCommunities out;
  out.partition = connected_components(g);
  const auto& comps = out.partition.components;

  std::vector<Subgraph> subs(comps.size());
  std::vector<CommunityLabeling> local(comps.size());
  detail::parallel_for(comps.size(), threads, [&](std::size_t i) {
    subs[i] = subgraph(g, comps[i]);
    local[i] = detect_communities(subs[i].graph, derive_seed(seed, i),
                                  min_modularity_gain);
  });

  std::vector<CommunityId> labels(g.num_nodes(), 0);
  CommunityId offset = 0;
  out.components.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& sub = subs[i];
    for (NodeId v = 0; v < sub.to_parent.size(); ++v) {
      labels[sub.to_parent[v]] = offset + local[i].labels[v];
    }
    offset += static_cast<CommunityId>(local[i].num_communities);
    ComponentSummary s;
    s.index = i;
    s.nodes = sub.graph.num_nodes();
    s.edges = sub.graph.num_edges();
    s.num_communities = local[i].num_communities;
    s.passes = local[i].passes;
    s.modularity = local[i].modularity;
    s.skipped = s.edges == 0 || s.modularity < q_threshold;
    out.components.push_back(s);
  }
  out.labeling = make_labeling(g, labels);
  return out;
}

BoundarySet structural_boundary(const Graph& g, const ComponentCommunities& cc) {
  const auto all = boundary_edges(g, cc.labeling);
  return filter_boundary(all, cc.labeling, [&](const Edge& e) {
    return !cc.components[cc.partition.component_id[e.u]].skipped;
  });
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg) {
  PipelineResult out;
  WalkConfig walk = cfg.walk;
  walk.seed = cfg.seed;
  walk.validate();

  auto t = Clock::now();
  out.communities = detect_communities_by_component(
      g, cfg.seed, cfg.q_threshold, cfg.min_modularity_gain, cfg.threads);
  out.timings.communities_ms = elapsed_ms(t);

  t = Clock::now();
  out.boundary = structural_boundary(g, out.communities);
  out.timings.boundary_ms = elapsed_ms(t);

  std::size_t passing = 0;
  for (const auto& c : out.communities.components) passing += c.skipped ? 0 : 1;
  if (passing == 0) {
    out.warnings.push_back("no connected component reaches the modularity threshold");
  }

  t = Clock::now();
  out.scores = boundary_vicinity_scores(g, out.communities.labeling, out.boundary, walk, cfg.threads);
  out.timings.walks_ms = elapsed_ms(t);
  if (out.scores.status == ScoreStatus::empty_boundary && passing > 0) {
    out.warnings.push_back("no boundary edges between communities");
  }
  if (const auto n = out.scores.unconverged(); n > 0) {
    out.warnings.push_back(std::to_string(n) +
                           " boundary node(s) did not reach PSRF convergence");
  }
  return out;
}

}  // namespace bva
