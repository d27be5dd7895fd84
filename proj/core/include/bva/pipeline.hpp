#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bva/boundary.hpp"
#include "bva/community.hpp"
#include "bva/graph.hpp"
#include "bva/walker.hpp"

namespace bva {

struct ComponentSummary {
  std::size_t index = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t num_communities = 0;
  std::size_t passes = 0;
  double modularity = 0.0;
  /// Q fell below the threshold, so the component contributes no boundary.
  bool skipped = false;
};

/// Louvain run independently on every connected component, merged into one
/// labeling of the whole graph.
struct ComponentCommunities {
  ComponentPartition partition;
  CommunityLabeling labeling;
  std::vector<ComponentSummary> components;
};

/// Component i is seeded with derive_seed(seed, i). Communities are numbered
/// by first appearance in node order across the whole graph.
ComponentCommunities detect_communities_by_component(
    const Graph& g, std::uint64_t seed, double q_threshold,
    double min_modularity_gain = kDefaultMinModularityGain,
    unsigned threads = 1);

/// Boundary edges of the components that passed the modularity threshold.
BoundarySet structural_boundary(const Graph& g, const ComponentCommunities& cc);

struct PipelineConfig {
  std::uint64_t seed = 0;
  double q_threshold = kDefaultQThreshold;
  double min_modularity_gain = kDefaultMinModularityGain;
  /// walk.seed is overwritten with `seed`.
  WalkConfig walk;
  unsigned threads = 1;
};

struct PipelineTimings {
  double communities_ms = 0.0;
  double boundary_ms = 0.0;
  double walks_ms = 0.0;
};

struct PipelineResult {
  ComponentCommunities communities;
  BoundarySet boundary;
  VisitScores scores;
  PipelineTimings timings;
  std::vector<std::string> warnings;
};

/// Components, per-component communities, boundary extraction and boundary
/// vicinity scores, in that order.
PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg);

}  // namespace bva
