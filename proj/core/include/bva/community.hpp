#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bva/graph.hpp"

namespace bva {

using CommunityId = std::uint32_t;

inline constexpr double kDefaultMinModularityGain = 1e-7;
/// Components whose best labeling scores below this are treated as having no
/// community structure.
inline constexpr double kDefaultQThreshold = 0.3;

struct CommunityLabeling {
  /// Dense in [0, num_communities), numbered by first appearance in node order.
  std::vector<CommunityId> labels;
  double modularity = 0.0;
  std::size_t num_communities = 0;
  /// Number of local-move passes over all Louvain levels.
  std::size_t passes = 0;
  /// Modularity of the full-graph labeling before the first pass and after
  /// every pass. Non-decreasing.
  std::vector<double> trace;

  std::vector<std::size_t> sizes() const;
  std::vector<NodeId> members(CommunityId c) const;
};

/// Newman-Girvan modularity: sum over communities of the fraction of edges
/// inside minus the squared fraction of edge endpoints. Throws when M == 0.
double modularity(const Graph& g, std::span<const CommunityId> labels);

/// Wraps an externally supplied labeling: renumbers densely and computes Q
/// (0 for an edgeless graph).
CommunityLabeling make_labeling(const Graph& g,
                                std::span<const CommunityId> labels);

/// Sequential two-phase Louvain. Node visit order is shuffled from `seed`;
/// equal-gain moves go to the lowest community id. A level stops when a pass
/// improves Q by less than `min_modularity_gain`; the run stops when a level
/// moves nothing or gains less than that. An edgeless graph yields one
/// community per node with Q = 0.
CommunityLabeling detect_communities(
    const Graph& g, std::uint64_t seed,
    double min_modularity_gain = kDefaultMinModularityGain);

/// Community-restricted graph: the nodes labeled `c` and every edge whose
/// endpoints both carry `c`.
Subgraph community_mask(const Graph& g, const CommunityLabeling& labeling,
                        CommunityId c);

}  // namespace bva
