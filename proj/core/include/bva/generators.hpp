#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bva/community.hpp"
#include "bva/graph.hpp"

namespace bva {

/// G(n, p): each unordered pair independently with probability p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Barabási–Albert growth from a seed clique of m + 1 nodes; every arriving
/// node links to m distinct existing nodes drawn proportionally to degree.
Graph preferential_attachment(std::size_t n, std::size_t m, std::uint64_t seed);

struct PlantedNetwork {
  Graph graph;
  /// Index of the part each node came from.
  std::vector<CommunityId> planted_labels;
  /// The k sampled nodes, ascending.
  std::vector<NodeId> linkers;
  /// One edge per linker, in the order the linkers were sampled.
  std::vector<Edge> cross_edges;
  /// Linkers plus their partners, ascending.
  std::vector<NodeId> planted_boundary;
};

inline constexpr std::size_t kMaxStitchAttempts = 1000;

/// Disjoint union of `parts` plus k cross edges: k nodes are sampled without
/// replacement over the union, and each gets one edge to a uniform node of a
/// uniformly chosen other part. Draws are repeated until the result is
/// connected and the cross edges are distinct.
PlantedNetwork connect_communities(std::span<const Graph> parts, std::size_t k,
                                   std::uint64_t seed);

/// `num_parts` copies of G(n, p) stitched with k linkers. Part i is drawn from
/// derive_seed(seed, 100 + i, attempt), redrawn until connected; stitching
/// uses `seed`.
PlantedNetwork planted_erdos_renyi(std::size_t num_parts, std::size_t n, double p,
                                   std::size_t k, std::uint64_t seed);

/// Same with preferential_attachment(n, m) parts drawn from
/// derive_seed(seed, 200 + i).
PlantedNetwork planted_preferential_attachment(std::size_t num_parts, std::size_t n,
                                               std::size_t m, std::size_t k,
                                               std::uint64_t seed);

}  // namespace bva
