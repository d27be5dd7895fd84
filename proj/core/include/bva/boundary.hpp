#pragma once

#include <vector>

#include "bva/community.hpp"
#include "bva/graph.hpp"

namespace bva {

/// Edges whose endpoints carry different labels, and their endpoints.
struct BoundarySet {
  /// In edge-list order (sorted).
  std::vector<Edge> edges;
  /// Ascending node id.
  std::vector<NodeId> nodes;
  /// home_community[i] is the label of nodes[i].
  std::vector<CommunityId> home_community;

  bool empty() const noexcept { return edges.empty(); }
  bool contains(NodeId v) const;
};

BoundarySet boundary_edges(const Graph& g, const CommunityLabeling& labeling);

/// Keeps only the edges that satisfy `keep` and recomputes the node set.
template <class Pred>
BoundarySet filter_boundary(const BoundarySet& b,
                            const CommunityLabeling& labeling, Pred keep);

BoundarySet boundary_from_edges(std::vector<Edge> edges,
                                const CommunityLabeling& labeling);

template <class Pred>
BoundarySet filter_boundary(const BoundarySet& b,
                            const CommunityLabeling& labeling, Pred keep) {
  std::vector<Edge> kept;
  for (const Edge& e : b.edges) {
    if (keep(e)) kept.push_back(e);
  }
  return boundary_from_edges(std::move(kept), labeling);
}

}  // namespace bva
