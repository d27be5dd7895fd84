#include "bva/boundary.hpp"

#include <algorithm>

#include "bva/error.hpp"

namespace bva {

bool BoundarySet::contains(NodeId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

BoundarySet boundary_from_edges(std::vector<Edge> edges,
                                const CommunityLabeling& labeling) {
  BoundarySet out;
  out.edges = std::move(edges);
  out.nodes.reserve(2 * out.edges.size());
  for (const Edge& e : out.edges) {
    out.nodes.push_back(e.u);
    out.nodes.push_back(e.v);
  }
  std::sort(out.nodes.begin(), out.nodes.end());
  out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()), out.nodes.end());
  out.home_community.reserve(out.nodes.size());
  for (NodeId v : out.nodes) out.home_community.push_back(labeling.labels[v]);
  return out;
}

BoundarySet boundary_edges(const Graph& g, const CommunityLabeling& labeling) {
  if (labeling.labels.size() != g.num_nodes()) {
    throw InvalidArgument("labeling does not match graph");
  }
  std::vector<Edge> cross;
  for (const Edge& e : g.edges()) {
    if (labeling.labels[e.u] != labeling.labels[e.v]) cross.push_back(e);
  }
  return boundary_from_edges(std::move(cross), labeling);
}

}  // namespace bva
