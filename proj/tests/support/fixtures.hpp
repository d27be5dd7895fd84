#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bva/graph.hpp"
#include "bva/rng.hpp"

namespace bva::testing {

inline std::filesystem::path data_dir() { return BVA_TEST_DATA_DIR; }

inline LoadedGraph karate() {
  return load_edge_list_file(data_dir() / "karate.edges");
}

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

/// Triangles {0,1,2} and {3,4,5} joined by the edge (2,3).
inline Graph two_triangles_bridge() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline Graph two_triangles() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

/// Random graph on n nodes; each pair kept with probability p. Independent of
/// the library generators so it can feed property tests of them too.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.uniform() < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::size_t n, double extra_p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 1; i < n; ++i) {
    edges.emplace_back(i, static_cast<NodeId>(rng.below(i)));
  }
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.uniform() < extra_p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace bva::testing
