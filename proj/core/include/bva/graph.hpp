#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bva {

using NodeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  constexpr Edge() = default;
  constexpr Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct DropCounts {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
};

/// Immutable undirected simple graph on dense ids [0, N).
///
/// Edges are kept sorted lexicographically; adjacency is a CSR array of
/// sorted neighbor lists, so the sum of degrees is exactly 2M.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph. Self-loops and repeated edges are dropped and
  /// tallied in `dropped` when given; an endpoint >= num_nodes throws
  /// InvalidArgument.
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges,
                          DropCounts* dropped = nullptr);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  bool has_edge(NodeId a, NodeId b) const noexcept;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

/// A parsed edge-list file: the graph plus the external label of each id.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
  DropCounts dropped;

  std::optional<NodeId> find(std::string_view label) const;

 private:
  friend LoadedGraph load_edge_list(std::istream&);
  std::unordered_map<std::string, NodeId> index_;
};

/// Parses a two-column edge list (whitespace or comma separated, '#'
/// comments). When every token is a nonnegative integer the ids are
/// compacted in ascending numeric order, so an already dense file keeps its
/// numbering; otherwise tokens are interned in first-seen order.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::filesystem::path& path);

/// Writes one "u v" line per edge, using `labels` when non-empty.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> labels = {});

struct ComponentPartition {
  std::vector<std::uint32_t> component_id;
  /// Each component sorted ascending; components by descending size, ties by
  /// smallest member.
  std::vector<std::vector<NodeId>> components;
};

ComponentPartition connected_components(const Graph& g);

/// Induced subgraph with ids relabeled densely in ascending parent order.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_parent;

  std::optional<NodeId> local_id(NodeId parent) const;
};

Subgraph subgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace bva
