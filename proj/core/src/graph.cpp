#include "bva/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "bva/error.hpp"

namespace bva {

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges,
                        DropCounts* dropped) {
  Graph g;
  g.num_nodes_ = num_nodes;
  DropCounts counts;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.v >= num_nodes) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.v) +
                            " outside [0, " + std::to_string(num_nodes) + ")");
    }
    if (e.u == e.v) {
      ++counts.self_loops;
      continue;
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  const auto last = std::unique(g.edges_.begin(), g.edges_.end());
  counts.duplicates = static_cast<std::size_t>(g.edges_.end() - last);
  g.edges_.erase(last, g.edges_.end());

  g.offsets_.assign(num_nodes + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < num_nodes; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  // Sorted (u, v) order fills each list ascending: every (w, x) with w < x
  // precedes every (x, y).
  if (dropped) *dropped = counts;
  return g;
}

bool Graph::has_edge(NodeId a, NodeId b) const noexcept {
  if (a >= num_nodes_ || b >= num_nodes_) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<NodeId> LoadedGraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == ',' || c == '\r';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  std::size_t line_no = 0;
  bool all_numeric = true;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = tokenize(line);
    if (tokens.size() != 2) {
      throw ParseError("expected 2 node ids, found " +
                           std::to_string(tokens.size()),
                       line_no);
    }
    all_numeric = all_numeric && parse_uint(tokens[0]) && parse_uint(tokens[1]);
    raw.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
  }
  if (raw.empty()) throw ParseError("edge list is empty", 0);

  LoadedGraph out;
  if (all_numeric) {
    std::map<std::uint64_t, NodeId> ids;
    for (const auto& [a, b] : raw) {
      ids.emplace(*parse_uint(a), 0);
      ids.emplace(*parse_uint(b), 0);
    }
    NodeId next = 0;
    for (auto& [value, id] : ids) {
      id = next++;
      out.labels.push_back(std::to_string(value));
    }
    for (NodeId i = 0; i < out.labels.size(); ++i) out.index_[out.labels[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) {
      edges.emplace_back(ids[*parse_uint(a)], ids[*parse_uint(b)]);
    }
    out.graph = Graph::from_edges(out.labels.size(), edges, &out.dropped);
    return out;
  }

  auto intern = [&out](const std::string& label) {
    const auto [it, inserted] =
        out.index_.emplace(label, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    const NodeId ia = intern(a);
    const NodeId ib = intern(b);
    edges.emplace_back(ia, ib);
  }
  out.graph = Graph::from_edges(out.labels.size(), edges, &out.dropped);
  return out;
}

LoadedGraph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> labels) {
  for (const Edge& e : g.edges()) {
    if (labels.empty()) {
      out << e.u << ' ' << e.v << '\n';
    } else {
      out << labels[e.u] << ' ' << labels[e.v] << '\n';
    }
  }
}

ComponentPartition connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  const std::size_t n = g.num_nodes();
  std::vector<std::uint32_t> raw_id(n, kUnset);
  std::vector<std::vector<NodeId>> comps;
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (raw_id[s] != kUnset) continue;
    const auto cid = static_cast<std::uint32_t>(comps.size());
    comps.emplace_back();
    raw_id[s] = cid;
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      comps.back().push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (raw_id[w] == kUnset) {
          raw_id[w] = cid;
          queue.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  // Discovery order already sorts by smallest member; a stable sort by size
  // keeps that as the tie-break.
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.size() > b.size();
  });
  ComponentPartition out;
  out.component_id.resize(n);
  for (std::uint32_t c = 0; c < comps.size(); ++c) {
    for (NodeId v : comps[c]) out.component_id[v] = c;
  }
  out.components = std::move(comps);
  return out;
}

std::optional<NodeId> Subgraph::local_id(NodeId parent) const {
  const auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<NodeId>(it - to_parent.begin());
}

Subgraph subgraph(const Graph& g, std::span<const NodeId> nodes) {
  Subgraph out;
  out.to_parent.assign(nodes.begin(), nodes.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                      out.to_parent.end());
  if (!out.to_parent.empty() && out.to_parent.back() >= g.num_nodes()) {
    throw InvalidArgument("subgraph node " + std::to_string(out.to_parent.back()) +
                          " outside [0, " + std::to_string(g.num_nodes()) + ")");
  }
  std::vector<Edge> edges;
  for (NodeId local = 0; local < out.to_parent.size(); ++local) {
    const NodeId parent = out.to_parent[local];
    for (NodeId w : g.neighbors(parent)) {
      if (w <= parent) continue;
      if (const auto lw = out.local_id(w)) edges.emplace_back(local, *lw);
    }
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

}  // namespace bva
