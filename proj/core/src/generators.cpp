#include "bva/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "bva/error.hpp"
#include "bva/rng.hpp"

namespace bva {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("erdos_renyi needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph preferential_attachment(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) {
    throw InvalidArgument("preferential_attachment needs n > m >= 1");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  // Each node appears once per incident edge.
  std::vector<NodeId> endpoints;
  for (NodeId i = 0; i <= m; ++i) {
    for (NodeId j = i + 1; j <= m; ++j) {
      edges.emplace_back(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  }
  std::vector<NodeId> chosen;
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
        chosen.push_back(t);
      }
    }
    for (NodeId t : chosen) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, edges);
}

PlantedNetwork connect_communities(std::span<const Graph> parts, std::size_t k,
                                   std::uint64_t seed) {
  if (parts.size() < 2) throw InvalidArgument("need at least two parts");
  if (k < parts.size() - 1) {
    throw InvalidArgument("k is too small to connect all parts");
  }
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].num_nodes() == 0) {
      throw InvalidArgument("part " + std::to_string(p) + " is empty");
    }
    if (connected_components(parts[p]).components.size() != 1) {
      throw InvalidArgument("part " + std::to_string(p) + " is disconnected");
    }
    offset[p + 1] = offset[p] + parts[p].num_nodes();
  }
  const std::size_t total = offset.back();
  if (k > total) throw InvalidArgument("k exceeds the number of nodes");

  std::vector<Edge> base;
  std::vector<CommunityId> labels(total);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto off = static_cast<NodeId>(offset[p]);
    for (const Edge& e : parts[p].edges()) base.emplace_back(e.u + off, e.v + off);
    std::fill(labels.begin() + static_cast<std::ptrdiff_t>(offset[p]),
              labels.begin() + static_cast<std::ptrdiff_t>(offset[p + 1]),
              static_cast<CommunityId>(p));
  }

  std::vector<NodeId> pool(total);
  for (std::size_t attempt = 0; attempt < kMaxStitchAttempts; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<Edge> cross;
    std::set<Edge> seen;
    bool distinct = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(total - i));
      std::swap(pool[i], pool[j]);
      const NodeId x = pool[i];
      const CommunityId own = labels[x];
      auto other = static_cast<std::size_t>(rng.below(parts.size() - 1));
      if (other >= own) ++other;
      const auto partner = static_cast<NodeId>(
          offset[other] + rng.below(parts[other].num_nodes()));
      const Edge e(x, partner);
      distinct = distinct && seen.insert(e).second;
      cross.push_back(e);
    }
    if (!distinct) continue;

    std::vector<Edge> all = base;
    all.insert(all.end(), cross.begin(), cross.end());
    Graph g = Graph::from_edges(total, all);
    if (connected_components(g).components.size() != 1) continue;

    PlantedNetwork out;
    out.graph = std::move(g);
    out.planted_labels = labels;
    out.linkers.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(out.linkers.begin(), out.linkers.end());
    out.cross_edges = cross;
    for (const Edge& e : cross) {
      out.planted_boundary.push_back(e.u);
      out.planted_boundary.push_back(e.v);
    }
    std::sort(out.planted_boundary.begin(), out.planted_boundary.end());
    out.planted_boundary.erase(
        std::unique(out.planted_boundary.begin(), out.planted_boundary.end()),
        out.planted_boundary.end());
    return out;
  }
  throw Error("could not stitch a connected network in " +
              std::to_string(kMaxStitchAttempts) + " attempts");
}

PlantedNetwork planted_erdos_renyi(std::size_t num_parts, std::size_t n, double p,
                                   std::size_t k, std::uint64_t seed) {
  std::vector<Graph> parts;
  for (std::size_t i = 0; i < num_parts; ++i) {
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt == kMaxStitchAttempts)
        throw Error("G(n, p) part stayed disconnected after " +
                    std::to_string(kMaxStitchAttempts) + " draws");
      Graph g = erdos_renyi(n, p, derive_seed(seed, 100 + i, attempt));
      if (connected_components(g).components.size() == 1) {
        parts.push_back(std::move(g));
        break;
      }
    }
  }
  return connect_communities(parts, k, seed);
}

PlantedNetwork planted_preferential_attachment(std::size_t num_parts, std::size_t n,
                                               std::size_t m, std::size_t k,
                                               std::uint64_t seed) {
  std::vector<Graph> parts;
  for (std::size_t i = 0; i < num_parts; ++i)
    parts.push_back(preferential_attachment(n, m, derive_seed(seed, 200 + i)));
  return connect_communities(parts, k, seed);
}

}  // namespace bva
