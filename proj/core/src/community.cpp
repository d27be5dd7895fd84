#include "bva/community.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bva/error.hpp"
#include "bva/rng.hpp"

namespace bva {

std::vector<std::size_t> CommunityLabeling::sizes() const {
  std::vector<std::size_t> out(num_communities, 0);
  for (CommunityId c : labels) ++out[c];
  return out;
}

std::vector<NodeId> CommunityLabeling::members(CommunityId c) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (labels[v] == c) out.push_back(v);
  }
  return out;
}

double modularity(const Graph& g, std::span<const CommunityId> labels) {
  if (labels.size() != g.num_nodes()) {
    throw InvalidArgument("label vector length does not match node count");
  }
  if (g.num_edges() == 0) {
    throw InvalidArgument("modularity is undefined for a graph without edges");
  }
  const CommunityId k =
      labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<double> inside(k, 0.0);
  std::vector<double> endpoints(k, 0.0);
  for (const Edge& e : g.edges()) {
    if (labels[e.u] == labels[e.v]) inside[labels[e.u]] += 1.0;
  }
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    endpoints[labels[v]] += static_cast<double>(g.degree(v));
  }
  const double m = static_cast<double>(g.num_edges());
  double q = 0.0;
  for (CommunityId c = 0; c < k; ++c) {
    const double a = endpoints[c] / (2.0 * m);
    q += inside[c] / m - a * a;
  }
  return q;
}

namespace {

// Renumbers labels by first appearance; returns the community count.
std::size_t densify(std::vector<CommunityId>& labels) {
  std::vector<CommunityId> remap;
  constexpr auto kUnset = static_cast<CommunityId>(-1);
  std::size_t next = 0;
  for (CommunityId& c : labels) {
    if (c >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, kUnset);
    if (remap[c] == kUnset) remap[c] = static_cast<CommunityId>(next++);
    c = remap[c];
  }
  return next;
}

// Symmetric weighted graph used across Louvain levels. `self_weight[i]` is
// A_ii, i.e. twice the edge weight collapsed into node i.
struct WeightedGraph {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> self_weight;
  std::vector<double> strength;
  double total = 0.0;  // 2m

  void finish() {
    strength.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = self_weight[i];
      for (std::size_t p = offsets[i]; p < offsets[i + 1]; ++p) s += weights[p];
      strength[i] = s;
    }
    total = std::accumulate(strength.begin(), strength.end(), 0.0);
  }
};

WeightedGraph from_graph(const Graph& g) {
  WeightedGraph w;
  w.n = g.num_nodes();
  w.offsets.assign(w.n + 1, 0);
  for (std::size_t i = 0; i < w.n; ++i) w.offsets[i + 1] = w.offsets[i] + g.degree(static_cast<NodeId>(i));
  for (std::size_t i = 0; i < w.n; ++i) {
    for (NodeId j : g.neighbors(static_cast<NodeId>(i))) w.targets.push_back(j);
  }
  w.weights.assign(w.targets.size(), 1.0);
  w.self_weight.assign(w.n, 0.0);
  w.finish();
  return w;
}

WeightedGraph aggregate(const WeightedGraph& g,
                        const std::vector<CommunityId>& comm,
                        std::size_t num_comms) {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(num_comms);
  WeightedGraph out;
  out.n = num_comms;
  out.self_weight.assign(num_comms, 0.0);
  for (std::size_t i = 0; i < g.n; ++i) {
    const CommunityId ci = comm[i];
    out.self_weight[ci] += g.self_weight[i];
    for (std::size_t p = g.offsets[i]; p < g.offsets[i + 1]; ++p) {
      const CommunityId cj = comm[g.targets[p]];
      if (ci == cj) {
        out.self_weight[ci] += g.weights[p];  // each direction once: 2w total
      } else {
        rows[ci].emplace_back(cj, g.weights[p]);
      }
    }
  }
  out.offsets.assign(num_comms + 1, 0);
  for (std::size_t c = 0; c < num_comms; ++c) {
    auto& row = rows[c];
    std::sort(row.begin(), row.end());
    std::size_t kept = 0;
    for (std::size_t p = 0; p < row.size(); ++p) {
      if (kept > 0 && row[kept - 1].first == row[p].first) {
        row[kept - 1].second += row[p].second;
      } else {
        row[kept++] = row[p];
      }
    }
    row.resize(kept);
    out.offsets[c + 1] = out.offsets[c] + kept;
    for (const auto& [t, w] : row) {
      out.targets.push_back(t);
      out.weights.push_back(w);
    }
  }
  out.finish();
  return out;
}

class LocalMover {
 public:
  explicit LocalMover(const WeightedGraph& g)
      : g_(g), comm_(g.n), inside_(g.n), tot_(g.n), neigh_w_(g.n, -1.0) {
    for (std::size_t i = 0; i < g.n; ++i) {
      comm_[i] = static_cast<CommunityId>(i);
      inside_[i] = g.self_weight[i];
      tot_[i] = g.strength[i];
    }
  }

  double quality() const {
    double q = 0.0;
    const double m2 = g_.total;
    for (std::size_t c = 0; c < g_.n; ++c) {
      if (tot_[c] > 0.0) q += inside_[c] / m2 - (tot_[c] / m2) * (tot_[c] / m2);
    }
    return q;
  }

  // One sweep in `order`; returns the number of nodes that changed community.
  std::size_t pass(const std::vector<std::uint32_t>& order) {
    constexpr double kTieEps = 1e-10;
    std::size_t moves = 0;
    for (std::uint32_t i : order) {
      const CommunityId own = comm_[i];
      const double ki = g_.strength[i];

      touched_.clear();
      neigh_w_[own] = 0.0;
      touched_.push_back(own);
      for (std::size_t p = g_.offsets[i]; p < g_.offsets[i + 1]; ++p) {
        const CommunityId c = comm_[g_.targets[p]];
        if (neigh_w_[c] < 0.0) {
          neigh_w_[c] = 0.0;
          touched_.push_back(c);
        }
        neigh_w_[c] += g_.weights[p];
      }

      tot_[own] -= ki;
      inside_[own] -= 2.0 * neigh_w_[own] + g_.self_weight[i];

      CommunityId best = own;
      double best_gain = neigh_w_[own] - tot_[own] * ki / g_.total;
      for (CommunityId c : touched_) {
        const double gain = neigh_w_[c] - tot_[c] * ki / g_.total;
        if (gain > best_gain + kTieEps ||
            (gain >= best_gain - kTieEps && c < best)) {
          best = c;
          best_gain = gain;
        }
      }

      tot_[best] += ki;
      inside_[best] += 2.0 * neigh_w_[best] + g_.self_weight[i];
      comm_[i] = best;
      if (best != own) ++moves;
      for (CommunityId c : touched_) neigh_w_[c] = -1.0;
    }
    return moves;
  }

  const std::vector<CommunityId>& communities() const { return comm_; }

 private:
  const WeightedGraph& g_;
  std::vector<CommunityId> comm_;
  std::vector<double> inside_;
  std::vector<double> tot_;
  std::vector<double> neigh_w_;
  std::vector<CommunityId> touched_;
};

}  // namespace

CommunityLabeling make_labeling(const Graph& g,
                                std::span<const CommunityId> labels) {
  if (labels.size() != g.num_nodes()) {
    throw InvalidArgument("label vector length does not match node count");
  }
  CommunityLabeling out;
  out.labels.assign(labels.begin(), labels.end());
  out.num_communities = densify(out.labels);
  out.modularity = g.num_edges() ? modularity(g, out.labels) : 0.0;
  out.trace = {out.modularity};
  return out;
}

CommunityLabeling detect_communities(const Graph& g, std::uint64_t seed,
                                     double min_modularity_gain) {
  const std::size_t n = g.num_nodes();
  CommunityLabeling out;
  out.labels.resize(n);
  std::iota(out.labels.begin(), out.labels.end(), 0u);
  if (g.num_edges() == 0) {
    out.num_communities = n;
    out.trace = {0.0};
    return out;
  }

  WeightedGraph level_graph = from_graph(g);
  out.trace.push_back(modularity(g, out.labels));
  for (std::uint64_t level = 0;; ++level) {
    LocalMover mover(level_graph);
    std::vector<std::uint32_t> order(level_graph.n);
    std::iota(order.begin(), order.end(), 0u);
    Rng rng(derive_seed(seed, level));
    shuffle(std::span(order), rng);

    const double level_start = mover.quality();
    double q = level_start;
    std::size_t level_moves = 0;
    for (;;) {
      const std::size_t moves = mover.pass(order);
      ++out.passes;
      level_moves += moves;
      const double next = mover.quality();
      // Level-graph Q equals full-graph Q of the composed labeling.
      out.trace.push_back(next);
      const double gain = next - q;
      q = next;
      if (moves == 0 || gain < min_modularity_gain) break;
    }

    std::vector<CommunityId> comm = mover.communities();
    const std::size_t k = densify(comm);
    for (CommunityId& label : out.labels) label = comm[label];
    if (level_moves == 0 || k == level_graph.n ||
        q - level_start < min_modularity_gain) {
      break;
    }
    level_graph = aggregate(level_graph, comm, k);
  }
  out.num_communities = densify(out.labels);
  out.modularity = modularity(g, out.labels);
  return out;
}

Subgraph community_mask(const Graph& g, const CommunityLabeling& labeling,
                        CommunityId c) {
  if (c >= labeling.num_communities) {
    throw InvalidArgument("unknown community id " + std::to_string(c));
  }
  if (labeling.labels.size() != g.num_nodes()) {
    throw InvalidArgument("labeling does not match graph");
  }
  return subgraph(g, labeling.members(c));
}

}  // namespace bva
