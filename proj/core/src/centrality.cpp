#include "bva/centrality.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bva/error.hpp"
#include "parallel.hpp"

namespace bva {

namespace {

constexpr std::size_t kSourceBlocks = 64;

struct BrandesWorkspace {
  explicit BrandesWorkspace(std::size_t n)
      : sigma(n), dist(n), delta(n), order(), queue(n) {
    order.reserve(n);
  }
  std::vector<double> sigma;
  std::vector<std::int64_t> dist;
  std::vector<double> delta;
  std::vector<NodeId> order;
  std::vector<NodeId> queue;
};

void accumulate_source(const Graph& g, NodeId s, BrandesWorkspace& ws,
                       std::vector<double>& into) {
  std::fill(ws.sigma.begin(), ws.sigma.end(), 0.0);
  std::fill(ws.dist.begin(), ws.dist.end(), -1);
  std::fill(ws.delta.begin(), ws.delta.end(), 0.0);
  ws.order.clear();
  ws.sigma[s] = 1.0;
  ws.dist[s] = 0;
  std::size_t head = 0;
  std::size_t tail = 0;
  ws.queue[tail++] = s;
  while (head < tail) {
    const NodeId v = ws.queue[head++];
    ws.order.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (ws.dist[w] < 0) {
        ws.dist[w] = ws.dist[v] + 1;
        ws.queue[tail++] = w;
      }
      if (ws.dist[w] == ws.dist[v] + 1) ws.sigma[w] += ws.sigma[v];
    }
  }
  // Predecessors of w are exactly the neighbors one level closer.
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    const NodeId w = *it;
    const double coeff = (1.0 + ws.delta[w]) / ws.sigma[w];
    const std::int64_t up = ws.dist[w] - 1;
    for (NodeId v : g.neighbors(w)) {
      if (ws.dist[v] == up) ws.delta[v] += ws.sigma[v] * coeff;
    }
    if (w != s) into[w] += ws.delta[w];
  }
}

}  // namespace

CentralityScores betweenness_brandes(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_nodes();
  CentralityScores out;
  out.values.assign(n, 0.0);
  if (n == 0) return out;
  const std::size_t blocks = std::min(kSourceBlocks, n);
  std::vector<std::vector<double>> partial(blocks);
  detail::parallel_for(blocks, threads, [&](std::size_t b) {
    partial[b].assign(n, 0.0);
    BrandesWorkspace ws(n);
    const std::size_t lo = n * b / blocks;
    const std::size_t hi = n * (b + 1) / blocks;
    for (std::size_t s = lo; s < hi; ++s) {
      accumulate_source(g, static_cast<NodeId>(s), ws, partial[b]);
    }
  });
  for (const auto& p : partial) {
    for (std::size_t v = 0; v < n; ++v) out.values[v] += p[v];
  }
  // Each unordered pair was counted from both ends.
  for (double& x : out.values) x /= 2.0;
  return out;
}

CentralityScores betweenness_bruteforce(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n > kBruteForceMaxNodes) {
    throw InvalidArgument("brute-force betweenness is limited to " +
                          std::to_string(kBruteForceMaxNodes) + " nodes");
  }
  constexpr auto kFar = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(n * n, kFar);
  std::vector<double> sigma(n * n, 0.0);
  std::vector<NodeId> frontier;
  std::vector<NodeId> next;
  for (NodeId s = 0; s < n; ++s) {
    dist[s * n + s] = 0;
    sigma[s * n + s] = 1.0;
    frontier.assign(1, s);
    for (std::int64_t d = 1; !frontier.empty(); ++d) {
      next.clear();
      for (NodeId v : frontier) {
        for (NodeId w : g.neighbors(v)) {
          if (dist[s * n + w] == kFar) {
            dist[s * n + w] = d;
            next.push_back(w);
          }
          if (dist[s * n + w] == d) sigma[s * n + w] += sigma[s * n + v];
        }
      }
      frontier.swap(next);
    }
  }
  CentralityScores out;
  out.values.assign(n, 0.0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      const std::int64_t dst = dist[s * n + t];
      if (dst == kFar) continue;
      for (NodeId v = 0; v < n; ++v) {
        if (v == s || v == t) continue;
        const std::int64_t dsv = dist[s * n + v];
        const std::int64_t dvt = dist[v * n + t];
        if (dsv == kFar || dvt == kFar || dsv + dvt != dst) continue;
        out.values[v] += sigma[s * n + v] * sigma[v * n + t] / sigma[s * n + t];
      }
    }
  }
  return out;
}

std::vector<NodeId> top_k(std::span<const double> scores, std::size_t k) {
  std::vector<NodeId> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0u);
  k = std::min(k, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k),
                    idx.end(), [&](NodeId x, NodeId y) {
                      if (scores[x] != scores[y]) return scores[x] > scores[y];
                      return x < y;
                    });
  idx.resize(k);
  return idx;
}

OverlapCurve rank_overlap(std::span<const double> a, std::span<const double> b,
                          std::span<const std::int64_t> ks) {
  if (a.size() != b.size()) {
    throw InvalidArgument("score vectors differ in length");
  }
  const std::size_t n = a.size();
  OverlapCurve out;
  for (std::int64_t k : ks) {
    if (k <= 0) throw InvalidArgument("overlap rank k must be positive");
    if (static_cast<std::size_t>(k) > n) {
      throw InvalidArgument("overlap rank k exceeds node count");
    }
    const auto uk = static_cast<std::size_t>(k);
    auto ta = top_k(a, uk);
    auto tb = top_k(b, uk);
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    std::vector<NodeId> both;
    std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                          std::back_inserter(both));
    out.ks.push_back(uk);
    out.proportions.push_back(static_cast<double>(both.size()) /
                              static_cast<double>(uk));
  }
  return out;
}

}  // namespace bva
