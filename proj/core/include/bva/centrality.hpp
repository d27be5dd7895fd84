#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bva/graph.hpp"

namespace bva {

/// Shortest-path betweenness per node, summed over unordered pairs i < j
/// with i != v != j.
struct CentralityScores {
  std::vector<double> values;
};

/// Brandes' dependency accumulation, one BFS per source. Sources are split
/// into a fixed number of blocks merged in order, so the result does not
/// depend on `threads` (0 = hardware concurrency).
CentralityScores betweenness_brandes(const Graph& g, unsigned threads = 1);

inline constexpr std::size_t kBruteForceMaxNodes = 200;

/// Reference implementation: all-pairs distances and geodesic counts, then
/// sigma(s,v) * sigma(v,t) / sigma(s,t) for every v on an s-t geodesic.
/// Throws InvalidArgument above kBruteForceMaxNodes nodes.
CentralityScores betweenness_bruteforce(const Graph& g);

struct OverlapCurve {
  std::vector<std::size_t> ks;
  std::vector<double> proportions;
};

/// Indices of the k largest scores; ties go to the smaller node id.
std::vector<NodeId> top_k(std::span<const double> scores, std::size_t k);

/// |top_k(a) ∩ top_k(b)| / k for every k. Throws on k <= 0, k > N, or
/// vectors of different length.
OverlapCurve rank_overlap(std::span<const double> a, std::span<const double> b,
                          std::span<const std::int64_t> ks);

}  // namespace bva
