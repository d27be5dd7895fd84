#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bva/boundary.hpp"
#include "bva/community.hpp"
#include "bva/graph.hpp"
#include "bva/rng.hpp"

namespace bva {

struct WalkConfig {
  /// Walkers per convergence batch.
  std::uint32_t walknum = 50;
  /// Steps per walk. 0 selects default_step_count() of the boundary node's
  /// connected component, multiplied by `step_fraction` and rounded up.
  std::uint32_t stepnum = 0;
  double step_fraction = 1.0;
  double psrf_low = 0.95;
  double psrf_high = 1.05;
  std::uint32_t max_batches = 20;
  /// Walkers are split into this many chains, in arrival order, for PSRF.
  std::uint32_t num_chains = 2;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless psrf_low < 1 < psrf_high, walknum >= 4,
  /// max_batches >= 1, num_chains >= 2 and step_fraction > 0.
  void validate() const;
};

/// Truncated walk length: ceil(ln n / ln ln n) once ln ln n >= 1 (n >= 16),
/// ceil(ln n) below that, never less than 2. Throws for n < 2.
std::uint32_t default_step_count(std::size_t n);

using VisitCounts = std::vector<std::uint32_t>;

/// Node sequence of one walk: the start, then one uniformly chosen neighbor
/// per step. Stops early at a node without neighbors.
std::vector<NodeId> walk_path(const Graph& mask, NodeId start,
                              std::uint32_t stepnum, Rng& rng);

/// Visit counts of one walk over the nodes of `mask`.
VisitCounts random_walk(const Graph& mask, NodeId start, std::uint32_t stepnum,
                        Rng& rng);

/// Walks launched from one origin, kept in arrival order.
struct WalkBatch {
  NodeId origin = 0;
  std::size_t num_nodes = 0;
  std::vector<std::vector<NodeId>> paths;

  std::size_t size() const noexcept { return paths.size(); }
  VisitCounts counts(std::size_t walk) const;
  /// Column sums over all walks.
  std::vector<std::uint64_t> totals() const;
};

/// Gelman-Rubin potential scale reduction over per-walk visit counts.
///
/// Walks are cut into `num_chains` equal chains in arrival order. For each
/// node, W is the mean within-chain variance and B/n the variance of the
/// chain means; PSRF = sqrt(((n-1)/n W + B/n) / W). Returns the maximum over
/// nodes with W > 0, or exactly 1 when no node has within-chain variance.
/// Throws unless the walks split into >= 2 chains of >= 2 walks each.
double psrf(const WalkBatch& batch, std::size_t num_chains);

struct ConvergedWalks {
  WalkBatch batch;
  std::uint32_t batches = 0;
  double psrf = 1.0;
  bool converged = false;
};

/// Runs batches of `cfg.walknum` walks until PSRF lands in
/// [psrf_low, psrf_high] or `max_batches` is reached (converged = false).
/// Walker i draws from derive_seed(cfg.seed, stream, i), so results do not
/// depend on how walkers are scheduled.
ConvergedWalks run_converged_walks(const Graph& mask, NodeId start,
                                   const WalkConfig& cfg, std::uint64_t stream);

inline ConvergedWalks run_converged_walks(const Graph& mask, NodeId start,
                                          const WalkConfig& cfg) {
  return run_converged_walks(mask, start, cfg, start);
}

/// Multiplies every entry by community_size / n_total.
std::vector<double> scale_community_weights(std::span<const double> visits,
                                            std::size_t community_size,
                                            std::size_t n_total);

struct BoundaryWalkReport {
  NodeId node = 0;
  CommunityId community = 0;
  std::uint32_t stepnum = 0;
  std::size_t walkers_used = 0;
  std::uint32_t batches = 0;
  double psrf = 1.0;
  bool converged = false;
};

enum class ScoreStatus { ok, empty_boundary };

struct VisitScores {
  /// Sum over boundary nodes of per-walker mean visits, community scaled.
  std::vector<double> raw;
  /// raw / max(raw); all zero when nothing was walked.
  std::vector<double> normalized;
  /// One entry per boundary node, ascending node id.
  std::vector<BoundaryWalkReport> walks;
  ScoreStatus status = ScoreStatus::ok;

  std::size_t unconverged() const;
};

/// Boundary vicinity scores. Every boundary node walks inside its home
/// community; per-node results are merged in ascending node order, so the
/// output is identical for any `threads` (0 = hardware concurrency).
VisitScores boundary_vicinity_scores(const Graph& g, const CommunityLabeling& labeling,
                const BoundarySet& boundary, const WalkConfig& cfg,
                unsigned threads = 1);

}  // namespace bva
