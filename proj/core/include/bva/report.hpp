#pragma once

// Text writers for every artifact the tools emit. A non-empty `preamble` is
// written first as '#'-prefixed lines, which every reader here skips.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bva/boundary.hpp"
#include "bva/centrality.hpp"
#include "bva/community.hpp"
#include "bva/graph.hpp"
#include "bva/temporal.hpp"
#include "bva/walker.hpp"

namespace bva::report {

using Labels = std::span<const std::string>;

/// Shortest decimal form that round-trips.
std::string format_double(double x);

void write_components_csv(std::ostream& out, const ComponentPartition& parts,
                          Labels labels = {}, std::string_view preamble = {});
void write_communities_csv(std::ostream& out, const CommunityLabeling& labeling,
                           Labels labels = {}, std::string_view preamble = {});
void write_boundary_edges_csv(std::ostream& out, const BoundarySet& boundary,
                              const CommunityLabeling& labeling,
                              Labels labels = {}, std::string_view preamble = {});
void write_boundary_nodes_csv(std::ostream& out, const BoundarySet& boundary,
                              Labels labels = {}, std::string_view preamble = {});
void write_scores_csv(std::ostream& out, const VisitScores& scores,
                      Labels labels = {}, std::string_view preamble = {});
void write_betweenness_csv(std::ostream& out, const CentralityScores& scores,
                           Labels labels = {}, std::string_view preamble = {});
void write_overlap_csv(std::ostream& out, const OverlapCurve& curve,
                       std::string_view preamble = {});
void write_temporal_csv(std::ostream& out, const EventSeries& all,
                        const EventSeries& boundary, const EventSeries& control,
                        std::string_view preamble = {});
/// Node `width` grows linearly with the score in [0, 1].
void write_dot(std::ostream& out, const Graph& g, std::span<const double> scores,
               Labels labels = {}, std::string_view preamble = {});

/// First and last column of a score CSV (header row and '#' lines skipped).
struct ScoreColumn {
  std::vector<std::string> ids;
  std::vector<double> values;
};

ScoreColumn read_score_csv(std::istream& in);

}  // namespace bva::report
