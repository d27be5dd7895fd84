#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bva/graph.hpp"

namespace bva {

struct Event {
  std::int64_t time = 0;
  NodeId node = 0;
};

/// Events binned into contiguous windows [t0 + w*window, t0 + (w+1)*window).
struct EventSeries {
  std::int64_t window_seconds = 1;
  std::int64_t t0 = 0;
  /// Events per window (only filtered nodes when a filter is set).
  std::vector<std::uint64_t> totals;
  /// Distinct filtered nodes active per window.
  std::vector<std::uint64_t> actives;
};

/// The time span always covers every event; a filter only restricts what is
/// counted. Throws on an empty stream or window_seconds < 1.
EventSeries bin_events(std::span<const Event> events, std::int64_t window_seconds,
                       std::optional<std::span<const NodeId>> node_filter = std::nullopt);

/// |boundary| nodes drawn uniformly without replacement from
/// all_nodes \ boundary, returned ascending.
std::vector<NodeId> sample_control_nodes(std::span<const NodeId> boundary,
                                         std::span<const NodeId> all_nodes,
                                         std::uint64_t seed);

/// bin_events filtered to sample_control_nodes(boundary, all_nodes, seed).
EventSeries control_series(std::span<const Event> events,
                           std::span<const NodeId> boundary,
                           std::span<const NodeId> all_nodes,
                           std::int64_t window_seconds, std::uint64_t seed);

inline constexpr double kMadScale = 1.4826;
inline constexpr double kDefaultSpikeZ = 3.0;

struct SpikeReport {
  std::vector<std::size_t> spike_windows;
  /// (x - median) / (1.4826 * MAD). With MAD = 0 a window above the median
  /// scores +inf and one below scores -inf.
  std::vector<double> zscores;
  double median = 0.0;
  double mad = 0.0;
};

/// Robust z-score spike detection; a window is a spike iff z >= z_threshold.
/// Throws for fewer than 5 windows.
SpikeReport detect_spikes(std::span<const double> series,
                          double z_threshold = kDefaultSpikeZ);

SpikeReport detect_spikes(std::span<const std::uint64_t> series,
                          double z_threshold = kDefaultSpikeZ);

/// Parsed `epoch_seconds,node_id` file. Node labels found in the graph map to
/// their graph id; others get fresh ids from graph.num_nodes() upward.
struct EventLog {
  std::vector<Event> events;
  std::vector<std::string> unknown_labels;
};

EventLog load_events(std::istream& in, const LoadedGraph& graph);

}  // namespace bva
