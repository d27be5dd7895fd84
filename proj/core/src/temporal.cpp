#include "bva/temporal.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <unordered_map>

#include "bva/error.hpp"
#include "bva/rng.hpp"

namespace bva {

EventSeries bin_events(std::span<const Event> events, std::int64_t window_seconds,
                       std::optional<std::span<const NodeId>> node_filter) {
  if (events.empty()) throw InvalidArgument("event stream is empty");
  if (window_seconds < 1) throw InvalidArgument("window_seconds must be >= 1");

  std::vector<Event> sorted(events.begin(), events.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Event& a, const Event& b) { return a.time < b.time; });
  EventSeries out;
  out.window_seconds = window_seconds;
  out.t0 = sorted.front().time;
  const auto windows =
      static_cast<std::size_t>((sorted.back().time - out.t0) / window_seconds) + 1;
  out.totals.assign(windows, 0);
  out.actives.assign(windows, 0);

  std::vector<NodeId> filter;
  if (node_filter) {
    filter.assign(node_filter->begin(), node_filter->end());
    std::sort(filter.begin(), filter.end());
  }
  auto counted = [&](NodeId v) {
    return !node_filter || std::binary_search(filter.begin(), filter.end(), v);
  };

  std::vector<NodeId> active;
  std::size_t current = 0;
  auto flush = [&] {
    std::sort(active.begin(), active.end());
    out.actives[current] = static_cast<std::uint64_t>(
        std::unique(active.begin(), active.end()) - active.begin());
    active.clear();
  };
  for (const Event& e : sorted) {
    const auto w = static_cast<std::size_t>((e.time - out.t0) / window_seconds);
    if (w != current) {
      flush();
      current = w;
    }
    if (!counted(e.node)) continue;
    ++out.totals[w];
    active.push_back(e.node);
  }
  flush();
  return out;
}

std::vector<NodeId> sample_control_nodes(std::span<const NodeId> boundary,
                                         std::span<const NodeId> all_nodes,
                                         std::uint64_t seed) {
  std::vector<NodeId> excluded(boundary.begin(), boundary.end());
  std::sort(excluded.begin(), excluded.end());
  std::vector<NodeId> pool;
  for (NodeId v : all_nodes) {
    if (!std::binary_search(excluded.begin(), excluded.end(), v)) pool.push_back(v);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (boundary.size() > pool.size()) {
    throw InvalidArgument("boundary set is larger than the control population");
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(boundary.size());
  std::sort(pool.begin(), pool.end());
  return pool;
}

EventSeries control_series(std::span<const Event> events,
                           std::span<const NodeId> boundary,
                           std::span<const NodeId> all_nodes,
                           std::int64_t window_seconds, std::uint64_t seed) {
  const auto control = sample_control_nodes(boundary, all_nodes, seed);
  return bin_events(events, window_seconds, std::span<const NodeId>(control));
}

namespace {

double median_of(std::vector<double> v) {
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace

SpikeReport detect_spikes(std::span<const double> series, double z_threshold) {
  if (series.size() < 5) {
    throw InvalidArgument("spike detection needs at least 5 windows");
  }
  SpikeReport out;
  out.median = median_of({series.begin(), series.end()});
  std::vector<double> dev;
  dev.reserve(series.size());
  for (double x : series) dev.push_back(std::abs(x - out.median));
  out.mad = median_of(std::move(dev));
  const double scale = kMadScale * out.mad;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w < series.size(); ++w) {
    const double d = series[w] - out.median;
    double z = 0.0;
    if (scale > 0.0) {
      z = d / scale;
    } else if (d > 0.0) {
      z = kInf;
    } else if (d < 0.0) {
      z = -kInf;
    }
    out.zscores.push_back(z);
    if (z >= z_threshold) out.spike_windows.push_back(w);
  }
  return out;
}

SpikeReport detect_spikes(std::span<const std::uint64_t> series,
                          double z_threshold) {
  std::vector<double> as_double(series.begin(), series.end());
  return detect_spikes(std::span<const double>(as_double), z_threshold);
}

EventLog load_events(std::istream& in, const LoadedGraph& graph) {
  EventLog out;
  std::unordered_map<std::string, NodeId> extra;
  std::string line;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("expected epoch_seconds,node_id", line_no);
    }
    auto trim = [](std::string_view s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string_view::npos ? std::string_view{} : s.substr(a, b - a + 1);
    };
    const std::string_view time_text = trim(std::string_view(line).substr(0, comma));
    const std::string label(trim(std::string_view(line).substr(comma + 1)));
    std::int64_t t = 0;
    const auto [ptr, ec] =
        std::from_chars(time_text.data(), time_text.data() + time_text.size(), t);
    if (ec != std::errc{} || ptr != time_text.data() + time_text.size() || label.empty()) {
      if (first_data) {  // header row
        first_data = false;
        continue;
      }
      throw ParseError("bad event row", line_no);
    }
    first_data = false;
    NodeId id = 0;
    if (const auto known = graph.find(label)) {
      id = *known;
    } else {
      const auto next = static_cast<NodeId>(graph.graph.num_nodes() + out.unknown_labels.size());
      const auto [it, inserted] = extra.emplace(label, next);
      if (inserted) out.unknown_labels.push_back(label);
      id = it->second;
    }
    out.events.push_back({t, id});
  }
  if (out.events.empty()) throw ParseError("event file is empty", 0);
  return out;
}

}  // namespace bva
