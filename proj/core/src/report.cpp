#include "bva/report.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>

#include "bva/error.hpp"

namespace bva::report {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

namespace {

void write_preamble(std::ostream& out, std::string_view preamble) {
  while (!preamble.empty()) {
    const auto nl = preamble.find('\n');
    out << "# " << preamble.substr(0, nl) << '\n';
    if (nl == std::string_view::npos) break;
    preamble.remove_prefix(nl + 1);
  }
}

struct Id {
  NodeId v;
  Labels labels;
};

std::ostream& operator<<(std::ostream& out, const Id& id) {
  if (id.labels.empty()) return out << id.v;
  return out << id.labels[id.v];
}

}  // namespace

void write_components_csv(std::ostream& out, const ComponentPartition& parts,
                          Labels labels, std::string_view preamble) {
  write_preamble(out, preamble);
  out << "node_id,component_id\n";
  for (NodeId v = 0; v < parts.component_id.size(); ++v) {
    out << Id{v, labels} << ',' << parts.component_id[v] << '\n';
  }
}

void write_communities_csv(std::ostream& out, const CommunityLabeling& labeling,
                           Labels labels, std::string_view preamble) {
  write_preamble(out, preamble);
  out << "node_id,community_id\n";
  for (NodeId v = 0; v < labeling.labels.size(); ++v) {
    out << Id{v, labels} << ',' << labeling.labels[v] << '\n';
  }
}

void write_boundary_edges_csv(std::ostream& out, const BoundarySet& boundary,
                              const CommunityLabeling& labeling, Labels labels,
                              std::string_view preamble) {
  write_preamble(out, preamble);
  out << "i,j,community_i,community_j\n";
  for (const Edge& e : boundary.edges) {
    out << Id{e.u, labels} << ',' << Id{e.v, labels} << ','
        << labeling.labels[e.u] << ',' << labeling.labels[e.v] << '\n';
  }
}

void write_boundary_nodes_csv(std::ostream& out, const BoundarySet& boundary,
                              Labels labels, std::string_view preamble) {
  write_preamble(out, preamble);
  out << "node_id,community_id\n";
  for (std::size_t i = 0; i < boundary.nodes.size(); ++i) {
    out << Id{boundary.nodes[i], labels} << ',' << boundary.home_community[i] << '\n';
  }
}

void write_scores_csv(std::ostream& out, const VisitScores& scores,
                      Labels labels, std::string_view preamble) {
  write_preamble(out, preamble);
  out << "node_id,raw_score,normalized_score\n";
  for (NodeId v = 0; v < scores.raw.size(); ++v) {
    out << Id{v, labels} << ',' << format_double(scores.raw[v]) << ','
        << format_double(scores.normalized[v]) << '\n';
  }
}

void write_betweenness_csv(std::ostream& out, const CentralityScores& scores,
                           Labels labels, std::string_view preamble) {
  write_preamble(out, preamble);
  out << "node_id,betweenness\n";
  for (NodeId v = 0; v < scores.values.size(); ++v) {
    out << Id{v, labels} << ',' << format_double(scores.values[v]) << '\n';
  }
}

void write_overlap_csv(std::ostream& out, const OverlapCurve& curve,
                       std::string_view preamble) {
  write_preamble(out, preamble);
  out << "k,proportion\n";
  for (std::size_t i = 0; i < curve.ks.size(); ++i) {
    out << curve.ks[i] << ',' << format_double(curve.proportions[i]) << '\n';
  }
}

void write_temporal_csv(std::ostream& out, const EventSeries& all,
                        const EventSeries& boundary, const EventSeries& control,
                        std::string_view preamble) {
  if (boundary.actives.size() != all.totals.size() ||
      control.actives.size() != all.totals.size()) {
    throw InvalidArgument("event series cover different windows");
  }
  write_preamble(out, preamble);
  out << "window_index,total,boundary_active,control_active\n";
  for (std::size_t w = 0; w < all.totals.size(); ++w) {
    out << w << ',' << all.totals[w] << ',' << boundary.actives[w] << ','
        << control.actives[w] << '\n';
  }
}

void write_dot(std::ostream& out, const Graph& g, std::span<const double> scores,
               Labels labels, std::string_view preamble) {
  if (!preamble.empty()) {
    out << "/*\n" << preamble << "\n*/\n";
  }
  out << "graph bva {\n  node [shape=circle, fixedsize=true];\n";
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const double s = v < scores.size() ? scores[v] : 0.0;
    out << "  \"" << Id{v, labels} << "\" [width=" << format_double(0.2 + 0.8 * s)
        << ", score=" << format_double(s) << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  \"" << Id{e.u, labels} << "\" -- \"" << Id{e.v, labels} << "\";\n";
  }
  out << "}\n";
}

ScoreColumn read_score_csv(std::istream& in) {
  ScoreColumn out;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto first = line.find(',');
    const auto last = line.rfind(',');
    if (first == std::string::npos) throw ParseError("expected CSV columns", line_no);
    const std::string_view value = std::string_view(line).substr(last + 1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ParseError("bad score value", line_no);
    }
    out.ids.emplace_back(line.substr(0, first));
    out.values.push_back(x);
  }
  if (out.values.empty()) throw ParseError("score file has no rows", 0);
  return out;
}

}  // namespace bva::report
