#include <algorithm>
#include <cmath>

#include "bva/boundary.hpp"
#include "bva/error.hpp"
#include "bva/generators.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace bva;
using namespace bva::testing;

namespace {

bool is_simple(const Graph& g) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const auto nb = g.neighbors(v);
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    if (std::find(nb.begin(), nb.end(), v) != nb.end()) return false;
  }
  return true;
}

Graph connected_er(std::size_t n, double p, std::uint64_t seed) {
  Graph g;
  do g = erdos_renyi(n, p, seed++);
  while (connected_components(g).components.size() != 1);
  return g;
}

}  // namespace

TEST_CASE("erdos_renyi: extremes") {
  CHECK(erdos_renyi(4, 1.0, 1).num_edges() == 6);
  CHECK(erdos_renyi(100, 0.0, 1).num_edges() == 0);
  CHECK_THROWS_AS(erdos_renyi(0, 0.5, 1), InvalidArgument);
  CHECK_THROWS_AS(erdos_renyi(5, 1.5, 1), InvalidArgument);
}

TEST_CASE("erdos_renyi: edge count follows the binomial law") {
  // M ~ Binomial(4950, 0.05): mean 247.5, sd sqrt(4950 * 0.05 * 0.95).
  const double sd = std::sqrt(4950 * 0.05 * 0.95);
  double total = 0.0;
  constexpr int kRuns = 1000;
  for (int s = 0; s < kRuns; ++s) total += static_cast<double>(erdos_renyi(100, 0.05, s).num_edges());
  const double mean = total / kRuns;
  CHECK(std::abs(mean - 247.5) < 3.0 * sd);
  CHECK(std::abs(mean - 247.5) < 3.0 * sd / std::sqrt(kRuns));
}

TEST_CASE("erdos_renyi: deterministic per seed") {
  const Graph a = erdos_renyi(60, 0.1, 42);
  const Graph b = erdos_renyi(60, 0.1, 42);
  const Graph c = erdos_renyi(60, 0.1, 43);
  CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
  CHECK_FALSE(std::equal(a.edges().begin(), a.edges().end(), c.edges().begin(), c.edges().end()));
}

TEST_CASE("preferential_attachment: edge counts") {
  const Graph tree = preferential_attachment(5, 1, 3);
  CHECK(tree.num_edges() == 4);
  CHECK(connected_components(tree).components.size() == 1);
  CHECK(preferential_attachment(100, 2, 3).num_edges() == 197);
  CHECK_THROWS_AS(preferential_attachment(3, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(preferential_attachment(3, 0, 1), InvalidArgument);
}

TEST_CASE("property: preferential attachment is simple, connected and reproducible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t m = 1 + seed % 4;
    const std::size_t n = m + 2 + seed * 7;
    const Graph g = preferential_attachment(n, m, seed);
    CHECK(is_simple(g));
    CHECK(g.num_edges() == m * (m + 1) / 2 + (n - m - 1) * m);
    CHECK(connected_components(g).components.size() == 1);
    const Graph again = preferential_attachment(n, m, seed);
    CHECK(std::equal(g.edges().begin(), g.edges().end(), again.edges().begin(), again.edges().end()));
  }
}

TEST_CASE("preferential_attachment: hubs emerge") {
  const Graph g = preferential_attachment(2000, 2, 9);
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) max_degree = std::max(max_degree, g.degree(v));
  // Uniform attachment would keep the maximum near log n; degree-biased
  // attachment grows it like sqrt(n).
  CHECK(max_degree > 40);
}

TEST_CASE("connect_communities: minimal stitching of two triangles") {
  const std::vector<Graph> parts{complete_graph(3), complete_graph(3)};
  const auto net = connect_communities(parts, 1, 5);
  CHECK(net.graph.num_nodes() == 6);
  CHECK(net.graph.num_edges() == 7);
  CHECK(net.planted_boundary.size() == 2);
  CHECK(net.linkers.size() == 1);
  CHECK(net.planted_labels == std::vector<CommunityId>{0, 0, 0, 1, 1, 1});
  CHECK(connected_components(net.graph).components.size() == 1);
}

TEST_CASE("connect_communities: 3xER(100, 0.06) with 26 linkers") {
  std::vector<Graph> parts;
  for (std::uint64_t p = 0; p < 3; ++p) parts.push_back(connected_er(100, 0.06, 10 * p + 1));
  const auto net = connect_communities(parts, 26, 1);
  CHECK(connected_components(net.graph).components.size() == 1);
  CHECK(net.cross_edges.size() == 26);
  for (NodeId v = 0; v < 300; ++v) CHECK(net.planted_labels[v] == v / 100);
  const auto b = boundary_edges(net.graph, make_labeling(net.graph, net.planted_labels));
  auto cross = net.cross_edges;
  std::sort(cross.begin(), cross.end());
  CHECK(b.edges == cross);
  CHECK(b.nodes == net.planted_boundary);
  for (NodeId v : net.planted_boundary) {
    const auto nb = net.graph.neighbors(v);
    CHECK(std::any_of(nb.begin(), nb.end(),
                      [&](NodeId w) { return net.planted_labels[w] != net.planted_labels[v]; }));
  }
}

TEST_CASE("connect_communities: 3xPA(100, 2) with 26 linkers") {
  std::vector<Graph> parts;
  for (std::uint64_t p = 0; p < 3; ++p) parts.push_back(preferential_attachment(100, 2, p));
  const auto net = connect_communities(parts, 26, 2);
  CHECK(net.graph.num_edges() == 3 * 197 + 26);
  const auto b = boundary_edges(net.graph, make_labeling(net.graph, net.planted_labels));
  CHECK(b.edges.size() == 26);
  const auto again = connect_communities(parts, 26, 2);
  CHECK(again.cross_edges == net.cross_edges);
}

TEST_CASE("property: removing cross edges separates the planted communities") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    std::vector<Graph> parts;
    for (std::uint64_t p = 0; p < 3; ++p) parts.push_back(preferential_attachment(30, 2, seed * 3 + p));
    const auto net = connect_communities(parts, 5, seed);
    std::vector<Edge> inner;
    for (const Edge& e : net.graph.edges())
      if (net.planted_labels[e.u] == net.planted_labels[e.v]) inner.push_back(e);
    CHECK(connected_components(Graph::from_edges(net.graph.num_nodes(), inner)).components.size() == 3);
  }
}

TEST_CASE("connect_communities: errors") {
  const std::vector<Graph> one{complete_graph(3)};
  CHECK_THROWS_AS(connect_communities(one, 1, 0), InvalidArgument);
  const std::vector<Graph> split{complete_graph(3), two_triangles()};
  CHECK_THROWS_AS(connect_communities(split, 2, 0), InvalidArgument);
  const std::vector<Graph> empty{complete_graph(3), Graph::from_edges(0, {})};
  CHECK_THROWS_AS(connect_communities(empty, 2, 0), InvalidArgument);
  const std::vector<Graph> three{complete_graph(3), complete_graph(3), complete_graph(3)};
  CHECK_THROWS_AS(connect_communities(three, 1, 0), InvalidArgument);
  // Two single nodes joined by 2 distinct edges is impossible.
  const std::vector<Graph> dots{Graph::from_edges(1, {}), Graph::from_edges(1, {})};
  CHECK_THROWS_AS(connect_communities(dots, 2, 0), Error);
}
