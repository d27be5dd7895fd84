#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "bva/error.hpp"
#include "bva/rng.hpp"
#include "bva/temporal.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace bva;
using namespace bva::testing;

namespace {

std::vector<NodeId> iota_nodes(NodeId n) {
  std::vector<NodeId> v(n);
  std::iota(v.begin(), v.end(), NodeId{0});
  return v;
}

}  // namespace

TEST_CASE("bin_events: single window") {
  const std::vector<Event> ev{{0, 7}, {10, 7}, {59, 7}};
  const auto s = bin_events(ev, 60);
  CHECK(s.totals == std::vector<std::uint64_t>{3});
  CHECK(s.actives == std::vector<std::uint64_t>{1});
  CHECK(s.t0 == 0);
}

TEST_CASE("bin_events: filter with no matching node yields zeros") {
  const std::vector<Event> ev{{0, 7}, {10, 7}, {130, 2}};
  const std::vector<NodeId> none{5};
  const auto s = bin_events(ev, 60, std::span<const NodeId>(none));
  CHECK(s.totals == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(s.actives == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("bin_events: uniform stream") {
  std::vector<Event> ev;
  for (std::int64_t t = 0; t < 600; ++t) ev.push_back({1'600'000'000 + t, static_cast<NodeId>(t % 13)});
  const auto s = bin_events(ev, 60);
  CHECK(s.totals == std::vector<std::uint64_t>(10, 60));
  CHECK(s.t0 == 1'600'000'000);
  const auto z = detect_spikes(s.totals);
  CHECK(z.spike_windows.empty());
}

TEST_CASE("bin_events: unordered input and gaps") {
  const std::vector<Event> ev{{250, 1}, {5, 0}, {5, 0}, {130, 2}};
  const auto s = bin_events(ev, 60);
  CHECK(s.t0 == 5);
  CHECK(s.totals == std::vector<std::uint64_t>{2, 0, 1, 0, 1});
  CHECK(s.actives == std::vector<std::uint64_t>{1, 0, 1, 0, 1});
}

TEST_CASE("bin_events: errors") {
  CHECK_THROWS_AS(bin_events({}, 60), InvalidArgument);
  const std::vector<Event> ev{{0, 1}};
  CHECK_THROWS_AS(bin_events(ev, 0), InvalidArgument);
}

TEST_CASE("property: binned totals add up to the number of events") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::vector<Event> ev(1 + rng.below(500));
    for (auto& e : ev) e = {static_cast<std::int64_t>(rng.below(10'000)), static_cast<NodeId>(rng.below(30))};
    const std::int64_t window = 1 + static_cast<std::int64_t>(rng.below(900));
    const auto s = bin_events(ev, window);
    CHECK(std::accumulate(s.totals.begin(), s.totals.end(), std::uint64_t{0}) == ev.size());
    for (std::size_t w = 0; w < s.totals.size(); ++w) CHECK(s.actives[w] <= s.totals[w]);
    CHECK(s.totals.front() > 0);
    CHECK(s.totals.back() > 0);
  }
}

TEST_CASE("control nodes: disjoint from the boundary, same size, reproducible") {
  const auto all = iota_nodes(100);
  const std::vector<NodeId> boundary{3, 17, 42, 99};
  const auto c = sample_control_nodes(boundary, all, 8);
  CHECK(c.size() == boundary.size());
  CHECK(std::is_sorted(c.begin(), c.end()));
  for (NodeId v : c) CHECK_FALSE(std::binary_search(boundary.begin(), boundary.end(), v));
  CHECK(sample_control_nodes(boundary, all, 8) == c);

  bool differs = false;
  for (std::uint64_t s = 9; s < 20 && !differs; ++s) differs = sample_control_nodes(boundary, all, s) != c;
  CHECK(differs);
}

TEST_CASE("control nodes: boundary covering every node is an error") {
  const auto all = iota_nodes(10);
  CHECK_THROWS_AS(sample_control_nodes(all, all, 1), InvalidArgument);
  const std::vector<NodeId> six{0, 1, 2, 3, 4, 5};
  CHECK_THROWS_AS(sample_control_nodes(six, all, 1), InvalidArgument);
}

TEST_CASE("control_series: matches bin_events over the sampled nodes") {
  Rng rng(4);
  std::vector<Event> ev(2000);
  for (auto& e : ev) e = {static_cast<std::int64_t>(rng.below(36'000)), static_cast<NodeId>(rng.below(50))};
  const auto all = iota_nodes(50);
  const std::vector<NodeId> boundary{1, 2, 3, 4, 5};
  const auto c = sample_control_nodes(boundary, all, 21);
  const auto expect = bin_events(ev, 3600, std::span<const NodeId>(c));
  const auto got = control_series(ev, boundary, all, 3600, 21);
  CHECK(got.totals == expect.totals);
  CHECK(got.actives == expect.actives);
  CHECK(got.t0 == expect.t0);
}

TEST_CASE("detect_spikes: single spike") {
  const std::vector<double> x{10, 10, 10, 100, 10, 10};
  const auto r = detect_spikes(x);
  CHECK(r.spike_windows == std::vector<std::size_t>{3});
  CHECK(r.median == 10.0);
  CHECK(r.mad == 0.0);
  CHECK(r.zscores[3] == std::numeric_limits<double>::infinity());
  CHECK(r.zscores[0] == 0.0);
}

TEST_CASE("detect_spikes: noisy baseline") {
  const std::vector<double> x{8, 12, 9, 11, 10, 40, 9};
  const auto r = detect_spikes(x);
  CHECK(r.spike_windows == std::vector<std::size_t>{5});
  CHECK(r.median == 10.0);
  CHECK(r.mad == 1.0);
  CHECK(r.zscores[5] == doctest::Approx(30.0 / 1.4826).epsilon(1e-12));
  CHECK(r.zscores[0] == doctest::Approx(-2.0 / 1.4826).epsilon(1e-12));
}

TEST_CASE("detect_spikes: dips and thresholds") {
  const std::vector<double> flat{5, 5, 5, 5, 0};
  const auto r = detect_spikes(flat);
  CHECK(r.spike_windows.empty());
  CHECK(r.zscores[4] == -std::numeric_limits<double>::infinity());
  const std::vector<double> x{8, 12, 9, 11, 10, 40, 9};
  CHECK(detect_spikes(x, 25.0).spike_windows.empty());
  CHECK(detect_spikes(x, 1.0).spike_windows == std::vector<std::size_t>{1, 5});
  const std::vector<double> short_series{1, 2, 3, 4};
  CHECK_THROWS_AS(detect_spikes(short_series), InvalidArgument);
}

TEST_CASE("property: a burst driven by boundary nodes spikes only the boundary series") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto all = iota_nodes(200);
    std::vector<NodeId> boundary;
    for (NodeId v = 0; v < 200; v += 10) boundary.push_back(v);

    std::vector<Event> ev;
    constexpr std::int64_t kWindow = 3600;
    constexpr std::int64_t kWindows = 48;
    for (std::int64_t w = 0; w < kWindows; ++w) {
      for (int i = 0; i < 40; ++i)
        ev.push_back({w * kWindow + static_cast<std::int64_t>(rng.below(kWindow)),
                      static_cast<NodeId>(rng.below(200))});
    }
    const std::int64_t burst = 30;
    for (NodeId v : boundary)
      for (int i = 0; i < 3; ++i)
        ev.push_back({burst * kWindow + static_cast<std::int64_t>(rng.below(kWindow)), v});

    const auto b = bin_events(ev, kWindow, std::span<const NodeId>(boundary));
    const auto c = control_series(ev, boundary, all, kWindow, seed);
    const auto bs = detect_spikes(b.actives);
    CHECK(std::find(bs.spike_windows.begin(), bs.spike_windows.end(), std::size_t(burst)) !=
          bs.spike_windows.end());
    const auto cs = detect_spikes(c.actives);
    CHECK(std::find(cs.spike_windows.begin(), cs.spike_windows.end(), std::size_t(burst)) ==
          cs.spike_windows.end());
  }
}

TEST_CASE("load_events: header, comments, labels") {
  std::istringstream graph_text("a b\nb c\n");
  const LoadedGraph lg = load_edge_list(graph_text);
  std::istringstream in(
      "epoch_seconds,node_id\n"
      "# comment\n"
      "100,a\n"
      "\n"
      "160, c\r\n"
      "170,zz\n"
      "180,zz\n");
  const auto log = load_events(in, lg);
  REQUIRE(log.events.size() == 4);
  CHECK(log.events[0].time == 100);
  CHECK(log.events[0].node == *lg.find("a"));
  CHECK(log.events[1].node == *lg.find("c"));
  CHECK(log.events[2].node == 3);
  CHECK(log.events[3].node == 3);
  CHECK(log.unknown_labels == std::vector<std::string>{"zz"});
}

TEST_CASE("load_events: errors carry line numbers") {
  std::istringstream graph_text("0 1\n");
  const LoadedGraph lg = load_edge_list(graph_text);
  std::istringstream bad("10,0\nnope,1\n");
  try {
    load_events(bad, lg);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream three("10,0,1\n");
  CHECK_THROWS_AS(load_events(three, lg), ParseError);
  std::istringstream empty("time,node\n");
  CHECK_THROWS_AS(load_events(empty, lg), ParseError);
}
