#include <doctest.h>

#include <random>

#include "graphcode/generators.hpp"
#include "graphcode/graph.hpp"
#include "oracles.hpp"

using namespace graphcode;

TEST_CASE("graph construction checks") {
  CHECK_THROWS_AS(Graph(0, {}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
  const Graph multi(3, {{0, 1}, {1, 0}}, true);
  CHECK(multi.m() == 2);
  CHECK(multi.degree(0) == 2);
  CHECK(multi.find_edge(1, 0) == 0);
  CHECK_FALSE(multi.find_edge(0, 2).has_value());
}

TEST_CASE("connected spanning subgraphs") {
  const auto k4 = complete_graph(4);
  CHECK(is_connected_spanning(k4, k4.all_edges()));
  CHECK_FALSE(is_connected_spanning(k4, k4.empty_subset()));
  // edges 01, 02, 03 form a star
  CHECK(is_connected_spanning(k4, EdgeSubset::from_word(6, 0b000111)));
  CHECK_FALSE(is_connected_spanning(k4, EdgeSubset::from_word(6, 0b100001)));  // 01 and 23
  CHECK(is_connected_spanning(Graph(1, {}), EdgeSubset(0)));
  CHECK_THROWS_AS(is_connected_spanning(k4, EdgeSubset(5)), HostMismatch);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto h = oracle::random_connected(n, static_cast<int>(rng() % 10), rng);
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << h.m()) - 1);
    CHECK(is_connected_spanning(h, EdgeSubset::from_word(static_cast<std::size_t>(h.m()), mask)) ==
          oracle::connected_mask(h, mask));
  }
}

TEST_CASE("components and small component") {
  const auto c6 = cycle(6);
  // keep edges 0,1 (path 0-1-2) and 3,4 (path 3-4-5)
  const auto s = EdgeSubset::from_word(6, 0b011011);
  int count = 0;
  const auto labels = component_labels(c6, s, &count);
  CHECK(count == 2);
  CHECK(labels == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(small_component(c6, s) == std::vector<int>{0, 1, 2});
  const auto s2 = EdgeSubset::from_word(6, 0b111101);  // a Hamilton path
  CHECK_THROWS_AS(small_component(c6, s2), PreconditionError);
}

TEST_CASE("edge connectivity matches brute-force cuts") {
  CHECK(edge_connectivity(complete_graph(5)) == 4);
  CHECK(edge_connectivity(cycle(7)) == 2);
  CHECK(edge_connectivity(cartesian_product(cycle(3), cycle(3))) == 4);
  CHECK(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(edge_connectivity(Graph(1, {})) == 0);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto h = oracle::random_connected(n, static_cast<int>(rng() % 25), rng);
    const auto mc = global_min_cut(h);
    CHECK(mc.value == oracle::edge_connectivity(h));
    CHECK(edge_connectivity(h) == mc.value);
    REQUIRE(!mc.side.empty());
    CHECK(2 * mc.side.size() <= static_cast<std::size_t>(n));
    CHECK(static_cast<int>(cut_edges(h, mc.side).crossing.count()) == mc.value);
  }
}

TEST_CASE("graph stats and cut edges") {
  const auto k4 = complete_graph(4);
  CHECK(graph_stats(k4) == GraphStats{3, 3, true, 6, 4});
  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK(graph_stats(path) == GraphStats{1, 2, false, 2, 3});
  const std::vector<int> w{0, 1};
  const auto cert = cut_edges(k4, w);
  CHECK(cert.crossing.count() == 4);
  CHECK(cert.connected_side);
  const std::vector<int> w2{0, 2};
  CHECK_FALSE(cut_edges(path, w2).connected_side);
  const std::vector<int> all{0, 1, 2};
  CHECK_THROWS_AS(cut_edges(path, all), PreconditionError);
  CHECK_THROWS_AS(cut_edges(path, std::vector<int>{}), PreconditionError);
}

TEST_CASE("connected subset enumeration matches brute force") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto h = n == 1 ? Graph(1, {}) : oracle::random_connected(n, static_cast<int>(rng() % 15), rng);
    for (int k : {1, n / 2, n}) {
      if (k < 1) continue;
      std::set<std::vector<int>> seen;
      const auto count = for_each_connected_subset(h, k, [&](std::span<const int> w) {
        CHECK(std::is_sorted(w.begin(), w.end()));
        seen.emplace(w.begin(), w.end());
        return true;
      });
      CHECK(count == oracle::connected_subset_count(h, k));
      CHECK(seen.size() == count);
    }
  }
  CHECK(enumerate_connected_subsets(complete_graph(4), 2).size() == 4 + 6);
  CHECK_THROWS_AS(enumerate_connected_subsets(complete_graph(8), 8, 100), CapExceeded);
  std::size_t visits = 0;
  for_each_connected_subset(complete_graph(6), 3, [&](std::span<const int>) { return ++visits < 5; });
  CHECK(visits == 5);
}

TEST_CASE("second eigenvalue against a Jacobi oracle") {
  CHECK(second_eigenvalue(complete_graph(5)) == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(second_eigenvalue(cycle(6)) == doctest::Approx(1.0).epsilon(1e-9));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const auto h = oracle::random_connected(n, static_cast<int>(rng() % 30), rng);
    const auto ev = oracle::jacobi_eigenvalues(oracle::adjacency(h));
    CHECK(std::abs(second_eigenvalue(h) - ev[1]) <= 1e-8);
  }
  const auto petersen_like = random_regular(20, 3, 4);
  const auto ev = oracle::jacobi_eigenvalues(oracle::adjacency(petersen_like));
  CHECK(std::abs(second_eigenvalue(petersen_like) - ev[1]) <= 1e-8);
  CHECK_THROWS_AS(second_eigenvalue(Graph(1, {})), PreconditionError);
}

TEST_CASE("expansion profile") {
  const auto k6 = complete_graph(6);
  // |W| = 1: 5 crossing; |W| = 3: 9 crossing; log2 5 ~ 2.32
  const auto r = expansion_profile(k6, 0.5);
  CHECK(r.ok);
  CHECK(r.sets_checked == 6 + 15 + 20);
  const auto c8 = cycle(8);
  const auto bad = expansion_profile(c8, 1.5);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.worst.has_value());
  CHECK(bad.worst->crossing.count() == 2);
  CHECK_THROWS_AS(expansion_profile(Graph(3, {{0, 1}, {1, 2}}), 1.0), PreconditionError);
}
