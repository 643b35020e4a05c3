#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <cyclecount/cycles.hpp>
#include <cyclecount/multigraph.hpp>
#include <cyclecount/search.hpp>

using namespace cyclecount;

TEST_CASE("counts for the standard small graphs", "[cycles]") {
  REQUIRE(count_cycles(parse_mgf("1 1\n0 0\n")) == 1);
  // Theta_k has k choose 2 cycles.
  for (int k = 2; k <= 8; ++k) {
    REQUIRE(count_cycles(theta_graph(k)) == k * (k - 1) / 2);
  }
  REQUIRE(count_cycles(complete_graph(4)) == 7);
  REQUIRE(count_cycles(complete_graph(5)) == 37);
  REQUIRE(count_cycles(complete_bipartite(3, 3)) == 15);
  REQUIRE(count_cycles(necklace_graph(4)) == 20);
  // Necklace of k beads: k digons plus 2^k full-length cycles.
  REQUIRE(count_cycles(necklace_graph(3)) == 11);
}

TEST_CASE("counting is a homeomorphism invariant", "[cycles]") {
  auto k4 = complete_graph(4);
  auto s = subdivide(subdivide(k4, 2, 2), 0, 1);
  REQUIRE(count_cycles(s) == 7);
}

TEST_CASE("count_cycles rejects disconnected input", "[cycles]") {
  REQUIRE_THROWS(count_cycles(parse_mgf("4 2\n0 1\n2 3\n")));
}

TEST_CASE("cap aborts long counts", "[cycles]") {
  auto k5 = complete_graph(5);
  REQUIRE(count_cycles(k5, 10) >= 10);
  REQUIRE(count_cycles(k5, kUncapped) == 37);
}

TEST_CASE("enumerate_cycles lists distinct valid cycles", "[cycles]") {
  auto k4 = complete_graph(4);
  auto all = enumerate_cycles(k4);
  REQUIRE(all.size() == 7);
  std::set<std::vector<int>> uniq(all.begin(), all.end());
  REQUIRE(uniq.size() == 7);
  for (auto& c : all) REQUIRE(is_cycle_edge_set(k4, c));
  // Triangle + one chord-free edge is not a cycle.
  REQUIRE_FALSE(is_cycle_edge_set(k4, {0, 1, 2}));
  REQUIRE_FALSE(is_cycle_edge_set(k4, {}));
  REQUIRE_FALSE(is_cycle_edge_set(k4, {0, 0}));
}

TEST_CASE("loops are single-edge cycles", "[cycles]") {
  auto g = parse_mgf("1 1\n0 0\n");
  auto all = enumerate_cycles(g);
  REQUIRE(all.size() == 1);
  REQUIRE(all[0] == std::vector<int>{0});
  REQUIRE(is_cycle_edge_set(g, {0}));
}

TEST_CASE("oracle agrees with the walk counter", "[cycles][oracle]") {
  std::mt19937 rng(99);
  std::vector<Multigraph> corpus = {
      parse_mgf("1 1\n0 0\n"), theta_graph(3),         theta_graph(5),
      complete_graph(4),       complete_bipartite(3, 3), necklace_graph(4),
      complete_graph(5),
  };
  for (auto& g : corpus) {
    REQUIRE(count_cycles_oracle(g) == count_cycles(g));
    // Random subdivisions preserve the count and keep the oracle honest.
    auto h = g;
    for (int i = 0; i < 3 && h.m() < 20; ++i) {
      int e = std::uniform_int_distribution<int>(0, h.m() - 1)(rng);
      h = subdivide(h, e, 1 + (i % 2));
    }
    if (h.m() <= 24) REQUIRE(count_cycles_oracle(h) == count_cycles(g));
  }
}

TEST_CASE("oracle refuses oversized graphs", "[cycles][oracle]") {
  Multigraph big{2, {}};
  for (int i = 0; i < 25; ++i) big.edges.push_back({0, 1});
  REQUIRE_THROWS(count_cycles_oracle(big));
}

TEST_CASE("st-path counts", "[cycles]") {
  // Any two vertices of K_4 are joined by exactly 5 paths.
  auto k4 = complete_graph(4);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t)
      if (s != t) REQUIRE(count_st_paths(k4, s, t) == 5);

  // Parallel edges count as distinct paths; loops never contribute.
  auto theta = theta_graph(3);
  REQUIRE(count_st_paths(theta, 0, 1) == 3);
  auto loopy = parse_mgf("2 3\n0 1\n0 1\n0 0\n");
  REQUIRE(count_st_paths(loopy, 0, 1) == 2);
  // Equal endpoints are a contract violation, not an answer of zero.
  REQUIRE_THROWS(count_st_paths(k4, 2, 2));
}

TEST_CASE("necklace counts cross-checked against the oracle", "[cycles]") {
  // necklace_graph(k): cycle C_k with every edge doubled.
  REQUIRE(count_cycles(necklace_graph(2)) == 6);
  REQUIRE(count_cycles_oracle(necklace_graph(5)) ==
          count_cycles(necklace_graph(5)));
}
