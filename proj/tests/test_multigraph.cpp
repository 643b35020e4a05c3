#include <catch2/catch_amalgamated.hpp>

#include <cyclecount/multigraph.hpp>

using namespace cyclecount;

TEST_CASE("parse_mgf accepts the basic format", "[mgf]") {
  auto g = parse_mgf("2 3\n0 1\n0 1\n0 1\n");
  REQUIRE(g.n == 2);
  REQUIRE(g.m() == 3);
  for (auto& e : g.edges) {
    REQUIRE(e.u == 0);
    REQUIRE(e.v == 1);
  }

  auto loop = parse_mgf("1 1\n0 0\n");
  REQUIRE(loop.n == 1);
  REQUIRE(loop.m() == 1);
  REQUIRE(loop.is_loop(0));
}

TEST_CASE("parse_mgf skips comment lines", "[mgf]") {
  auto g = parse_mgf("# triangle\n3 3\n0 1\n# middle\n1 2\n2 0\n");
  REQUIRE(g.n == 3);
  REQUIRE(g.m() == 3);
}

TEST_CASE("parse_mgf rejects malformed input with line numbers", "[mgf]") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_mgf(text);
      FAIL("expected mgf_error");
    } catch (const mgf_error& e) {
      REQUIRE(e.line() == line);
    }
  };
  expect_line("2 1\n0 2\n", 2);       // vertex out of range
  expect_line("2 2\n0 1\n", 2);       // fewer edges than declared
  expect_line("2 1\n0 1\n0 1\n", 3);  // more edges than declared
  expect_line("x 1\n0 0\n", 1);       // bad header
  expect_line("2 1\n0  1\n", 2);      // double space
  expect_line("2 1\n0 1", 2);         // missing trailing newline
  REQUIRE_THROWS_AS(parse_mgf(""), mgf_error);
}

TEST_CASE("to_mgf round-trips", "[mgf]") {
  std::string text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  auto g = parse_mgf(text);
  REQUIRE(to_mgf(g) == text);
  REQUIRE(parse_mgf(to_mgf(g)).edges.size() == g.edges.size());
}

TEST_CASE("to_dot emits undirected edges", "[mgf]") {
  auto g = parse_mgf("2 2\n0 1\n0 1\n");
  auto dot = to_dot(g);
  REQUIRE(dot.find("graph") == 0);
  REQUIRE(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("degrees count loops twice", "[mgf]") {
  auto g = parse_mgf("2 3\n0 0\n0 1\n1 1\n");
  auto d = g.degrees();
  REQUIRE(d[0] == 3);
  REQUIRE(d[1] == 3);
}

TEST_CASE("connectivity", "[mgf]") {
  REQUIRE(is_connected(parse_mgf("1 1\n0 0\n")));
  REQUIRE(is_connected(parse_mgf("3 3\n0 1\n1 2\n2 0\n")));
  REQUIRE_FALSE(is_connected(parse_mgf("3 1\n0 1\n")));
  REQUIRE_FALSE(is_connected(Multigraph{0, {}}));
  REQUIRE(is_connected(Multigraph{1, {}}));
}

TEST_CASE("inseparability", "[mgf]") {
  // The single-vertex single-loop graph is inseparable.
  REQUIRE(is_inseparable(parse_mgf("1 1\n0 0\n")));
  // A lone vertex or several loops on one vertex are not.
  REQUIRE_FALSE(is_inseparable(Multigraph{1, {}}));
  REQUIRE_FALSE(is_inseparable(parse_mgf("1 2\n0 0\n0 0\n")));
  // Two vertices need at least two parallel edges.
  REQUIRE_FALSE(is_inseparable(parse_mgf("2 1\n0 1\n")));
  REQUIRE(is_inseparable(parse_mgf("2 2\n0 1\n0 1\n")));
  // A loop attached to anything larger creates a cutpoint.
  REQUIRE_FALSE(is_inseparable(parse_mgf("2 3\n0 1\n0 1\n1 1\n")));
  // Cycles and complete graphs are inseparable; trees and cut vertices not.
  REQUIRE(is_inseparable(parse_mgf("4 4\n0 1\n1 2\n2 3\n3 0\n")));
  REQUIRE(is_inseparable(parse_mgf("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")));
  REQUIRE_FALSE(is_inseparable(parse_mgf("3 2\n0 1\n1 2\n")));
  // Bowtie: two triangles sharing a vertex.
  REQUIRE_FALSE(
      is_inseparable(parse_mgf("5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n")));
}

TEST_CASE("is_cubic", "[mgf]") {
  REQUIRE(is_cubic(parse_mgf("2 3\n0 1\n0 1\n0 1\n")));
  REQUIRE(is_cubic(parse_mgf("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")));
  REQUIRE_FALSE(is_cubic(parse_mgf("3 3\n0 1\n1 2\n2 0\n")));
}

TEST_CASE("subdivide splits an edge into a path", "[mgf]") {
  auto g = parse_mgf("2 2\n0 1\n0 1\n");
  auto s = subdivide(g, 0, 2);
  REQUIRE(s.n == 4);
  REQUIRE(s.m() == 4);
  // New vertices appear in path order after the old ones.
  REQUIRE(s.edges[0].u == 0);
  REQUIRE(s.edges[0].v == 2);
  REQUIRE(is_inseparable(s));

  // Subdividing a loop once yields a parallel pair.
  auto loop = parse_mgf("1 1\n0 0\n");
  auto p = subdivide(loop, 0, 1);
  REQUIRE(p.n == 2);
  REQUIRE(p.m() == 2);
  REQUIRE_FALSE(p.is_loop(0));
  REQUIRE_FALSE(p.is_loop(1));
}

TEST_CASE("delete_edge shifts indices", "[mgf]") {
  auto g = parse_mgf("3 3\n0 1\n1 2\n2 0\n");
  auto d = delete_edge(g, 1);
  REQUIRE(d.m() == 2);
  REQUIRE(d.edges[1].u == 2);
  REQUIRE(d.edges[1].v == 0);
}

TEST_CASE("contract_edge merges endpoints", "[mgf]") {
  // Contracting a triangle edge leaves a parallel pair.
  auto tri = parse_mgf("3 3\n0 1\n1 2\n2 0\n");
  auto c = contract_edge(tri, 0);
  REQUIRE(c.n == 2);
  REQUIRE(c.m() == 2);
  REQUIRE_FALSE(c.is_loop(0));
  // Contracting one edge of a parallel pair turns the mate into a loop.
  auto pair = parse_mgf("2 2\n0 1\n0 1\n");
  auto l = contract_edge(pair, 0);
  REQUIRE(l.n == 1);
  REQUIRE(l.m() == 1);
  REQUIRE(l.is_loop(0));
  // Contracting a loop just deletes it.
  auto loop = parse_mgf("1 1\n0 0\n");
  auto e = contract_edge(loop, 0);
  REQUIRE(e.n == 1);
  REQUIRE(e.m() == 0);
}

TEST_CASE("permute_vertices relabels", "[mgf]") {
  auto g = parse_mgf("3 2\n0 1\n1 2\n");
  auto p = permute_vertices(g, {2, 0, 1});
  REQUIRE(p.edges[0].u == 2);
  REQUIRE(p.edges[0].v == 0);
  REQUIRE_THROWS(permute_vertices(g, {0, 0, 1}));
}

TEST_CASE("reduce suppresses divalent vertices", "[mgf]") {
  // Any cycle reduces to the single-vertex loop.
  auto c7 = parse_mgf("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n");
  auto r = reduce(c7);
  REQUIRE(r.graph.n == 1);
  REQUIRE(r.graph.m() == 1);
  REQUIRE(r.graph.is_loop(0));
  REQUIRE(r.suppressed == 6);

  // A reduced graph is untouched.
  auto k4 = parse_mgf("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  REQUIRE(is_reduced(k4));
  REQUIRE(reduce(k4).suppressed == 0);

  // Subdivision then reduction recovers the class.
  auto s = subdivide(subdivide(k4, 0, 3), 7, 1);
  REQUIRE_FALSE(is_reduced(s));
  auto back = reduce(s);
  REQUIRE(back.graph.n == 4);
  REQUIRE(back.graph.m() == 6);
  REQUIRE(back.suppressed == 4);
}

TEST_CASE("reduce_tracked reports edge origins", "[mgf]") {
  auto theta = parse_mgf("2 3\n0 1\n0 1\n0 1\n");
  auto s = subdivide(theta, 0, 2);
  std::vector<std::vector<int>> origins;
  auto r = reduce_tracked(s, &origins);
  REQUIRE(r.graph.m() == 3);
  REQUIRE(origins.size() == 3);
  int total = 0;
  for (auto& o : origins) total += static_cast<int>(o.size());
  REQUIRE(total == s.m());
}

TEST_CASE("is_hamiltonian", "[mgf]") {
  REQUIRE(is_hamiltonian(parse_mgf("1 1\n0 0\n")));
  REQUIRE(is_hamiltonian(parse_mgf("2 2\n0 1\n0 1\n")));
  REQUIRE_FALSE(is_hamiltonian(parse_mgf("2 1\n0 1\n")));
  REQUIRE(is_hamiltonian(parse_mgf("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")));
  // K_{2,3} has no hamiltonian cycle.
  REQUIRE_FALSE(is_hamiltonian(
      parse_mgf("5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n")));
}
