#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <cyclecount/cycles.hpp>
#include <cyclecount/multigraph.hpp>
#include <cyclecount/treeduality.hpp>

using namespace cyclecount;

namespace {

Tree path_tree(int n) {
  Tree t{n, {}};
  for (int i = 0; i + 1 < n; ++i) t.edges.push_back({i, i + 1});
  return t;
}

Tree star_tree(int n) {
  Tree t{n, {}};
  for (int i = 1; i < n; ++i) t.edges.push_back({0, i});
  return t;
}

}  // namespace

TEST_CASE("count_subtrees on paths and stars", "[trees]") {
  // Path on n vertices: n(n+1)/2 subtrees (all subpaths).
  for (int n = 1; n <= 8; ++n) {
    REQUIRE(count_subtrees(path_tree(n)) == n * (n + 1) / 2);
  }
  // Star on n vertices: n-1 leaves + 2^(n-1) subtrees containing the hub.
  for (int n = 2; n <= 8; ++n) {
    REQUIRE(count_subtrees(star_tree(n)) == (n - 1) + (1LL << (n - 1)));
  }
}

TEST_CASE("enumerate_subtrees matches count_subtrees", "[trees]") {
  for (auto& t : {path_tree(5), star_tree(5), path_tree(1)}) {
    auto subs = enumerate_subtrees(t);
    REQUIRE(static_cast<long long>(subs.size()) == count_subtrees(t));
    std::set<std::vector<int>> uniq(subs.begin(), subs.end());
    REQUIRE(uniq.size() == subs.size());
  }
}

TEST_CASE("tree validation", "[trees]") {
  REQUIRE(is_tree(tree_as_multigraph(path_tree(4))));
  REQUIRE_FALSE(is_tree(parse_mgf("3 3\n0 1\n1 2\n2 0\n")));
  REQUIRE_FALSE(is_tree(parse_mgf("4 2\n0 1\n2 3\n")));
  REQUIRE_THROWS(as_tree(parse_mgf("3 3\n0 1\n1 2\n2 0\n")));
}

TEST_CASE("edge tree companion is the triple edge", "[duality]") {
  // The 2-vertex tree has 3 subtrees; its companion class must count 3.
  auto [op, faces] = tree_to_outerplanar(path_tree(2));
  auto g = outerplanar_as_multigraph(op);
  REQUIRE(count_cycles(g) == 3);
  auto r = reduce(g);
  REQUIRE(r.graph.n == 2);
  REQUIRE(r.graph.m() == 3);
}

TEST_CASE("path-3 companion counts six cycles", "[duality]") {
  auto [op, faces] = tree_to_outerplanar(path_tree(3));
  REQUIRE(count_cycles(outerplanar_as_multigraph(op)) == 6);
}

TEST_CASE("companion construction yields valid outerplanar graphs",
          "[duality]") {
  for (auto& t : {path_tree(4), star_tree(5), path_tree(6)}) {
    auto [op, faces] = tree_to_outerplanar(t);
    REQUIRE(op.outer >= 2);
    REQUIRE(static_cast<int>(faces.face_edges.size()) == t.n);
    auto g = outerplanar_as_multigraph(op);
    REQUIRE(is_inseparable(g));
    REQUIRE(count_cycles(g) == count_subtrees(t));
  }
}

TEST_CASE("inner dual recovers the tree", "[duality]") {
  for (auto& t : {path_tree(5), star_tree(4)}) {
    auto [op, faces] = tree_to_outerplanar(t);
    auto dual = inner_dual(op);
    REQUIRE(dual.n == t.n);
    REQUIRE(tree_canonical_string(dual) == tree_canonical_string(t));
  }
}

TEST_CASE("inner dual rejects crossing chords", "[duality]") {
  OuterplanarGraph bad{6, {{0, 3}, {2, 5}}};
  REQUIRE_THROWS(inner_dual_faces(bad));
  OuterplanarGraph shared{6, {{0, 3}, {0, 4}}};
  REQUIRE_THROWS(inner_dual_faces(shared));
  OuterplanarGraph range{4, {{0, 7}}};
  REQUIRE_THROWS(inner_dual_faces(range));
}

TEST_CASE("subtree-to-cycle map is a bijection on small trees",
          "[duality]") {
  for (int n = 2; n <= 7; ++n) {
    for (auto& t : all_trees(n)) {
      REQUIRE(verify_bijection(t));
    }
  }
}

TEST_CASE("faces_to_cycle XORs face boundaries", "[duality]") {
  auto [op, faces] = tree_to_outerplanar(path_tree(3));
  auto g = outerplanar_as_multigraph(op);
  // Single faces are cycles; adjacent pairs are cycles too.
  auto c0 = faces_to_cycle(faces, {0});
  REQUIRE(is_cycle_edge_set(g, c0));
  auto c01 = faces_to_cycle(faces, {0, 1});
  REQUIRE(is_cycle_edge_set(g, c01));
}

TEST_CASE("free tree enumeration matches the census", "[trees]") {
  // Numbers of unlabeled free trees on 1..8 vertices.
  const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) {
    auto trees = all_trees(n);
    REQUIRE(static_cast<int>(trees.size()) == expected[n - 1]);
    std::set<std::string> codes;
    for (auto& t : trees) codes.insert(tree_canonical_string(t));
    REQUIRE(codes.size() == trees.size());
  }
}

TEST_CASE("canonical string identifies isomorphic trees", "[trees]") {
  Tree a{4, {{0, 1}, {1, 2}, {2, 3}}};
  Tree b{4, {{3, 2}, {2, 0}, {0, 1}}};  // same path, relabeled
  Tree c{4, {{0, 1}, {0, 2}, {0, 3}}};  // star
  REQUIRE(tree_canonical_string(a) == tree_canonical_string(b));
  REQUIRE_FALSE(tree_canonical_string(a) == tree_canonical_string(c));
}

TEST_CASE("spectrum minima follow the path tree", "[trees]") {
  auto result = subtree_count_spectrum(9);
  for (int n = 1; n <= 9; ++n) {
    REQUIRE(result.min_count_by_order.at(n - 1) == n * (n + 1) / 2);
  }
  std::set<long long> attained;
  for (auto& e : result.entries) {
    attained.insert(e.count);
    REQUIRE(count_subtrees(e.witness) == e.count);
    REQUIRE(e.witness.n == e.order);
  }
  REQUIRE(attained.count(1) == 1);
  REQUIRE(attained.count(3) == 1);
  REQUIRE(attained.count(2) == 0);
  REQUIRE(attained.count(4) == 0);
  REQUIRE(attained.count(6) == 1);
}
