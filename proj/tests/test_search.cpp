#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <cyclecount/cycles.hpp>
#include <cyclecount/ears.hpp>
#include <cyclecount/multigraph.hpp>
#include <cyclecount/planarity.hpp>
#include <cyclecount/search.hpp>

using namespace cyclecount;

namespace {

std::string table_fingerprint(const WitnessTable& t) {
  std::string out;
  for (auto& [count, g] : t.rows) {
    out += std::to_string(count);
    out += ':';
    out += to_mgf(g);
    out += ';';
  }
  return out;
}

}  // namespace

TEST_CASE("factories", "[search]") {
  REQUIRE(count_cycles(loop_class()) == 1);
  REQUIRE(theta_graph(5).m() == 5);
  REQUIRE(necklace_graph(4).m() == 8);
  REQUIRE(complete_graph(4).m() == 6);
  REQUIRE(complete_bipartite(3, 3).m() == 9);
  REQUIRE(cyclomatic_rank(complete_graph(4)) == 3);
  REQUIRE(cyclomatic_rank(loop_class()) == 1);
}

TEST_CASE("frontier sizes by rank", "[search][frontier]") {
  auto frontiers = build_frontiers(6);
  const long long expected_sizes[] = {1, 1, 4, 17, 118, 1198};
  const long long expected_mins[] = {1, 3, 6, 10, 15, 21};
  for (int r = 1; r <= 6; ++r) {
    REQUIRE(static_cast<long long>(frontiers[r - 1].classes.size()) ==
            expected_sizes[r - 1]);
    REQUIRE(min_cycles_by_rank(r, frontiers) == expected_mins[r - 1]);
    // Minimum cycle count at rank r is C(r+1, 2).
    REQUIRE(expected_mins[r - 1] == r * (r + 1) / 2);
  }
}

TEST_CASE("frontier classes are reduced, inseparable, correctly counted",
          "[search][frontier]") {
  auto frontiers = build_frontiers(4);
  for (auto& level : frontiers) {
    for (auto& [code, entry] : level.classes) {
      REQUIRE(is_reduced(entry.graph));
      REQUIRE(is_inseparable(entry.graph));
      REQUIRE(cyclomatic_rank(entry.graph) == level.rank);
      REQUIRE(count_cycles(entry.graph) == entry.count);
      REQUIRE(canonical_code(entry.graph) == code);
    }
  }
}

TEST_CASE("every class descends to the previous frontier by ear deletion",
          "[search][frontier]") {
  auto frontiers = build_frontiers(5);
  for (std::size_t i = 1; i < frontiers.size(); ++i) {
    auto& prev = frontiers[i - 1].classes;
    for (auto& [code, entry] : frontiers[i].classes) {
      bool descends = false;
      for (auto& ear : find_ears(entry.graph)) {
        Multigraph rest;
        try {
          rest = delete_ear(entry.graph, ear);
        } catch (const std::exception&) {
          continue;  // deletion would separate; try another ear
        }
        auto reduced = reduce(rest).graph;
        if (prev.count(canonical_code(reduced))) {
          descends = true;
          break;
        }
      }
      REQUIRE(descends);
    }
  }
}

TEST_CASE("rank floor extrapolates by two per rank", "[search]") {
  REQUIRE(min_cycles_rank_floor(7, 6, 21) == 23);
  REQUIRE(min_cycles_rank_floor(8, 6, 21) == 25);
  REQUIRE_THROWS(min_cycles_rank_floor(6, 6, 21));
}

TEST_CASE("witness walk to 30 misses exactly the known gaps",
          "[search][walk]") {
  auto result = witness_walk(30, {TableSpec{}});
  REQUIRE(result.tables.size() == 1);
  auto& rows = result.tables[0].rows;
  std::set<long long> missing;
  for (long long c = 1; c <= 30; ++c) {
    if (!rows.count(c)) missing.insert(c);
  }
  REQUIRE(missing == std::set<long long>{2, 4, 5, 8, 9, 16});
  for (auto& [count, g] : rows) {
    REQUIRE(count_cycles(g) == count);
    REQUIRE(is_reduced(g));
    REQUIRE(is_inseparable(g));
  }
}

TEST_CASE("witness walk is deterministic across worker counts",
          "[search][walk]") {
  auto a = witness_walk(25, {TableSpec{}}, 1);
  auto b = witness_walk(25, {TableSpec{}}, 2);
  auto c = witness_walk(25, {TableSpec{}}, 3);
  REQUIRE(table_fingerprint(a.tables[0]) == table_fingerprint(b.tables[0]));
  REQUIRE(table_fingerprint(a.tables[0]) == table_fingerprint(c.tables[0]));
}

TEST_CASE("filtered walks obey their predicates", "[search][walk]") {
  TableSpec planar_ham;
  planar_ham.planar = true;
  planar_ham.hamiltonian = true;
  auto result = witness_walk(20, {planar_ham});
  for (auto& [count, g] : result.tables[0].rows) {
    REQUIRE(is_planar(g));
    REQUIRE(is_hamiltonian(g));
  }
  REQUIRE(result.tables[0].rows.count(7) == 1);
  REQUIRE(result.tables[0].rows.count(8) == 0);
}

TEST_CASE("nonexistence certificates for the gap values", "[search][prove]") {
  auto frontiers = build_frontiers(6);
  for (long long target : {2, 4, 5, 8, 9, 16}) {
    auto cert = prove_nonexistence(target, TableSpec{}, frontiers);
    REQUIRE(cert.absent);
    REQUIRE(cert.target == target);
    REQUIRE(cert.next_rank_floor > target);
    REQUIRE_FALSE(cert.per_rank.empty());
  }
  // Present values come back with a witness.
  for (long long target : {1, 3, 6, 7, 10, 15}) {
    auto cert = prove_nonexistence(target, TableSpec{}, frontiers);
    REQUIRE_FALSE(cert.absent);
    REQUIRE(cert.witness.has_value());
    REQUIRE(count_cycles(*cert.witness) == target);
  }
}

TEST_CASE("nonexistence requires a high enough rank fence", "[search][prove]") {
  auto frontiers = build_frontiers(4);
  REQUIRE_THROWS(prove_nonexistence(50, TableSpec{}, frontiers));
}

TEST_CASE("cubic-filtered certificate for 13", "[search][prove]") {
  auto frontiers = build_frontiers(6);
  TableSpec cubic;
  cubic.cubic = true;
  auto cert = prove_nonexistence(13, cubic, frontiers);
  REQUIRE(cert.absent);
  // Unfiltered, 13 is attainable.
  auto plain = prove_nonexistence(13, TableSpec{}, frontiers);
  REQUIRE_FALSE(plain.absent);
}

TEST_CASE("nonplanar classes below 24 cycles", "[search][planar]") {
  auto nonplanar = nonplanar_classification(24);
  REQUIRE(nonplanar.size() == 1);
  REQUIRE(nonplanar[0].count == 15);
  REQUIRE(count_cycles(nonplanar[0].graph) == 15);
  REQUIRE(isomorphic(nonplanar[0].graph, complete_bipartite(3, 3)));
}

TEST_CASE("cubic search over small orders", "[search][cubic]") {
  auto result = cubic_search(100, 8);
  REQUIRE(result.order_exhausted);
  const long long expected_classes[] = {1, 2, 5, 16};
  for (int i = 0; i < 4; ++i) {
    REQUIRE(result.stats[i].classes == expected_classes[i]);
    REQUIRE(result.stats[i].rank > 0);
  }
  // 13 is never a cubic count; 3, 6, 7 appear already at low order.
  REQUIRE(result.any_witness.count(13) == 0);
  REQUIRE(result.any_witness.count(3) == 1);
  REQUIRE(result.any_witness.count(6) == 1);
  REQUIRE(result.any_witness.count(7) == 1);
  for (auto& [count, g] : result.any_witness) {
    REQUIRE(is_cubic(g));
    REQUIRE(count_cycles(g) == count);
  }
  // Planar witnesses form a subset with planar graphs only.
  for (auto& [count, g] : result.planar_witness) {
    REQUIRE(is_planar(g));
    REQUIRE(result.any_witness.count(count) == 1);
  }
}

TEST_CASE("duality witnesses agree with subtree counts", "[search][duality]") {
  auto witnesses = duality_witnesses(30, 8);
  REQUIRE_FALSE(witnesses.empty());
  std::set<long long> counts;
  for (auto& w : witnesses) {
    REQUIRE(w.count <= 30);
    REQUIRE(is_reduced(w.graph));
    REQUIRE(is_inseparable(w.graph));
    REQUIRE(count_cycles(w.graph) == w.count);
    counts.insert(w.count);
  }
  REQUIRE(counts.count(3) == 1);
  REQUIRE(counts.count(6) == 1);
  REQUIRE(counts.count(10) == 1);
  REQUIRE(counts.count(2) == 0);
}

TEST_CASE("integer sequence prefixes", "[search][oeis]") {
  auto general = oeis_prefix("A385523", 10);
  REQUIRE(general ==
          std::vector<long long>{1, 3, 6, 7, 10, 11, 12, 13, 14, 15});
  auto cubic = oeis_prefix("A385524", 10);
  REQUIRE(cubic ==
          std::vector<long long>{3, 6, 7, 10, 11, 12, 14, 15, 17, 18});
  // The certified range ends at 100, so 94 resp. 92 terms exist; asking for
  // more is an error rather than a silent truncation.
  REQUIRE(oeis_prefix("A385523", 94).size() == 94);
  REQUIRE(oeis_prefix("A385523", 94).back() == 100);
  REQUIRE(oeis_prefix("A385524", 92).size() == 92);
  REQUIRE(oeis_prefix("A385524", 92).back() == 100);
  REQUIRE_THROWS(oeis_prefix("A385523", 95));
  REQUIRE_THROWS(oeis_prefix("A385523", 0));
  REQUIRE_THROWS(oeis_prefix("A000001", 5));
}

TEST_CASE("rank cap honors the environment override", "[search]") {
  REQUIRE(max_exhaustive_rank() >= 1);
}
