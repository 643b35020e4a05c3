#pragma once

// Planarity of a multigraph = planarity of its underlying simple graph
// (loops and parallel multiplicities never affect it). Backed by the
// Boyer-Myrvold test from Boost.Graph.

#include <set>
#include <stdexcept>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cyclecount/multigraph.hpp"

namespace cyclecount {

inline bool is_planar(const Multigraph& g, int max_n = 32) {
  if (g.n > max_n) throw std::invalid_argument("is_planar: size bound exceeded");
  if (g.n <= 2) return true;
  std::set<std::pair<int, int>> simple;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    simple.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  // Cheap exits: forests and small graphs are planar, and a planar simple
  // graph has at most 3n - 6 edges.
  const long long ms = static_cast<long long>(simple.size());
  if (g.n <= 4 || ms < 3) return true;
  if (ms > 3LL * g.n - 6) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph b(g.n);
  for (const auto& [u, v] : simple) boost::add_edge(u, v, b);
  return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace cyclecount
