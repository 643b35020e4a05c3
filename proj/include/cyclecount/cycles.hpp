#pragma once

// Cycle counting and enumeration. A cycle is a connected 2-regular edge
// subset: loops count, a parallel pair forms a 2-cycle, and parallel edges
// give distinct cycles. Two independent implementations:
//
//  * count_cycles / enumerate_cycles - rooted path DFS, each cycle found
//    exactly once (root = minimum vertex, tie broken by smallest first-edge
//    index). Linear memory, cap-aware.
//  * count_cycles_oracle - decision search over edge subsets with degree and
//    liveness pruning only; checks the cycle predicate on each completed
//    subset. Slower and simpler, used to validate the walker.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cyclecount/multigraph.hpp"

namespace cyclecount {

inline constexpr long long kUncapped = std::numeric_limits<long long>::max();

namespace detail {

// DFS over simple paths from `root` through vertices > root, closing back at
// root. Calls sink(path edge ids) for each cycle; returns false if the cap
// tripped. Loop edges are handled by the caller.
template <typename Sink>
bool walk_cycles_from(const AdjView& a, int root, long long& count, long long cap,
                      std::vector<int>& path, Sink&& sink) {
  struct Frame {
    int vertex;
    std::size_t next;  // index into a.inc[vertex]
  };
  // Iterative DFS so deep subdivision chains can't overflow the stack.
  std::vector<Frame> stack;
  std::vector<char> visited(a.inc.size(), 0);
  visited[root] = 1;
  stack.push_back({root, 0});
  path.clear();
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == a.inc[f.vertex].size()) {
      if (f.vertex != root) visited[f.vertex] = 0;
      if (!path.empty()) path.pop_back();
      stack.pop_back();
      continue;
    }
    auto [e, y] = a.inc[f.vertex][f.next++];
    if (y == root) {
      // Close only with a larger edge index than the first edge: each cycle
      // has exactly one traversal direction counted.
      if (!path.empty() && e > path.front()) {
        ++count;
        path.push_back(e);
        sink(path);
        path.pop_back();
        if (count >= cap) return false;
      }
      continue;
    }
    if (y < root || visited[y]) continue;
    visited[y] = 1;
    path.push_back(e);
    stack.push_back({y, 0});
  }
  return true;
}

}  // namespace detail

// Counts cycles, stopping at `cap` (the return value is then >= cap and not
// trustworthy beyond "at least cap"). Requires a connected graph.
inline long long count_cycles(const Multigraph& g, long long cap = kUncapped) {
  if (!is_connected(g)) throw std::invalid_argument("count_cycles: graph must be connected");
  AdjView a(g);
  long long count = 0;
  for (int v = 0; v < g.n; ++v) count += static_cast<long long>(a.loops[v].size());
  if (count >= cap) return count;
  std::vector<int> path;
  auto nothing = [](const std::vector<int>&) {};
  for (int root = 0; root < g.n; ++root)
    if (!detail::walk_cycles_from(a, root, count, cap, path, nothing)) return count;
  return count;
}

// Each cycle as a sorted vector of edge indices.
inline std::vector<std::vector<int>> enumerate_cycles(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("enumerate_cycles: graph must be connected");
  AdjView a(g);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.n; ++v)
    for (int e : a.loops[v]) out.push_back({e});
  long long count = 0;
  std::vector<int> path;
  auto keep = [&](const std::vector<int>& edges) {
    std::vector<int> c = edges;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  };
  for (int root = 0; root < g.n; ++root)
    detail::walk_cycles_from(a, root, count, kUncapped, path, keep);
  return out;
}

// True iff `edges` indexes a cycle of g: nonempty, every touched vertex has
// degree exactly 2, and the touched vertices are connected.
inline bool is_cycle_edge_set(const Multigraph& g, const std::vector<int>& edges) {
  if (edges.empty()) return false;
  std::vector<int> deg(g.n, 0);
  std::vector<char> in(g.m(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.m() || in[e]) return false;
    in[e] = 1;
    deg[g.edges[e].u] += 1;
    deg[g.edges[e].v] += 1;
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 0 && deg[v] != 2) return false;
  // Connectivity over the selected edges.
  int start = g.edges[edges[0]].u;
  std::vector<std::vector<int>> adj(g.n);
  for (int e : edges) {
    if (g.edges[e].u == g.edges[e].v) continue;
    adj[g.edges[e].u].push_back(g.edges[e].v);
    adj[g.edges[e].v].push_back(g.edges[e].u);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[v] != 0 && !seen[v]) return false;
  return true;
}

// Independent reference count by subset search. Prunes only branches that
// provably contain no cycle (a vertex over degree 2, or stuck at degree 1
// with no undecided incidences left), then tests the predicate.
inline long long count_cycles_oracle(const Multigraph& g, int max_edges = 24) {
  if (g.m() > max_edges)
    throw std::invalid_argument("count_cycles_oracle: edge bound exceeded (m=" +
                                std::to_string(g.m()) + ")");
  if (!is_connected(g))
    throw std::invalid_argument("count_cycles_oracle: graph must be connected");
  const int m = g.m();
  std::vector<int> deg(g.n, 0), undecided(g.n, 0);
  for (const Edge& e : g.edges) {
    undecided[e.u] += 1;
    undecided[e.v] += 1;  // loops: 2 undecided incidences at one vertex
  }
  std::vector<char> chosen(m, 0);
  long long count = 0;

  auto stuck = [&](int v) { return deg[v] == 1 && undecided[v] == 0; };

  auto check = [&]() {
    std::vector<int> picked;
    for (int e = 0; e < m; ++e)
      if (chosen[e]) picked.push_back(e);
    if (!picked.empty() && is_cycle_edge_set(g, picked)) ++count;
  };

  // Deciding edge i (either way) removes one undecided incidence from each
  // endpoint; a vertex at degree 1 with none left can never reach 2.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      check();
      return;
    }
    const int u = g.edges[i].u, v = g.edges[i].v;
    const bool loop = u == v;
    auto decide = [&](int delta) {
      undecided[u] -= loop ? 2 : 1;
      if (!loop) undecided[v] -= 1;
      deg[u] += delta * (loop ? 2 : 1);
      if (!loop) deg[v] += delta;
    };
    auto undo = [&](int delta) {
      undecided[u] += loop ? 2 : 1;
      if (!loop) undecided[v] += 1;
      deg[u] -= delta * (loop ? 2 : 1);
      if (!loop) deg[v] -= delta;
    };
    // Include edge i, unless an endpoint would pass degree 2.
    if ((loop && deg[u] == 0) || (!loop && deg[u] <= 1 && deg[v] <= 1)) {
      chosen[i] = 1;
      decide(1);
      if (!stuck(u) && !stuck(v)) self(self, i + 1);
      undo(1);
      chosen[i] = 0;
    }
    // Exclude edge i.
    decide(0);
    if (!stuck(u) && !stuck(v)) self(self, i + 1);
    undo(0);
  };
  rec(rec, 0);
  return count;
}

// Number of paths between distinct vertices s and t (vertex-disjoint interior,
// parallel edges give distinct paths). Capped like count_cycles.
inline long long count_st_paths(const Multigraph& g, int s, int t,
                                long long cap = kUncapped) {
  if (s == t) throw std::invalid_argument("count_st_paths: endpoints must differ");
  if (s < 0 || s >= g.n || t < 0 || t >= g.n)
    throw std::invalid_argument("count_st_paths: vertex out of range");
  AdjView a(g);
  long long count = 0;
  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<char> visited(g.n, 0);
  visited[s] = 1;
  stack.push_back({s, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == a.inc[f.vertex].size()) {
      if (f.vertex != s) visited[f.vertex] = 0;
      stack.pop_back();
      continue;
    }
    auto [e, y] = a.inc[f.vertex][f.next++];
    (void)e;
    if (y == t) {
      ++count;
      if (count >= cap) return count;
      continue;
    }
    if (visited[y]) continue;
    visited[y] = 1;
    stack.push_back({y, 0});
  }
  return count;
}

}  // namespace cyclecount
