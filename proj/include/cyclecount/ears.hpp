#pragma once

// Ear calculus on inseparable multigraphs. An ear is a maximal path whose
// endpoints are multivalent (degree > 2) and whose internal vertices are
// divalent; in a reduced graph every edge is its own ear. Adding an ear
// means choosing two anchors - existing vertices or points in the interior
// of edges (realized by subdivision) - and joining them by a new path.
// The cycle count grows by exactly the number of paths between the two
// anchor vertices in the pre-ear graph; search code leans on that identity,
// and the test suite validates it against full recounts.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cyclecount/canonical.hpp"
#include "cyclecount/cycles.hpp"
#include "cyclecount/multigraph.hpp"

namespace cyclecount {

struct Ear {
  std::vector<int> edges;     // edge indices along the path
  int u = -1, w = -1;         // multivalent endpoints (u == w never happens
                              // in an inseparable graph other than a cycle)
  std::vector<int> interior;  // divalent internal vertices, in path order
};

// Anchor for ear addition: either an existing vertex or the interior of an
// edge (which gets subdivided once to realize the attachment point).
struct Anchor {
  enum class Kind { vertex, edge_interior };
  Kind kind;
  int index;  // vertex index or edge index

  static Anchor at_vertex(int v) { return {Kind::vertex, v}; }
  static Anchor inside_edge(int e) { return {Kind::edge_interior, e}; }
};

// Decompose an inseparable graph that is not a cycle class into its ears.
// Every edge lies on exactly one ear.
inline std::vector<Ear> find_ears(const Multigraph& g) {
  if (!is_inseparable(g)) throw std::invalid_argument("find_ears: graph must be inseparable");
  std::vector<int> deg = g.degrees();
  bool any_multivalent = false;
  for (int d : deg) any_multivalent |= d > 2;
  if (!any_multivalent)
    throw std::invalid_argument("find_ears: cycle class has no ear decomposition");
  AdjView a(g);
  std::vector<char> done(g.m(), 0);
  std::vector<Ear> ears;
  for (int e0 = 0; e0 < g.m(); ++e0) {
    if (done[e0]) continue;
    // Walk from e0 in both directions to the multivalent endpoints.
    auto extend = [&](int start_vertex, int via_edge) {
      // Returns (endpoint, edges walked, interior vertices passed).
      std::vector<int> es, ivs;
      int prev_edge = via_edge;
      int cur = start_vertex;
      while (deg[cur] == 2) {
        ivs.push_back(cur);
        int next_edge = -1, next_vertex = -1;
        for (auto [e, y] : a.inc[cur]) {
          if (e != prev_edge) {
            next_edge = e;
            next_vertex = y;
          }
        }
        es.push_back(next_edge);
        prev_edge = next_edge;
        cur = next_vertex;
      }
      return std::tuple{cur, es, ivs};
    };
    int su = g.edges[e0].u, sv = g.edges[e0].v;
    auto [endu, esu, ivsu] = extend(su, e0);
    auto [endw, esw, ivsw] = extend(sv, e0);
    Ear ear;
    ear.u = endu;
    ear.w = endw;
    std::reverse(esu.begin(), esu.end());
    std::reverse(ivsu.begin(), ivsu.end());
    ear.edges = esu;
    ear.edges.push_back(e0);
    ear.edges.insert(ear.edges.end(), esw.begin(), esw.end());
    ear.interior = ivsu;
    ear.interior.insert(ear.interior.end(), ivsw.begin(), ivsw.end());
    for (int e : ear.edges) done[e] = 1;
    // Normalize orientation: smaller endpoint first.
    if (ear.w < ear.u) {
      std::swap(ear.u, ear.w);
      std::reverse(ear.edges.begin(), ear.edges.end());
      std::reverse(ear.interior.begin(), ear.interior.end());
    }
    ears.push_back(std::move(ear));
  }
  std::sort(ears.begin(), ears.end(), [](const Ear& a, const Ear& b) {
    return a.edges < b.edges;
  });
  return ears;
}

struct EarAddition {
  Multigraph graph;      // with the ear attached
  Multigraph base;       // after subdivisions, before the ear edges
  int a = -1, b = -1;    // resolved anchor vertices
  std::vector<int> ear_edges;  // indices of the new path's edges in `graph`
};

// Resolve anchors (second one first, so anchoring twice into the same edge
// puts the second point between the first and the edge's original source),
// then join them by a path with `length` edges.
inline EarAddition add_ear(const Multigraph& g, Anchor first, Anchor second,
                           int length = 1) {
  if (!is_inseparable(g)) throw std::invalid_argument("add_ear: graph must be inseparable");
  if (length < 1) throw std::invalid_argument("add_ear: length must be >= 1");
  auto check_edge = [&](int e) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("add_ear: bad edge anchor");
  };
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("add_ear: bad vertex anchor");
  };
  Multigraph h = g;
  int b = -1, a = -1;
  if (second.kind == Anchor::Kind::edge_interior) {
    check_edge(second.index);
    h = subdivide(h, second.index, 1);
    b = h.n - 1;
  } else {
    check_vertex(second.index);
    b = second.index;
  }
  if (first.kind == Anchor::Kind::edge_interior) {
    check_edge(first.index);  // indices are stable under subdivide
    h = subdivide(h, first.index, 1);
    a = h.n - 1;
  } else {
    check_vertex(first.index);
    a = first.index;
  }
  if (a == b) throw std::invalid_argument("add_ear: anchors resolve to the same vertex");
  EarAddition out;
  out.base = h;
  out.a = a;
  out.b = b;
  int firstv = h.n;
  int k = length - 1;  // internal vertices
  h.n += k;
  for (int i = 0; i < k; ++i)
    h.edges.push_back({i == 0 ? a : firstv + i - 1, firstv + i});
  h.edges.push_back({k == 0 ? a : firstv + k - 1, b});
  for (int i = 0; i < length; ++i) out.ear_edges.push_back(h.m() - length + i);
  out.graph = std::move(h);
  return out;
}

// Remove an ear (edges and interior vertices). Throws if the remainder is
// not inseparable, which happens exactly when the host had only two ears
// besides this one... more precisely, when the deletion leaves a cutpoint
// or disconnects the graph.
inline Multigraph delete_ear(const Multigraph& g, const Ear& ear) {
  std::vector<char> drop_edge(g.m(), 0);
  for (int e : ear.edges) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("delete_ear: bad edge index");
    drop_edge[e] = 1;
  }
  std::vector<char> drop_vertex(g.n, 0);
  for (int v : ear.interior) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("delete_ear: bad interior vertex");
    drop_vertex[v] = 1;
  }
  std::vector<int> relabel(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (!drop_vertex[v]) relabel[v] = next++;
  Multigraph h;
  h.n = next;
  for (int e = 0; e < g.m(); ++e) {
    if (drop_edge[e]) continue;
    int u = relabel[g.edges[e].u], v = relabel[g.edges[e].v];
    if (u < 0 || v < 0)
      throw std::invalid_argument("delete_ear: ear interior touches surviving edges");
    h.edges.push_back({u, v});
  }
  if (!is_inseparable(h))
    throw std::invalid_argument("delete_ear: deletion leaves a separable remainder");
  return h;
}

// Contract an ear: identify all its vertices and drop its edges.
inline Multigraph contract_ear(const Multigraph& g, const Ear& ear) {
  std::vector<char> drop_edge(g.m(), 0);
  for (int e : ear.edges) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("contract_ear: bad edge index");
    drop_edge[e] = 1;
  }
  std::vector<char> merged(g.n, 0);
  merged[ear.u] = merged[ear.w] = 1;
  for (int v : ear.interior) merged[v] = 1;
  // The merged block takes the smallest involved label.
  int target = 0;
  while (target < g.n && !merged[target]) ++target;
  std::vector<int> relabel(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    if (merged[v] && v != target) continue;
    relabel[v] = next++;
  }
  Multigraph h;
  h.n = next;
  for (int e = 0; e < g.m(); ++e) {
    if (drop_edge[e]) continue;
    auto map = [&](int v) { return merged[v] ? relabel[target] : relabel[v]; };
    h.edges.push_back({map(g.edges[e].u), map(g.edges[e].v)});
  }
  return h;
}

// --- One-ear extension profile ------------------------------------------

enum class PlacementKind {
  vertex_vertex,
  vertex_edge,
  same_edge,       // both anchors interior to one edge
  parallel_edges,  // interiors of two parallel edges (distinct ears)
  distinct_edges,  // interiors of two non-parallel edges
};

inline const char* placement_name(PlacementKind k) {
  switch (k) {
    case PlacementKind::vertex_vertex: return "vertex-vertex";
    case PlacementKind::vertex_edge: return "vertex-edge";
    case PlacementKind::same_edge: return "same-edge";
    case PlacementKind::parallel_edges: return "parallel-edges";
    case PlacementKind::distinct_edges: return "distinct-edges";
  }
  return "?";
}

struct PlacementDescriptor {
  PlacementKind kind;
  Anchor first, second;
};

// All structurally distinct one-ear placements on a reduced graph, with
// parallel bundles collapsed to a representative edge.
inline std::vector<PlacementDescriptor> enumerate_placements(const Multigraph& g,
                                                             bool edge_anchors_only = false) {
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  for (int e = 0; e < g.m(); ++e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    bundles[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  std::vector<std::vector<int>> blist;
  blist.reserve(bundles.size());
  for (auto& [key, es] : bundles) blist.push_back(es);
  std::vector<PlacementDescriptor> out;
  if (!edge_anchors_only) {
    for (int v = 0; v < g.n; ++v)
      for (int w = v + 1; w < g.n; ++w)
        out.push_back({PlacementKind::vertex_vertex, Anchor::at_vertex(v),
                       Anchor::at_vertex(w)});
    for (int v = 0; v < g.n; ++v)
      for (const auto& es : blist)
        out.push_back({PlacementKind::vertex_edge, Anchor::at_vertex(v),
                       Anchor::inside_edge(es[0])});
  }
  for (const auto& es : blist) {
    out.push_back({PlacementKind::same_edge, Anchor::inside_edge(es[0]),
                   Anchor::inside_edge(es[0])});
    if (es.size() >= 2)
      out.push_back({PlacementKind::parallel_edges, Anchor::inside_edge(es[0]),
                     Anchor::inside_edge(es[1])});
  }
  for (std::size_t i = 0; i < blist.size(); ++i)
    for (std::size_t j = i + 1; j < blist.size(); ++j)
      out.push_back({PlacementKind::distinct_edges, Anchor::inside_edge(blist[i][0]),
                     Anchor::inside_edge(blist[j][0])});
  return out;
}

struct ExtensionClass {
  CanonicalCode code;       // of the reduced extension
  Multigraph representative;  // reduced, canonically labeled
  long long count = 0;
  std::vector<PlacementKind> reached_by;
};

// Every reduced isomorphism class reachable from g by adding one ear, with
// its cycle count. Sorted by (count, code). g must be reduced, inseparable
// and not the cycle class.
inline std::vector<ExtensionClass> ear_extension_profile(const Multigraph& g,
                                                         int canon_max_n = 18) {
  if (!is_reduced(g))
    throw std::invalid_argument("ear_extension_profile: graph must be reduced");
  long long base = count_cycles(g);
  std::map<CanonicalCode, ExtensionClass> classes;
  for (const PlacementDescriptor& p : enumerate_placements(g)) {
    EarAddition ext = add_ear(g, p.first, p.second, 1);
    long long grown = base + count_st_paths(ext.base, ext.a, ext.b);
    ReducedClass rc = reduce(ext.graph);
    CanonicalForm f = canonical_form(rc.graph, canon_max_n);
    auto it = classes.find(f.code);
    if (it == classes.end()) {
      ExtensionClass c;
      c.code = f.code;
      c.representative = canonical_relabel(rc.graph, f);
      c.count = grown;
      c.reached_by = {p.kind};
      classes.emplace(f.code, std::move(c));
    } else {
      if (it->second.count != grown)
        throw std::logic_error("ear_extension_profile: count mismatch within a class");
      auto& kinds = it->second.reached_by;
      if (std::find(kinds.begin(), kinds.end(), p.kind) == kinds.end())
        kinds.push_back(p.kind);
    }
  }
  std::vector<ExtensionClass> out;
  out.reserve(classes.size());
  for (auto& [code, c] : classes) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const ExtensionClass& x, const ExtensionClass& y) {
    return x.count != y.count ? x.count < y.count : x.code < y.code;
  });
  return out;
}

// Extremality structure of a one-ear profile:
//  (a) the maximum cycle count is attained with both anchors interior to
//      different ears,
//  (b) the minimum is attained at a vertex-vertex placement,
//  (c) a same-edge placement matches some vertex-vertex placement's count
//      (sliding the anchors to the ear's endpoints changes nothing).
// Used by the lemma-level verification.
inline bool extension_extremes_consistent(const std::vector<ExtensionClass>& profile) {
  if (profile.empty()) return false;
  long long lo = profile.front().count, hi = profile.back().count;
  auto reached = [](const ExtensionClass& c, PlacementKind k) {
    return std::find(c.reached_by.begin(), c.reached_by.end(), k) != c.reached_by.end();
  };
  bool max_ok = false, min_ok = false;
  for (const auto& c : profile) {
    if (c.count == hi && (reached(c, PlacementKind::distinct_edges) ||
                          reached(c, PlacementKind::parallel_edges)))
      max_ok = true;
    if (c.count == lo && reached(c, PlacementKind::vertex_vertex)) min_ok = true;
  }
  if (!max_ok || !min_ok) return false;
  // (c): every count reached by a same-edge placement is also reached by a
  // vertex-vertex placement.
  for (const auto& c : profile) {
    if (!reached(c, PlacementKind::same_edge)) continue;
    bool matched = false;
    for (const auto& d : profile)
      if (d.count == c.count && reached(d, PlacementKind::vertex_vertex)) matched = true;
    if (!matched) return false;
  }
  return true;
}

}  // namespace cyclecount
