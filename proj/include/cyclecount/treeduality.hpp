#pragma once

// The tree <-> outerplanar correspondence: every tree T maps to a reduced
// outerplanar multigraph whose bounded faces are in bijection with T's
// vertices (the inner dual of the construction is T again), and whose
// cycles are in bijection with T's subtrees - take a subtree, XOR the edge
// sets of its faces, get a cycle. In particular the cycle count equals the
// subtree count, which transports the subtree-count spectrum of trees into
// cycle counts of planar cubic graphs.
//
// Construction: start with a digon (the face of the root). To attach a tree
// leaf at v, pick an outer edge of v's face, subdivide it twice, and join
// the two new vertices by a chord; the digon strip between the chord and the
// middle outer edge is the new vertex's face.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclecount/cycles.hpp"
#include "cyclecount/multigraph.hpp"

namespace cyclecount {

// A tree is a multigraph that is connected and acyclic (so m = n - 1, no
// loops, no parallel edges). Kept as a separate type to make intent clear.
struct Tree {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
};

inline bool is_tree(const Multigraph& g) {
  if (g.n == 0 || g.m() != g.n - 1) return false;
  for (const Edge& e : g.edges)
    if (e.u == e.v) return false;
  return is_connected(g);
}

inline Tree as_tree(const Multigraph& g) {
  if (!is_tree(g)) throw std::invalid_argument("as_tree: not a tree");
  return Tree{g.n, g.edges};
}

inline Multigraph tree_as_multigraph(const Tree& t) { return Multigraph{t.n, t.edges}; }

inline std::vector<std::vector<int>> tree_adjacency(const Tree& t) {
  std::vector<std::vector<int>> adj(t.n);
  for (const Edge& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Number of nonempty subtrees (connected vertex subsets). Rooted DP:
// g(v) = prod over children (1 + g(child)); a subtree is counted at its
// vertex closest to the root.
inline long long count_subtrees(const Tree& t) {
  if (t.n == 0) throw std::invalid_argument("count_subtrees: empty tree");
  auto adj = tree_adjacency(t);
  std::vector<long long> g(t.n, 0);
  std::vector<int> order, parent(t.n, -1);
  order.reserve(t.n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : adj[v])
      if (w != parent[v]) {
        parent[w] = v;
        order.push_back(w);
      }
  }
  long long total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    long long prod = 1;
    for (int w : adj[v])
      if (w != parent[v]) prod *= 1 + g[w];
    g[v] = prod;
    total += prod;
  }
  return total;
}

// All subtrees as sorted vertex lists. Exponential in general; bounded.
inline std::vector<std::vector<int>> enumerate_subtrees(const Tree& t, int max_n = 20) {
  if (t.n > max_n) throw std::invalid_argument("enumerate_subtrees: size bound exceeded");
  auto adj = tree_adjacency(t);
  std::vector<std::vector<int>> out;
  // Subtrees whose minimum vertex is r: grow within {v >= r}, rooted at r.
  for (int r = 0; r < t.n; ++r) {
    // f(v) = list of connected sets containing v inside its subtree (when
    // the component of allowed vertices containing r is rooted at r).
    std::vector<int> parent(t.n, -2);
    std::vector<int> order;
    parent[r] = -1;
    order.push_back(r);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (int w : adj[v])
        if (w > r && parent[w] == -2) {
          parent[w] = v;
          order.push_back(w);
        }
    }
    std::vector<std::vector<std::vector<int>>> sets(t.n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      std::vector<std::vector<int>> acc = {{v}};
      for (int w : adj[v]) {
        if (w == parent[v] || !(w > r) || parent[w] != v) continue;
        std::vector<std::vector<int>> grown;
        for (const auto& base : acc) {
          grown.push_back(base);  // skip child w
          for (const auto& sub : sets[w]) {
            std::vector<int> ext = base;
            ext.insert(ext.end(), sub.begin(), sub.end());
            grown.push_back(std::move(ext));
          }
        }
        acc = std::move(grown);
      }
      sets[v] = std::move(acc);
    }
    for (auto& s : sets[r]) {
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Outerplanar graphs with non-crossing chords ---------------------------

// Vertices 0..L-1 in circular order; outer edge i joins i and i+1 mod L and
// has edge index i; chords follow in listed order.
struct OuterplanarGraph {
  int outer = 0;  // L
  std::vector<std::pair<int, int>> chords;
};

inline Multigraph outerplanar_as_multigraph(const OuterplanarGraph& g) {
  Multigraph h;
  h.n = g.outer;
  for (int i = 0; i < g.outer; ++i) h.edges.push_back({i, (i + 1) % g.outer});
  for (auto [a, b] : g.chords) h.edges.push_back({a, b});
  return h;
}

// face -> bounded-face boundary (edge indices into outerplanar_as_multigraph)
// and face -> tree vertex.
struct FaceMap {
  std::vector<std::vector<int>> face_edges;
  std::vector<int> face_to_tree;

  std::vector<int> tree_to_face() const {
    int n = static_cast<int>(face_to_tree.size());
    std::vector<int> inv(n, -1);
    for (int f = 0; f < n; ++f) inv[face_to_tree[f]] = f;
    return inv;
  }
};

namespace detail {

// Construction state: the outer boundary as a sequence of node handles and
// edge handles; faces hold sets of handles (outer-edge handles or chord
// handles). Handles are stable across splits.
struct OuterBuilder {
  std::vector<int> boundary_nodes;           // circular sequence of node ids
  std::vector<int> boundary_edges;           // handle of edge after node i
  int next_node = 0, next_edge = 0;
  std::vector<std::pair<int, int>> chords;   // chord handle -> (node, node)
  std::vector<std::vector<int>> faces;       // face -> handle list
  std::vector<int> chord_handles;            // handles that are chords

  int fresh_node() { return next_node++; }
  int fresh_edge() { return next_edge++; }
};

}  // namespace detail

// Build the outerplanar companion of t. Faces are indexed by tree vertex
// order of attachment (root face = tree vertex 0... see face_to_tree).
inline std::pair<OuterplanarGraph, FaceMap> tree_to_outerplanar(const Tree& t) {
  if (t.n < 2)
    throw std::invalid_argument(
        "tree_to_outerplanar: need at least two vertices (the companion of "
        "a single vertex degenerates to the loop class)");
  auto adj = tree_adjacency(t);
  // BFS attachment order from vertex 0; every non-root vertex is attached
  // as a leaf at its parent.
  std::vector<int> order, parent(t.n, -1);
  std::vector<char> seenv(t.n, 0);
  order.push_back(0);
  seenv[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : adj[v])
      if (!seenv[w]) {
        seenv[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
  }
  detail::OuterBuilder b;
  // Initial digon for the root's face.
  int n0 = b.fresh_node(), n1 = b.fresh_node();
  int e0 = b.fresh_edge(), e1 = b.fresh_edge();
  b.boundary_nodes = {n0, n1};
  b.boundary_edges = {e0, e1};
  std::vector<int> face_of_tree(t.n, -1);
  b.faces.push_back({e0, e1});
  face_of_tree[0] = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    int w = order[i];
    int fv = face_of_tree[parent[w]];
    // The face's outer-edge handle with the smallest id, for determinism.
    int handle = -1;
    for (int h : b.faces[fv]) {
      bool is_chord = std::find(b.chord_handles.begin(), b.chord_handles.end(), h) !=
                      b.chord_handles.end();
      if (!is_chord && (handle < 0 || h < handle)) handle = h;
    }
    if (handle < 0) throw std::logic_error("tree_to_outerplanar: face lost its outer edges");
    int pos = -1;
    for (int j = 0; j < static_cast<int>(b.boundary_edges.size()); ++j)
      if (b.boundary_edges[j] == handle) pos = j;
    // Split boundary edge at `pos` (joining node[pos] to node[pos+1]) into
    // three edges through two fresh nodes, chord across the middle.
    int p = b.fresh_node(), q = b.fresh_node();
    int h1 = b.fresh_edge(), h2 = b.fresh_edge(), h3 = b.fresh_edge();
    int chord = b.fresh_edge();
    b.chords.push_back({p, q});
    b.chord_handles.push_back(chord);
    b.boundary_nodes.insert(b.boundary_nodes.begin() + pos + 1, {p, q});
    b.boundary_edges[pos] = h1;
    b.boundary_edges.insert(b.boundary_edges.begin() + pos + 1, {h2, h3});
    // Parent face swaps the split handle for the two flanking edges plus the
    // chord; the new face is the digon strip (middle edge + chord).
    auto& pf = b.faces[fv];
    pf.erase(std::remove(pf.begin(), pf.end(), handle), pf.end());
    pf.push_back(h1);
    pf.push_back(h3);
    pf.push_back(chord);
    b.faces.push_back({h2, chord});
    face_of_tree[w] = static_cast<int>(b.faces.size()) - 1;
  }
  // Flatten: relabel nodes by boundary position, edges by final convention
  // (outer edges first in circular order, then chords in creation order).
  const int L = static_cast<int>(b.boundary_nodes.size());
  std::vector<int> node_pos(b.next_node, -1);
  for (int i = 0; i < L; ++i) node_pos[b.boundary_nodes[i]] = i;
  OuterplanarGraph op;
  op.outer = L;
  for (auto [x, y] : b.chords) op.chords.push_back({node_pos[x], node_pos[y]});
  std::vector<int> handle_to_edge(b.next_edge, -1);
  for (int i = 0; i < L; ++i) handle_to_edge[b.boundary_edges[i]] = i;
  for (std::size_t c = 0; c < b.chord_handles.size(); ++c)
    handle_to_edge[b.chord_handles[c]] = L + static_cast<int>(c);
  FaceMap fm;
  fm.face_edges.resize(b.faces.size());
  fm.face_to_tree.resize(b.faces.size());
  for (std::size_t f = 0; f < b.faces.size(); ++f) {
    for (int h : b.faces[f]) fm.face_edges[f].push_back(handle_to_edge[h]);
    std::sort(fm.face_edges[f].begin(), fm.face_edges[f].end());
  }
  for (int v = 0; v < t.n; ++v) fm.face_to_tree[face_of_tree[v]] = v;
  return {op, fm};
}

// Inner dual of an outerplanar graph with non-crossing chords: one vertex
// per bounded face, edges between faces sharing a chord. Errors on crossing
// or endpoint-sharing chords. Returns the dual tree with vertex f = face f,
// faces ordered root-face first then chords in listed order, plus the face
// boundaries in outerplanar_as_multigraph edge indices.
inline std::pair<Tree, FaceMap> inner_dual_faces(const OuterplanarGraph& g) {
  const int L = g.outer;
  if (L < 2) throw std::invalid_argument("inner_dual: outer cycle too short");
  const int k = static_cast<int>(g.chords.size());
  // Validate and normalize chords to intervals [a, b), a < b.
  std::vector<std::pair<int, int>> iv(k);
  std::vector<char> endpoint(L, 0);
  for (int c = 0; c < k; ++c) {
    auto [x, y] = g.chords[c];
    if (x < 0 || y < 0 || x >= L || y >= L || x == y)
      throw std::invalid_argument("inner_dual: bad chord");
    if (endpoint[x] || endpoint[y])
      throw std::invalid_argument("inner_dual: chords share an endpoint");
    endpoint[x] = endpoint[y] = 1;
    // Normalized interval; the chord's face lies on the [min, max] side.
    // A chord between adjacent positions is fine: it closes a digon face
    // with the outer edge it parallels.
    iv[c] = {std::min(x, y), std::max(x, y)};
  }
  for (int c = 0; c < k; ++c)
    for (int d = c + 1; d < k; ++d) {
      auto [a, b] = iv[c];
      auto [x, y] = iv[d];
      bool x_in = a < x && x < b, y_in = a < y && y < b;
      if (x_in != y_in) throw std::invalid_argument("inner_dual: chords cross");
    }
  // Containment forest: parent of chord c = tightest chord strictly
  // containing it; chords not contained in any other hang off the root face.
  // Face of chord c = region between c and its direct children.
  std::vector<int> parent(k, -1);
  for (int c = 0; c < k; ++c) {
    int best = -1;
    for (int d = 0; d < k; ++d) {
      if (d == c) continue;
      if (iv[d].first < iv[c].first && iv[c].second < iv[d].second) {
        if (best < 0 || (iv[best].first < iv[d].first)) best = d;
      }
    }
    parent[c] = best;
  }
  // Outer-edge ownership: outer edge i (from i to i+1) belongs to the
  // tightest chord interval containing [i, i+1]; otherwise the root face.
  // Wrap edge L-1 always belongs to the root face (intervals never wrap).
  // Tightest chord interval containing [i, i+1]; unique because containing
  // chords form a nested chain (non-crossing, no shared endpoints).
  auto owner_of_outer = [&](int i) {
    int best = -1;
    for (int c = 0; c < k; ++c)
      if (iv[c].first <= i && i + 1 <= iv[c].second)
        if (best < 0 ||
            iv[c].second - iv[c].first < iv[best].second - iv[best].first)
          best = c;
    return best;  // -1 = root face
  };
  FaceMap fm;
  const int faces = k + 1;  // root face + one per chord
  fm.face_edges.assign(faces, {});
  fm.face_to_tree.resize(faces);
  auto face_of_chord = [&](int c) { return c + 1; };
  for (int i = 0; i < L; ++i) {
    int c = owner_of_outer(i);
    fm.face_edges[c < 0 ? 0 : face_of_chord(c)].push_back(i);
  }
  for (int c = 0; c < k; ++c) {
    fm.face_edges[face_of_chord(c)].push_back(L + c);  // own chord
    fm.face_edges[parent[c] < 0 ? 0 : face_of_chord(parent[c])].push_back(L + c);
  }
  for (auto& fe : fm.face_edges) std::sort(fe.begin(), fe.end());
  Tree dual;
  dual.n = faces;
  for (int c = 0; c < k; ++c)
    dual.edges.push_back({parent[c] < 0 ? 0 : face_of_chord(parent[c]), face_of_chord(c)});
  for (int f = 0; f < faces; ++f) fm.face_to_tree[f] = f;
  // Sanity: every face of an outerplanar graph built from a tree is bounded
  // by >= 2 edges and the boundaries cover outer edges once, chords twice.
  for (const auto& fe : fm.face_edges)
    if (fe.size() < 2) throw std::logic_error("inner_dual: degenerate face");
  return {dual, fm};
}

inline Tree inner_dual(const OuterplanarGraph& g) { return inner_dual_faces(g).first; }

// Symmetric difference of the face boundaries of a connected set of faces.
// `faces` lists face indices of fm; the result is an edge set of
// outerplanar_as_multigraph(g).
inline std::vector<int> faces_to_cycle(const FaceMap& fm, const std::vector<int>& faces) {
  std::map<int, int> parity;
  for (int f : faces) {
    if (f < 0 || f >= static_cast<int>(fm.face_edges.size()))
      throw std::invalid_argument("faces_to_cycle: bad face index");
    for (int e : fm.face_edges[f]) parity[e] ^= 1;
  }
  std::vector<int> out;
  for (auto [e, p] : parity)
    if (p) out.push_back(e);
  return out;
}

// Full check of the correspondence for one tree: the construction's inner
// dual is the tree again (same face map), subtree count equals cycle count,
// and XOR-ing each subtree's faces yields pairwise distinct cycles that
// exhaust the cycle set.
inline bool verify_bijection(const Tree& t, int max_n = 10) {
  if (t.n > max_n) throw std::invalid_argument("verify_bijection: size bound exceeded");
  auto [op, fm] = tree_to_outerplanar(t);
  Multigraph mg = outerplanar_as_multigraph(op);
  // The construction's own face map must agree with the dual recomputed
  // from the flat outerplanar description.
  auto [dual, fm2] = inner_dual_faces(op);
  {
    // Same boundary multiset keyed by tree vertex: match faces by edge set.
    std::set<std::vector<int>> a(fm.face_edges.begin(), fm.face_edges.end());
    std::set<std::vector<int>> b(fm2.face_edges.begin(), fm2.face_edges.end());
    if (a != b) return false;
  }
  // dual (on faces) relabeled by fm's tree assignment must equal t.
  {
    // face f of fm2 corresponds to the fm face with the same edge set.
    std::map<std::vector<int>, int> by_edges;
    for (int f = 0; f < static_cast<int>(fm.face_edges.size()); ++f)
      by_edges[fm.face_edges[f]] = f;
    std::set<std::pair<int, int>> want, got;
    for (const Edge& e : t.edges)
      want.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    for (const Edge& e : dual.edges) {
      int fu = by_edges.at(fm2.face_edges[e.u]);
      int fv = by_edges.at(fm2.face_edges[e.v]);
      int tu = fm.face_to_tree[fu], tv = fm.face_to_tree[fv];
      got.insert({std::min(tu, tv), std::max(tu, tv)});
    }
    if (want != got) return false;
  }
  long long subtrees = count_subtrees(t);
  long long cycles = count_cycles(mg);
  if (subtrees != cycles) return false;
  auto t2f = fm.tree_to_face();
  std::set<std::vector<int>> seen;
  for (const auto& sub : enumerate_subtrees(t, max_n)) {
    std::vector<int> faces;
    faces.reserve(sub.size());
    for (int v : sub) faces.push_back(t2f[v]);
    std::vector<int> cyc = faces_to_cycle(fm, faces);
    if (!is_cycle_edge_set(mg, cyc)) return false;
    if (!seen.insert(cyc).second) return false;  // collision = not injective
  }
  return static_cast<long long>(seen.size()) == cycles;
}

// --- Free tree enumeration and the subtree-count spectrum ------------------

// Canonical parenthesized form (AHU) rooted at the tree's center; two-center
// trees take the lexicographically smaller combination over the central edge.
inline std::string tree_canonical_string(const Tree& t) {
  if (t.n == 1) return "()";
  auto adj = tree_adjacency(t);
  // Peel leaves to find the center(s).
  std::vector<int> deg(t.n), layer(t.n, 0);
  for (int v = 0; v < t.n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<int> queue;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] <= 1) queue.push_back(v);
  std::vector<char> removed(t.n, 0);
  int remaining = t.n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : queue) {
      removed[v] = 1;
      --remaining;
      for (int w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    queue = std::move(next);
  }
  std::vector<int> cs;
  for (int v = 0; v < t.n; ++v)
    if (!removed[v]) cs.push_back(v);
  auto encode = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int w : adj[v])
      if (w != parent) kids.push_back(self(self, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& kid : kids) s += kid;
    s += ")";
    return s;
  };
  if (cs.size() == 1) return encode(encode, cs[0], -1);
  std::string a = encode(encode, cs[0], cs[1]);
  std::string b = encode(encode, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return "(" + a + b + ")";  // virtual root on the central edge
}

namespace detail {

// Beyer-Hedetniemi: canonical level sequences of rooted trees on n vertices.
// seq[0] = 1 (root); successor: find the last entry > 2, decrement it, and
// tile the tail from the pattern starting at its nearest left sibling level.
inline bool next_level_sequence(std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (s[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (s[i] == s[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
  return true;
}

inline Tree tree_from_levels(const std::vector<int>& s) {
  Tree t;
  t.n = static_cast<int>(s.size());
  std::vector<int> stack;  // stack[d-1] = current vertex at depth d
  for (int i = 0; i < t.n; ++i) {
    int d = s[i];
    stack.resize(d);
    stack[d - 1] = i;
    if (d > 1) t.edges.push_back({stack[d - 2], i});
  }
  return t;
}

}  // namespace detail

// Isomorph-free free trees on n vertices, ordered by canonical string.
inline std::vector<Tree> all_trees(int n, int max_n = 16) {
  if (n < 1 || n > max_n) throw std::invalid_argument("all_trees: size out of range");
  if (n == 1) return {Tree{1, {}}};
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  std::map<std::string, Tree> found;
  for (;;) {
    Tree t = detail::tree_from_levels(s);
    std::string key = tree_canonical_string(t);
    found.emplace(key, std::move(t));
    if (!detail::next_level_sequence(s)) break;
  }
  std::vector<Tree> out;
  out.reserve(found.size());
  for (auto& [k, t] : found) out.push_back(std::move(t));
  return out;
}

struct SpectrumEntry {
  long long count = 0;
  int order = 0;         // witness tree size
  Tree witness;          // first witness in (order, canonical string) order
};

// All subtree counts attained by trees with at most max_n vertices, with a
// minimal witness each. Also reports, per order, the minimum count attained
// (which should be n(n+1)/2, the path).
struct SpectrumResult {
  std::vector<SpectrumEntry> entries;            // sorted by count
  std::vector<long long> min_count_by_order;     // [i] = min over trees on i+1 vertices
  std::vector<long long> trees_by_order;         // [i] = number of free trees on i+1 vertices
};

inline SpectrumResult subtree_count_spectrum(int max_n) {
  if (max_n < 1 || max_n > 16)
    throw std::invalid_argument("subtree_count_spectrum: order bound out of range");
  SpectrumResult res;
  std::map<long long, SpectrumEntry> best;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Tree> trees = all_trees(n);
    res.trees_by_order.push_back(static_cast<long long>(trees.size()));
    long long mn = -1;
    for (Tree& t : trees) {
      long long c = count_subtrees(t);
      if (mn < 0 || c < mn) mn = c;
      if (!best.count(c)) best[c] = {c, n, std::move(t)};
    }
    res.min_count_by_order.push_back(mn);
  }
  res.entries.reserve(best.size());
  for (auto& [c, e] : best) res.entries.push_back(std::move(e));
  return res;
}

}  // namespace cyclecount
