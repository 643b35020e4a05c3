#pragma once

// Labeled multigraphs with loops and parallel edges, plus the structural
// operations everything else builds on: MGF text format, subdivision,
// deletion/contraction, inseparability, and reduction (suppression of
// divalent vertices down to the homeomorphism-class representative).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclecount {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Vertices are 0..n-1. An edge with u == v is a loop. Parallel edges are
// distinct entries; edge order defines edge indices and nothing else.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }

  bool is_loop(int e) const { return edges[e].u == edges[e].v; }

  std::vector<int> degrees() const {
    std::vector<int> d(n, 0);
    for (const Edge& e : edges) {
      d[e.u] += 1;
      d[e.v] += 1;  // a loop contributes 2 to its vertex
    }
    return d;
  }

  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges) {
      if (e.u == v) ++d;
      if (e.v == v) ++d;
    }
    return d;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

// Parse/serialize errors carry the 1-based line number of the offending line.
class mgf_error : public std::runtime_error {
 public:
  mgf_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

// Accepts exactly "<digits> <digits>" with one separating space.
inline bool parse_uint_pair(std::string_view s, long long& a, long long& b) {
  std::size_t i = 0;
  auto digits = [&](long long& out) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9') return false;
    long long val = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      val = val * 10 + (s[i] - '0');
      if (val > std::numeric_limits<int>::max()) return false;
      ++i;
    }
    out = val;
    return true;
  };
  if (!digits(a)) return false;
  if (i >= s.size() || s[i] != ' ') return false;
  ++i;
  if (!digits(b)) return false;
  return i == s.size();
}

}  // namespace detail

// MGF: optional '#' comment lines, a "n m" header line, then exactly m lines
// "u v" (0-based endpoints; u == v is a loop; repeated lines are parallel
// edges). The final line must end with a newline.
inline Multigraph parse_mgf(std::string_view text) {
  int lineno = 0;
  if (text.empty()) throw mgf_error(1, "empty input, expected \"n m\" header");
  if (text.back() != '\n') {
    int lines = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
    throw mgf_error(lines, "missing trailing newline");
  }
  Multigraph g;
  bool have_header = false;
  long long n = 0, m = 0, seen = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (!have_header) {
      if (!detail::parse_uint_pair(line, n, m))
        throw mgf_error(lineno, "malformed header, expected \"n m\"");
      g.n = static_cast<int>(n);
      g.edges.reserve(static_cast<std::size_t>(m));
      have_header = true;
      continue;
    }
    if (seen == m)
      throw mgf_error(lineno, "edge count mismatch: more than " +
                                  std::to_string(m) + " edge lines");
    long long u = 0, v = 0;
    if (!detail::parse_uint_pair(line, u, v))
      throw mgf_error(lineno, "malformed edge line, expected \"u v\"");
    if (u >= n || v >= n)
      throw mgf_error(lineno, "endpoint out of range for n=" + std::to_string(n));
    g.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    ++seen;
  }
  if (!have_header) throw mgf_error(lineno, "missing \"n m\" header");
  if (seen != m)
    throw mgf_error(lineno, "edge count mismatch: header says " +
                                std::to_string(m) + ", found " +
                                std::to_string(seen));
  return g;
}

inline std::string to_mgf(const Multigraph& g) {
  std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline std::string to_dot(const Multigraph& g) {
  std::string out = "graph G {\n";
  std::vector<char> touched(g.n, 0);
  for (const Edge& e : g.edges) touched[e.u] = touched[e.v] = 1;
  for (int v = 0; v < g.n; ++v)
    if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges)
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

// Per-vertex incidence over non-loop edges: (edge index, other endpoint).
// Loops are tracked separately since no path or cycle walk traverses them.
struct AdjView {
  std::vector<std::vector<std::pair<int, int>>> inc;
  std::vector<std::vector<int>> loops;

  explicit AdjView(const Multigraph& g) : inc(g.n), loops(g.n) {
    for (int e = 0; e < g.m(); ++e) {
      int u = g.edges[e].u, v = g.edges[e].v;
      if (u == v) {
        loops[u].push_back(e);
      } else {
        inc[u].push_back({e, v});
        inc[v].push_back({e, u});
      }
    }
  }
};

inline bool is_connected(const Multigraph& g) {
  if (g.n == 0) return false;
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    if (e.u != e.v) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n;
}

namespace detail {

// Connectivity of g - skip, over non-loop edges. Assumes n >= 2.
inline bool connected_without(const Multigraph& g, int skip) {
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    if (e.u == e.v || e.u == skip || e.v == skip) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int start = skip == 0 ? 1 : 0;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n - 1;
}

}  // namespace detail

// Inseparable: connected, and no cutpoint. The single vertex with one loop
// qualifies; a vertex carrying a loop plus any other incidence is a cutpoint,
// so any larger graph with a loop is separable. A lone bridge (n=2, m=1) is
// separable; parallel bundles on two vertices are not.
inline bool is_inseparable(const Multigraph& g) {
  if (g.n == 0 || !is_connected(g)) return false;
  if (g.n == 1) return g.m() == 1;  // exactly one loop
  for (const Edge& e : g.edges)
    if (e.u == e.v) return false;
  if (g.m() < 2) return false;
  if (g.n == 2) return true;
  for (int v = 0; v < g.n; ++v)
    if (!detail::connected_without(g, v)) return false;
  return true;
}

inline bool is_cubic(const Multigraph& g) {
  if (g.n == 0) return false;
  for (int d : g.degrees())
    if (d != 3) return false;
  return true;
}

// Replace edge e by a path through k fresh vertices (appended at the end,
// in path order). Subdividing a loop once yields a parallel pair.
inline Multigraph subdivide(const Multigraph& g, int e, int k = 1) {
  if (e < 0 || e >= g.m()) throw std::invalid_argument("subdivide: bad edge index");
  if (k < 1) throw std::invalid_argument("subdivide: need k >= 1");
  Multigraph h = g;
  int u = h.edges[e].u, w = h.edges[e].v;
  int first = h.n;
  h.n += k;
  h.edges[e] = {u, first};
  for (int i = 1; i < k; ++i) h.edges.push_back({first + i - 1, first + i});
  h.edges.push_back({first + k - 1, w});
  return h;
}

// Removes the edge; indices of later edges shift down by one.
inline Multigraph delete_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.m()) throw std::invalid_argument("delete_edge: bad edge index");
  Multigraph h = g;
  h.edges.erase(h.edges.begin() + e);
  return h;
}

// Contract edge e: identify its endpoints (a loop contracts to deletion).
// The merged vertex keeps the smaller label; labels above the removed one
// shift down. A parallel mate of e becomes a loop.
inline Multigraph contract_edge(const Multigraph& g, int e) {
  if (e < 0 || e >= g.m()) throw std::invalid_argument("contract_edge: bad edge index");
  if (g.is_loop(e)) return delete_edge(g, e);
  int a = std::min(g.edges[e].u, g.edges[e].v);
  int b = std::max(g.edges[e].u, g.edges[e].v);
  Multigraph h;
  h.n = g.n - 1;
  h.edges.reserve(g.edges.size() - 1);
  auto relabel = [&](int v) {
    if (v == b) return a;
    return v > b ? v - 1 : v;
  };
  for (int i = 0; i < g.m(); ++i) {
    if (i == e) continue;
    h.edges.push_back({relabel(g.edges[i].u), relabel(g.edges[i].v)});
  }
  return h;
}

// perm[old] = new label.
inline Multigraph permute_vertices(const Multigraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw std::invalid_argument("permute_vertices: permutation size mismatch");
  std::vector<char> hit(g.n, 0);
  for (int p : perm) {
    if (p < 0 || p >= g.n || hit[p])
      throw std::invalid_argument("permute_vertices: not a permutation");
    hit[p] = 1;
  }
  Multigraph h;
  h.n = g.n;
  h.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) h.edges.push_back({perm[e.u], perm[e.v]});
  return h;
}

inline bool is_reduced(const Multigraph& g) {
  if (g.n == 1) return true;  // loop class or a loose vertex
  for (int d : g.degrees())
    if (d < 3) return false;
  return true;
}

struct ReducedClass {
  Multigraph graph;
  int suppressed = 0;  // number of divalent vertices removed
};

namespace detail {

struct WorkEdge {
  int u, v;
  bool alive;
  std::vector<int> origins;  // original edge indices, when tracking
};

}  // namespace detail

// Suppress divalent vertices until none remain (or only the single-vertex
// loop class is left). The input must be connected. With edge_origins
// non-null, [i] receives the original edge indices merged into output edge i.
inline ReducedClass reduce_tracked(const Multigraph& g,
                                   std::vector<std::vector<int>>* edge_origins) {
  if (!is_connected(g)) throw std::invalid_argument("reduce: graph must be connected");
  std::vector<detail::WorkEdge> es;
  es.reserve(g.edges.size());
  for (int i = 0; i < g.m(); ++i) {
    detail::WorkEdge we{g.edges[i].u, g.edges[i].v, true, {}};
    if (edge_origins) we.origins = {i};
    es.push_back(std::move(we));
  }
  std::vector<char> alive(g.n, 1);
  int n_alive = g.n;
  std::vector<int> deg(g.n, 0);
  for (const auto& e : es) {
    deg[e.u] += 1;
    deg[e.v] += 1;
  }
  int suppressed = 0;
  for (;;) {
    if (n_alive == 1) break;
    int v = -1;
    for (int i = 0; i < g.n; ++i)
      if (alive[i] && deg[i] == 2) {
        v = i;
        break;
      }
    if (v < 0) break;
    // Find the two live incidences at v. A loop at v would make v's whole
    // degree loop-borne, impossible here: the graph is connected with more
    // than one live vertex.
    int e1 = -1, e2 = -1;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
      if (!es[i].alive) continue;
      if (es[i].u == v || es[i].v == v) {
        if (es[i].u == v && es[i].v == v)
          throw std::logic_error("reduce: loop at divalent vertex");
        (e1 < 0 ? e1 : e2) = i;
        if (e2 >= 0) break;
      }
    }
    int a = es[e1].u == v ? es[e1].v : es[e1].u;
    int b = es[e2].u == v ? es[e2].v : es[e2].u;
    // Merge e2 into e1 as a single a-b edge (possibly a loop when a == b).
    if (edge_origins) {
      es[e1].origins.insert(es[e1].origins.end(), es[e2].origins.begin(),
                            es[e2].origins.end());
    }
    es[e1].u = a;
    es[e1].v = b;
    es[e2].alive = false;
    alive[v] = 0;
    --n_alive;
    ++suppressed;
    deg[v] = 0;  // a and b keep their degrees: one incidence lost, one gained
  }
  std::vector<int> newlabel(g.n, -1);
  int next = 0;
  for (int i = 0; i < g.n; ++i)
    if (alive[i]) newlabel[i] = next++;
  ReducedClass out;
  out.graph.n = next;
  out.suppressed = suppressed;
  if (edge_origins) edge_origins->clear();
  for (const auto& e : es) {
    if (!e.alive) continue;
    out.graph.edges.push_back({newlabel[e.u], newlabel[e.v]});
    if (edge_origins) edge_origins->push_back(e.origins);
  }
  return out;
}

inline ReducedClass reduce(const Multigraph& g) { return reduce_tracked(g, nullptr); }

// Hamiltonian cycle existence. Bitmask DFS on the underlying simple graph;
// multigraph conventions: the loop class is Hamiltonian, two vertices need a
// parallel pair.
inline bool is_hamiltonian(const Multigraph& g, int max_n = 24) {
  if (g.n > max_n) throw std::invalid_argument("is_hamiltonian: size bound exceeded");
  if (g.n == 0) return false;
  if (!is_connected(g)) return false;
  if (g.n == 1) {
    for (const Edge& e : g.edges)
      if (e.u == e.v) return true;
    return false;
  }
  if (g.n == 2) {
    int par = 0;
    for (const Edge& e : g.edges)
      if (e.u != e.v) ++par;
    return par >= 2;
  }
  std::vector<std::uint64_t> adj(g.n, 0);
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    adj[e.u] |= std::uint64_t(1) << e.v;
    adj[e.v] |= std::uint64_t(1) << e.u;
  }
  for (int v = 0; v < g.n; ++v)
    if (adj[v] == 0) return false;
  const std::uint64_t full = (std::uint64_t(1) << g.n) - 1;
  // Path starts at 0; closes when all vertices are used and 0 is adjacent.
  std::vector<std::pair<int, std::uint64_t>> stack;
  stack.push_back({0, std::uint64_t(1)});
  while (!stack.empty()) {
    auto [cur, used] = stack.back();
    stack.pop_back();
    if (used == full) {
      if (adj[cur] & 1) return true;
      continue;
    }
    std::uint64_t cand = adj[cur] & ~used;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      stack.push_back({w, used | (std::uint64_t(1) << w)});
    }
  }
  return false;
}

}  // namespace cyclecount
