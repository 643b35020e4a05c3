#pragma once

// Canonical codes for multigraphs up to isomorphism, by branch-and-bound
// minimization over vertex orderings of a bytewise adjacency encoding.
// Multiplicities are stored complemented (255 - mult), so the minimal code
// front-loads dense adjacency and the prefix bound prunes hard. Orderings
// that tie with the current best are complete automorphisms; a capped sample
// of them is harvested for orbit computations (callers must never rely on
// the sample being the full group).

#include <compare>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclecount/multigraph.hpp"

namespace cyclecount {

inline constexpr int kDefaultCanonMaxN = 14;

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes <=> b.bytes;
  }

  std::string hex() const {
    static const char* d = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      s += d[b >> 4];
      s += d[b & 15];
    }
    return s;
  }
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<int> labels;  // labels[original vertex] = canonical position
  // Vertex maps in canonical labels (tau[v] = image). Sampled, not complete.
  std::vector<std::vector<int>> automorphisms;
};

namespace detail {

struct CanonSearch {
  int n;
  const std::uint8_t* mult;   // n*n complemented multiplicities
  const std::uint8_t* loops;  // n complemented loop counts
  int aut_cap;

  std::vector<std::uint8_t> cur, best;
  std::vector<int> perm, best_perm;  // position -> vertex
  std::vector<char> used;
  bool have_best = false;
  std::vector<std::vector<int>> auts;  // position-space maps, converted later

  void run() {
    cur.clear();
    cur.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    perm.assign(n, -1);
    used.assign(n, 0);
    descend(0);
  }

  void descend(int pos) {
    if (pos == n) {
      if (!have_best) {
        best = cur;
        best_perm = perm;
        have_best = true;
        return;
      }
      if (cur < best) {
        best = cur;
        best_perm = perm;
        return;
      }
      // cur == best can't be violated here: descent only continues on
      // prefixes <= best, so completion means equal -> automorphism.
      if (static_cast<int>(auts.size()) < aut_cap) {
        // tau maps best_perm[p] -> perm[p] for every position p.
        std::vector<int> tau(n);
        for (int p = 0; p < n; ++p) tau[best_perm[p]] = perm[p];
        auts.push_back(std::move(tau));
      }
      return;
    }
    const std::size_t off = cur.size();
    const int rowlen = pos + 1;
    // Build candidate rows: for unused v, its encoding against perm[0..pos).
    struct Cand {
      int v;
      std::size_t row;  // offset into rows
    };
    std::vector<std::uint8_t> rows;
    rows.reserve(static_cast<std::size_t>(n) * rowlen);
    std::vector<Cand> cands;
    cands.reserve(n);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      cands.push_back({v, rows.size()});
      for (int p = 0; p < pos; ++p) rows.push_back(mult[v * n + perm[p]]);
      rows.push_back(loops[v]);
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      int cmp = std::memcmp(rows.data() + a.row, rows.data() + b.row, rowlen);
      if (cmp != 0) return cmp < 0;
      return a.v < b.v;
    });
    for (const Cand& c : cands) {
      const std::uint8_t* row = rows.data() + c.row;
      if (have_best) {
        // Sound only when cur[0..off) equals best[0..off); recomputed fresh
        // each time because best may have moved underneath us.
        bool tight = off == 0 || std::memcmp(cur.data(), best.data(), off) == 0;
        if (tight) {
          int cmp = std::memcmp(row, best.data() + off, rowlen);
          if (cmp > 0) break;  // candidates are sorted: the rest only worsen
        }
      }
      cur.insert(cur.end(), row, row + rowlen);
      perm[pos] = c.v;
      used[c.v] = 1;
      descend(pos + 1);
      used[c.v] = 0;
      perm[pos] = -1;
      cur.resize(off);
    }
  }
};

}  // namespace detail

// aut_cap > 0 requests harvesting of up to that many automorphisms.
inline CanonicalForm canonical_form(const Multigraph& g,
                                    int max_n = kDefaultCanonMaxN,
                                    int aut_cap = 0) {
  if (g.n > max_n)
    throw std::invalid_argument("canonical_form: size bound exceeded (n=" +
                                std::to_string(g.n) + ", max " +
                                std::to_string(max_n) + ")");
  if (g.n == 0) throw std::invalid_argument("canonical_form: empty graph");
  const int n = g.n;
  std::vector<std::uint8_t> mult(static_cast<std::size_t>(n) * n, 255);
  std::vector<std::uint8_t> loops(n, 255);
  for (const Edge& e : g.edges) {
    if (e.u == e.v) {
      if (loops[e.u] == 0) throw std::invalid_argument("canonical_form: loop count overflow");
      loops[e.u] -= 1;
    } else {
      if (mult[e.u * n + e.v] == 0)
        throw std::invalid_argument("canonical_form: multiplicity overflow");
      mult[e.u * n + e.v] -= 1;
      mult[e.v * n + e.u] -= 1;
    }
  }
  detail::CanonSearch s;
  s.n = n;
  s.mult = mult.data();
  s.loops = loops.data();
  s.aut_cap = aut_cap;
  s.run();

  CanonicalForm out;
  out.code.bytes.reserve(2 + s.best.size());
  out.code.bytes.push_back(static_cast<std::uint8_t>(n));
  out.code.bytes.push_back(static_cast<std::uint8_t>(g.m()));
  out.code.bytes.insert(out.code.bytes.end(), s.best.begin(), s.best.end());
  out.labels.assign(n, -1);
  for (int p = 0; p < n; ++p) out.labels[s.best_perm[p]] = p;
  // Convert harvested maps (original-vertex space) into canonical labels.
  out.automorphisms.reserve(s.auts.size());
  for (const auto& tau : s.auts) {
    std::vector<int> t(n);
    for (int v = 0; v < n; ++v) t[out.labels[v]] = out.labels[tau[v]];
    out.automorphisms.push_back(std::move(t));
  }
  return out;
}

inline CanonicalCode canonical_code(const Multigraph& g, int max_n = kDefaultCanonMaxN) {
  return canonical_form(g, max_n).code;
}

// Relabel into canonical positions and sort edges; two isomorphic graphs
// relabeled this way are bytewise-identical values.
inline Multigraph canonical_relabel(const Multigraph& g, const CanonicalForm& f) {
  Multigraph h = permute_vertices(g, f.labels);
  for (Edge& e : h.edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(h.edges.begin(), h.edges.end(),
            [](const Edge& a, const Edge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });
  return h;
}

inline Multigraph canonical_relabel(const Multigraph& g, int max_n = kDefaultCanonMaxN) {
  return canonical_relabel(g, canonical_form(g, max_n));
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b,
                       int max_n = kDefaultCanonMaxN) {
  if (a.n != b.n || a.m() != b.m()) return false;
  if (a.n == 0) return true;
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_code(a, max_n) == canonical_code(b, max_n);
}

// Vertex orbits under a set of permutations (e.g. harvested automorphisms):
// orbit id = smallest member. With an incomplete group this refines the true
// orbits, which is the safe direction for deduplication.
inline std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& perms) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::vector<int>* p = &parent;
  auto find = [&](int x) {
    while ((*p)[x] != x) {
      (*p)[x] = (*p)[(*p)[x]];
      x = (*p)[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& tau : perms)
    for (int v = 0; v < n; ++v) unite(v, tau[v]);
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = find(v);
  return orbit;
}

}  // namespace cyclecount
