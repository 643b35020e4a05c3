#pragma once

// Exhaustive searches over reduced inseparable classes, organized by
// cyclomatic rank r = m - n + 1. Rank 1 is the loop class; every class of
// rank r+1 arises from a rank-r class by attaching one ear (anchors at
// vertices or edge interiors) and reducing, so breadth-first expansion with
// canonical-code deduplication enumerates each rank completely.
//
// Counts ride along incrementally: attaching an ear between resolved
// anchors a, b multiplies no work - the new cycle count is the old one plus
// the number of a-b paths in the pre-ear graph. Every ear addition to an
// inseparable graph adds at least 2 cycles (two vertex-disjoint a-b paths
// exist), so a search for counts <= C may discard classes whose count
// exceeds C and stop expanding classes whose count exceeds C - 2 without
// losing any witness. The same bound yields nonexistence certificates:
// min_cycles_by_rank grows by at least 2 per rank, so finitely many ranks
// decide any fixed count.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cyclecount/canonical.hpp"
#include "cyclecount/cycles.hpp"
#include "cyclecount/ears.hpp"
#include "cyclecount/multigraph.hpp"
#include "cyclecount/planarity.hpp"
#include "cyclecount/treeduality.hpp"

namespace cyclecount {

inline int cyclomatic_rank(const Multigraph& g) { return g.m() - g.n + 1; }

inline Multigraph loop_class() { return Multigraph{1, {{0, 0}}}; }

// Two vertices joined by k parallel strands: rank k - 1, k(k-1)/2 cycles.
inline Multigraph theta_graph(int k) {
  if (k < 2) throw std::invalid_argument("theta_graph: need k >= 2");
  Multigraph g{2, {}};
  for (int i = 0; i < k; ++i) g.edges.push_back({0, 1});
  return g;
}

// Ring of k triangles glued along doubled edges... concretely: the cycle
// C_k with every edge doubled. k + 2^k cycles.
inline Multigraph necklace_graph(int k) {
  if (k < 2) throw std::invalid_argument("necklace_graph: need k >= 2");
  Multigraph g{k, {}};
  for (int i = 0; i < k; ++i) {
    g.edges.push_back({i, (i + 1) % k});
    g.edges.push_back({i, (i + 1) % k});
  }
  return g;
}

inline Multigraph complete_graph(int k) {
  Multigraph g{k, {}};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.edges.push_back({i, j});
  return g;
}

inline Multigraph complete_bipartite(int a, int b) {
  Multigraph g{a + b, {}};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.push_back({i, a + j});
  return g;
}

// Exhaustive-rank budget; raising it via CYCLECOUNT_MAX_RANK is allowed but
// full frontiers grow fast (the caller prints a resource warning).
inline int max_exhaustive_rank() {
  if (const char* s = std::getenv("CYCLECOUNT_MAX_RANK")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 6;
}

// --- class storage ----------------------------------------------------------

struct ClassEntry {
  Multigraph graph;  // reduced, canonically labeled
  long long count = 0;
  // Sampled automorphisms in canonical labels, flattened (stride graph.n).
  // Used only to skip symmetric ear placements; may be empty or partial.
  std::vector<std::uint8_t> auts;
};

using ClassMap = std::map<CanonicalCode, ClassEntry>;

struct FrontierLevel {
  int rank = 0;
  ClassMap classes;
};

namespace detail {

inline std::vector<std::uint8_t> flatten_auts(const std::vector<std::vector<int>>& auts,
                                              int n) {
  std::vector<std::uint8_t> out;
  out.reserve(auts.size() * n);
  for (const auto& tau : auts)
    for (int v : tau) out.push_back(static_cast<std::uint8_t>(v));
  return out;
}

// Placement orbit reduction: collapse descriptors equivalent under the
// sampled automorphisms. Equivalent placements yield isomorphic children
// with equal counts, so dropping duplicates is sound even though the sample
// may miss symmetries (missed ones just cost duplicate work downstream).
inline std::vector<PlacementDescriptor> reduced_placements(
    const Multigraph& g, const std::vector<std::uint8_t>& auts_flat,
    bool edge_anchors_only) {
  std::vector<PlacementDescriptor> all = enumerate_placements(g, edge_anchors_only);
  const int n = g.n;
  const int gens = n > 0 ? static_cast<int>(auts_flat.size()) / n : 0;
  if (gens == 0 || all.empty()) return all;

  // Key a descriptor by kind and the endpoint pairs of its anchors' bundles
  // (or vertex ids), in bundle space so automorphisms act naturally.
  auto bundle_of = [&](int e) {
    int u = g.edges[e].u, v = g.edges[e].v;
    return std::pair{std::min(u, v), std::max(u, v)};
  };
  using Key = std::array<int, 5>;
  auto key_of = [&](const PlacementDescriptor& p) -> Key {
    switch (p.kind) {
      case PlacementKind::vertex_vertex: {
        int a = p.first.index, b = p.second.index;
        return {0, std::min(a, b), std::max(a, b), -1, -1};
      }
      case PlacementKind::vertex_edge: {
        auto [x, y] = bundle_of(p.second.index);
        return {1, p.first.index, x, y, -1};
      }
      case PlacementKind::same_edge: {
        auto [x, y] = bundle_of(p.first.index);
        return {2, x, y, -1, -1};
      }
      case PlacementKind::parallel_edges: {
        auto [x, y] = bundle_of(p.first.index);
        return {3, x, y, -1, -1};
      }
      case PlacementKind::distinct_edges: {
        auto a = bundle_of(p.first.index);
        auto b = bundle_of(p.second.index);
        if (b < a) std::swap(a, b);
        return {4, a.first, a.second, b.first, b.second};
      }
    }
    return {-1, -1, -1, -1, -1};
  };
  std::map<Key, int> index_of;
  std::vector<Key> keys(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    keys[i] = key_of(all[i]);
    index_of[keys[i]] = static_cast<int>(i);
  }
  // Union-find over descriptor indices.
  std::vector<int> parent(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  auto apply = [&](const Key& k, const std::uint8_t* tau) -> Key {
    auto mv = [&](int v) { return static_cast<int>(tau[v]); };
    auto mb = [&](int x, int y) {
      int a = mv(x), b = mv(y);
      return std::pair{std::min(a, b), std::max(a, b)};
    };
    switch (k[0]) {
      case 0: {
        int a = mv(k[1]), b = mv(k[2]);
        return {0, std::min(a, b), std::max(a, b), -1, -1};
      }
      case 1: {
        auto [x, y] = mb(k[2], k[3]);
        return {1, mv(k[1]), x, y, -1};
      }
      case 2: {
        auto [x, y] = mb(k[1], k[2]);
        return {2, x, y, -1, -1};
      }
      case 3: {
        auto [x, y] = mb(k[1], k[2]);
        return {3, x, y, -1, -1};
      }
      case 4: {
        auto a = mb(k[1], k[2]);
        auto b = mb(k[3], k[4]);
        if (b < a) std::swap(a, b);
        return {4, a.first, a.second, b.first, b.second};
      }
    }
    return k;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (int t = 0; t < gens; ++t) {
      Key mapped = apply(keys[i], auts_flat.data() + static_cast<std::size_t>(t) * n);
      auto it = index_of.find(mapped);
      if (it != index_of.end()) unite(static_cast<int>(i), it->second);
    }
  }
  std::vector<PlacementDescriptor> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) out.push_back(all[i]);
  return out;
}

template <typename Fn>
void parallel_chunks(std::size_t count, int jobs, Fn&& fn) {
  if (count == 0) return;
  std::size_t k = jobs <= 1 ? 1 : std::min<std::size_t>(jobs, count);
  if (k == 1) {
    fn(0, std::size_t{0}, count);
    return;
  }
  std::size_t per = (count + k - 1) / k;
  std::vector<std::thread> ts;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t b = i * per, e = std::min(count, b + per);
    if (b >= e) break;
    ts.emplace_back([&fn, i, b, e] { fn(i, b, e); });
  }
  for (auto& t : ts) t.join();
}

struct Expansion {
  CanonicalCode code;
  Multigraph graph;  // reduced, canonically labeled
  long long count = 0;
  std::vector<std::uint8_t> auts;
};

// All reduced classes reachable from `parent` by one ear, with counts, kept
// only when count <= count_cap.
inline std::vector<Expansion> expand_class(const ClassEntry& parent, long long count_cap,
                                           int canon_max_n, int aut_sample,
                                           bool edge_anchors_only) {
  std::vector<Expansion> out;
  for (const PlacementDescriptor& p :
       reduced_placements(parent.graph, parent.auts, edge_anchors_only)) {
    EarAddition ext = add_ear(parent.graph, p.first, p.second, 1);
    long long cap = count_cap == kUncapped ? kUncapped : count_cap - parent.count + 1;
    long long paths = count_st_paths(ext.base, ext.a, ext.b, cap);
    long long child_count = parent.count + paths;
    if (child_count > count_cap) continue;
    ReducedClass rc = reduce(ext.graph);
    CanonicalForm f = canonical_form(rc.graph, canon_max_n, aut_sample);
    Expansion x;
    x.code = std::move(f.code);
    x.graph = canonical_relabel(rc.graph, f);
    x.count = child_count;
    x.auts = flatten_auts(f.automorphisms, rc.graph.n);
    out.push_back(std::move(x));
  }
  return out;
}

// Expand a whole level; deterministic regardless of `jobs` because children
// are canonically labeled (duplicates are bytewise identical) and merged
// insert-if-absent.
inline ClassMap expand_level(const ClassMap& level, long long count_cap, int jobs,
                             int canon_max_n, int aut_sample, bool edge_anchors_only,
                             long long expand_cap) {
  std::vector<const ClassEntry*> parents;
  parents.reserve(level.size());
  for (const auto& [code, entry] : level)
    if (expand_cap == kUncapped || entry.count <= expand_cap)
      parents.push_back(&entry);
  std::vector<std::vector<Expansion>> results(parents.size());
  parallel_chunks(parents.size(), jobs, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      results[i] = expand_class(*parents[i], count_cap, canon_max_n, aut_sample,
                                edge_anchors_only);
  });
  ClassMap next;
  for (auto& batch : results) {
    for (auto& x : batch) {
      auto it = next.find(x.code);
      if (it == next.end()) {
        next.emplace(std::move(x.code),
                     ClassEntry{std::move(x.graph), x.count, std::move(x.auts)});
      } else if (it->second.count != x.count) {
        throw std::logic_error("expand_level: same class reached with different counts");
      }
    }
  }
  return next;
}

}  // namespace detail

// Full (uncapped) frontiers of ranks 1..max_rank. Fast for max_rank <= 6;
// the class count roughly dectuples per rank.
inline std::vector<FrontierLevel> build_frontiers(int max_rank, int jobs = 1,
                                                  long long count_cap = kUncapped,
                                                  int canon_max_n = 26) {
  if (max_rank < 1) throw std::invalid_argument("build_frontiers: rank must be >= 1");
  std::vector<FrontierLevel> out;
  ClassMap level;
  {
    Multigraph g = loop_class();
    CanonicalForm f = canonical_form(g, 4, 0);
    level.emplace(f.code, ClassEntry{canonical_relabel(g, f), 1, {}});
  }
  out.push_back({1, level});
  for (int r = 2; r <= max_rank; ++r) {
    long long expand_cap =
        count_cap == kUncapped ? kUncapped : count_cap - 2;
    level = detail::expand_level(out.back().classes, count_cap, jobs, canon_max_n,
                                 16, false, expand_cap);
    if (level.empty()) break;
    out.push_back({r, level});
  }
  return out;
}

// Exact minimum cycle count over classes of the given rank.
inline long long min_cycles_by_rank(int r, const std::vector<FrontierLevel>& frontiers) {
  for (const auto& lvl : frontiers) {
    if (lvl.rank != r) continue;
    long long mn = -1;
    for (const auto& [code, e] : lvl.classes)
      if (mn < 0 || e.count < mn) mn = e.count;
    return mn;
  }
  throw std::invalid_argument("min_cycles_by_rank: frontier not built for rank " +
                              std::to_string(r));
}

// Lower bound extension: each ear adds at least 2 cycles, so the minimum
// grows by at least 2 per rank past the last exhaustively built one.
inline long long min_cycles_rank_floor(int r, int base_rank, long long base_min) {
  if (r <= base_rank) throw std::invalid_argument("min_cycles_rank_floor: r below base");
  return base_min + 2LL * (r - base_rank);
}

// --- witness search ---------------------------------------------------------

struct TableSpec {
  bool cubic = false;
  bool planar = false;
  bool hamiltonian = false;
};

struct WitnessTable {
  TableSpec spec;
  std::map<long long, Multigraph> rows;  // count -> minimal witness
};

struct RankStat {
  int rank = 0;
  long long classes = 0;
  long long min_count = 0;
  long long expanded = 0;
};

struct WalkResult {
  std::vector<WitnessTable> tables;
  std::vector<RankStat> stats;
  bool frontier_exhausted = false;  // true: ran until no class could extend
  int last_rank = 0;
};

namespace detail {

// Minimality order for witnesses: fewest vertices, then fewest edges, then
// canonical code of the (already canonically labeled) graph.
inline bool witness_improves(const Multigraph& cand, const Multigraph& incumbent) {
  if (cand.n != incumbent.n) return cand.n < incumbent.n;
  if (cand.m() != incumbent.m()) return cand.m() < incumbent.m();
  return std::lexicographical_compare(
      cand.edges.begin(), cand.edges.end(), incumbent.edges.begin(),
      incumbent.edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
      });
}

inline bool satisfies(const Multigraph& g, const TableSpec& spec) {
  if (spec.cubic && !is_cubic(g)) return false;
  if (spec.planar && !is_planar(g)) return false;
  if (spec.hamiltonian && !is_hamiltonian(g, 32)) return false;
  return true;
}

inline void offer(WitnessTable& table, long long count, const Multigraph& g) {
  auto it = table.rows.find(count);
  if (it != table.rows.end() && !witness_improves(g, it->second)) return;
  if (!satisfies(g, table.spec)) return;
  if (it == table.rows.end())
    table.rows.emplace(count, g);
  else
    it->second = g;
}

}  // namespace detail

// Breadth-first walk over count-bounded frontiers, recording minimal
// witnesses for every requested table. Terminates when either no retained
// class can be extended, or (with stop_when_decided) when every count in
// 1..max_count is witnessed in every table or provably out of reach of
// future ranks (smaller than live minimum + 2).
inline WalkResult witness_walk(long long max_count, std::vector<TableSpec> specs,
                               int jobs = 1, bool stop_when_decided = true,
                               int canon_max_n = 26) {
  if (max_count < 1) throw std::invalid_argument("witness_walk: max_count must be >= 1");
  WalkResult res;
  for (const TableSpec& s : specs) res.tables.push_back({s, {}});
  ClassMap level;
  {
    Multigraph g = loop_class();
    CanonicalForm f = canonical_form(g, 4, 0);
    level.emplace(f.code, ClassEntry{canonical_relabel(g, f), 1, {}});
  }
  int rank = 1;
  for (;;) {
    long long min_count = -1;
    for (const auto& [code, e] : level) {
      for (auto& table : res.tables)
        if (e.count <= max_count) detail::offer(table, e.count, e.graph);
      if (min_count < 0 || e.count < min_count) min_count = e.count;
    }
    long long live_min = -1;
    long long expandable = 0;
    for (const auto& [code, e] : level)
      if (e.count <= max_count - 2) {
        ++expandable;
        if (live_min < 0 || e.count < live_min) live_min = e.count;
      }
    res.stats.push_back({rank, static_cast<long long>(level.size()), min_count, expandable});
    res.last_rank = rank;
    if (expandable == 0) {
      res.frontier_exhausted = true;
      break;
    }
    if (stop_when_decided) {
      bool open = false;
      for (const auto& table : res.tables)
        for (long long c = live_min + 2; c <= max_count && !open; ++c)
          if (!table.rows.count(c)) open = true;
      if (!open) break;  // everything still reachable is already witnessed
    }
    level = detail::expand_level(level, max_count, jobs, canon_max_n, 16, false,
                                 max_count - 2);
    if (level.empty()) {
      res.frontier_exhausted = true;
      break;
    }
    ++rank;
  }
  return res;
}

// --- nonexistence certificates ----------------------------------------------

struct NonexistenceCertificate {
  long long target = 0;
  TableSpec filter;
  bool absent = false;
  int ranks_checked = 0;       // frontiers 1..ranks_checked examined
  long long next_rank_floor = 0;  // proven lower bound for rank ranks_checked+1
  std::vector<RankStat> per_rank;
  std::vector<std::set<long long>> counts_by_rank;  // achieved counts, per rank
  std::optional<Multigraph> witness;  // when !absent
};

// Decide whether `target` occurs as the cycle count of any inseparable
// multigraph meeting the filter. Sound because every class of rank r has
// count >= min_cycles_by_rank(r), that minimum gains >= 2 per rank, and
// counts are homeomorphism invariants (checking reduced classes suffices).
inline NonexistenceCertificate prove_nonexistence(
    long long target, TableSpec filter, const std::vector<FrontierLevel>& frontiers) {
  if (target < 1) throw std::invalid_argument("prove_nonexistence: target must be >= 1");
  NonexistenceCertificate cert;
  cert.target = target;
  cert.filter = filter;
  int fence = -1;  // first built rank whose exact minimum exceeds target
  for (const auto& lvl : frontiers) {
    long long mn = min_cycles_by_rank(lvl.rank, frontiers);
    if (mn > target) {
      fence = lvl.rank;
      break;
    }
  }
  if (fence < 0) {
    // The last built rank's floor must clear the target two ranks out at
    // most; otherwise the built frontiers cannot decide this target.
    const auto& last = frontiers.back();
    long long base = min_cycles_by_rank(last.rank, frontiers);
    if (base + 2 > target) {
      fence = last.rank + 1;  // not built, but its floor already clears
    } else {
      throw std::invalid_argument(
          "prove_nonexistence: built frontiers cannot decide target " +
          std::to_string(target) + " (rank bound too low)");
    }
  }
  cert.ranks_checked = 0;
  cert.absent = true;
  for (const auto& lvl : frontiers) {
    if (lvl.rank >= fence) break;
    cert.ranks_checked = lvl.rank;
    RankStat st{lvl.rank, static_cast<long long>(lvl.classes.size()), -1, 0};
    std::set<long long> counts;
    for (const auto& [code, e] : lvl.classes) {
      counts.insert(e.count);
      if (st.min_count < 0 || e.count < st.min_count) st.min_count = e.count;
      if (e.count == target && detail::satisfies(e.graph, filter)) {
        cert.absent = false;
        if (!cert.witness) cert.witness = e.graph;
      }
    }
    cert.per_rank.push_back(st);
    cert.counts_by_rank.push_back(std::move(counts));
  }
  if (cert.ranks_checked + 1 < fence)
    throw std::logic_error("prove_nonexistence: frontier ranks not contiguous");
  long long fence_min;
  bool fence_built = false;
  for (const auto& lvl : frontiers)
    if (lvl.rank == fence) fence_built = true;
  if (fence_built)
    fence_min = min_cycles_by_rank(fence, frontiers);
  else
    fence_min = min_cycles_rank_floor(
        fence, frontiers.back().rank,
        min_cycles_by_rank(frontiers.back().rank, frontiers));
  cert.next_rank_floor = fence_min;
  if (fence_min <= target)
    throw std::logic_error("prove_nonexistence: fence does not clear target");
  return cert;
}

// --- nonplanar classification ------------------------------------------------

// All reduced nonplanar classes with cycle count < max_count, via a
// count-capped walk run to exhaustion. (With max_count = 24 this is the
// "K_{3,3} is the unique smallest" computation; K_5 sits at 37.)
inline std::vector<ClassEntry> nonplanar_classification(long long max_count, int jobs = 1) {
  if (max_count < 2 || max_count > 64)
    throw std::invalid_argument("nonplanar_classification: count bound out of range");
  std::vector<ClassEntry> out;
  ClassMap level;
  {
    Multigraph g = loop_class();
    CanonicalForm f = canonical_form(g, 4, 0);
    level.emplace(f.code, ClassEntry{canonical_relabel(g, f), 1, {}});
  }
  const long long cap = max_count - 1;
  while (!level.empty()) {
    for (const auto& [code, e] : level)
      if (!is_planar(e.graph)) out.push_back(e);
    level = detail::expand_level(level, cap, jobs, 26, 16, false, cap - 2);
  }
  std::sort(out.begin(), out.end(), [](const ClassEntry& a, const ClassEntry& b) {
    if (a.count != b.count) return a.count < b.count;
    return detail::witness_improves(a.graph, b.graph);
  });
  return out;
}

// --- cubic search -------------------------------------------------------------

struct CubicSearchResult {
  std::map<long long, Multigraph> any_witness;     // minimal cubic witness
  std::map<long long, Multigraph> planar_witness;  // minimal planar cubic witness
  // order -> set of counts (<= max_count) attained by planar cubic classes
  // of that order; complete for every order <= max_order.
  std::map<int, std::set<long long>> planar_counts_by_order;
  std::vector<RankStat> stats;  // rank here = order/2 + 1
  bool order_exhausted = false;
};

namespace detail {

inline void offer_min(std::map<long long, Multigraph>& rows, long long count,
                      const Multigraph& g) {
  auto it = rows.find(count);
  if (it == rows.end())
    rows.emplace(count, g);
  else if (witness_improves(g, it->second))
    it->second = g;
}

inline void offer_cubic(CubicSearchResult& res, const ClassEntry& e) {
  offer_min(res.any_witness, e.count, e.graph);
  if (is_planar(e.graph)) {
    offer_min(res.planar_witness, e.count, e.graph);
    res.planar_counts_by_order[e.graph.n].insert(e.count);
  }
}

}  // namespace detail

// Cubic classes are closed under the handle step: pick two edge slots
// (one edge twice, two parallels, or two distinct edges), subdivide each,
// join the new vertices. Every cubic class of order n+2 with count <= C
// comes from one of order n with count <= C - 2 this way, so the search is
// complete up to the order bound.
inline CubicSearchResult cubic_search(long long max_count, int max_order = 14,
                                      int jobs = 1) {
  if (max_count < 3) throw std::invalid_argument("cubic_search: count bound too small");
  if (max_order < 2 || max_order > 24)
    throw std::invalid_argument("cubic_search: order bound out of range");
  CubicSearchResult res;
  ClassMap level;
  {
    Multigraph g = theta_graph(3);
    CanonicalForm f = canonical_form(g, 4, 8);
    level.emplace(f.code, ClassEntry{canonical_relabel(g, f), 3,
                                     detail::flatten_auts(f.automorphisms, 2)});
  }
  int order = 2;
  while (!level.empty() && order <= max_order) {
    long long mn = -1, expandable = 0;
    for (const auto& [code, e] : level) {
      if (!is_cubic(e.graph))
        throw std::logic_error("cubic_search: non-cubic class generated");
      if (e.count <= max_count) {
        detail::offer_cubic(res, e);
      }
      if (mn < 0 || e.count < mn) mn = e.count;
      if (e.count <= max_count - 2) ++expandable;
    }
    res.stats.push_back({order / 2 + 1, static_cast<long long>(level.size()), mn, expandable});
    if (order == max_order) break;
    level = detail::expand_level(level, max_count, jobs, 26, 16, true, max_count - 2);
    order += 2;
  }
  res.order_exhausted = level.empty() || order >= max_order;
  return res;
}

// Tree-companion witnesses: reduced outerplanar companions are cubic,
// planar and Hamiltonian, with cycle count = subtree count of the tree.
// Trees of order <= 13 exhaust subtree counts <= 100 (the minimum at order
// n is n(n+1)/2, and 14*15/2 = 105).
struct DualityWitness {
  long long count = 0;
  Multigraph graph;  // reduced companion, canonically labeled
  int tree_order = 0;
};

inline std::vector<DualityWitness> duality_witnesses(long long max_count,
                                                     int max_tree_order = 13) {
  std::vector<DualityWitness> out;
  for (int n = 2; n <= max_tree_order; ++n) {
    for (const Tree& t : all_trees(n)) {
      long long c = count_subtrees(t);
      if (c > max_count) continue;
      auto [op, fm] = tree_to_outerplanar(t);
      Multigraph mg = outerplanar_as_multigraph(op);
      ReducedClass rc = reduce(mg);
      if (count_cycles(rc.graph) != c)
        throw std::logic_error("duality_witnesses: companion count mismatch");
      CanonicalForm f = canonical_form(rc.graph, 26);
      out.push_back({c, canonical_relabel(rc.graph, f), n});
    }
  }
  std::sort(out.begin(), out.end(), [](const DualityWitness& a, const DualityWitness& b) {
    if (a.count != b.count) return a.count < b.count;
    return detail::witness_improves(a.graph, b.graph);
  });
  return out;
}

// Smallest order of a planar cubic class with the given count, or -1 when
// none exists within the order bound (reported upstream as "> max_order").
inline int cubic_planar_minimum_order(long long count, const CubicSearchResult& search) {
  for (const auto& [order, counts] : search.planar_counts_by_order)
    if (counts.count(count)) return order;
  return -1;
}

// --- integer sequences --------------------------------------------------------

// Attainable cycle counts in increasing order: all positive integers except
// {2,4,5,8,9,16}; the cubic variant additionally omits 1 and 13. Exception
// sets are certified by the searches above (see the verification suite);
// prefixes are served only within the certified range 1..100.
inline std::vector<long long> oeis_prefix(const std::string& id, int terms) {
  std::set<long long> skip;
  if (id == "A385523") {
    skip = {2, 4, 5, 8, 9, 16};
  } else if (id == "A385524") {
    skip = {1, 2, 4, 5, 8, 9, 13, 16};
  } else {
    throw std::invalid_argument("oeis_prefix: unknown sequence id " + id);
  }
  const int max_terms = 100 - static_cast<int>(skip.size());
  if (terms < 1 || terms > max_terms)
    throw std::invalid_argument("oeis_prefix: terms must be in 1.." +
                                std::to_string(max_terms));
  std::vector<long long> out;
  for (long long v = 1; static_cast<int>(out.size()) < terms; ++v)
    if (!skip.count(v)) out.push_back(v);
  return out;
}

}  // namespace cyclecount
