// Command-line front end: counting, ear profiles, tree duality, witness
// searches, nonexistence certificates, and the self-verification suite.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cyclecount/cycles.hpp>
#include <cyclecount/ears.hpp>
#include <cyclecount/multigraph.hpp>
#include <cyclecount/planarity.hpp>
#include <cyclecount/search.hpp>
#include <cyclecount/treeduality.hpp>
#include <cyclecount/verify.hpp>

namespace cc = cyclecount;

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cc::Multigraph load_graph(const std::string& path) {
  if (path.empty() || path == "-") return cc::parse_mgf(read_stream(std::cin));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return cc::parse_mgf(read_stream(in));
}

std::string self_binary_path() {
  char buf[4096];
  ssize_t k = readlink("/proc/self/exe", buf, sizeof(buf) - 1);
  if (k <= 0) return {};
  buf[k] = '\0';
  return std::string(buf);
}

void warn_if_rank_raised() {
  if (const char* env = std::getenv("CYCLECOUNT_MAX_RANK")) {
    int r = std::atoi(env);
    if (r > 6) {
      std::cerr << "warning: CYCLECOUNT_MAX_RANK=" << r
                << " raises the exhaustive frontier bound; expect heavy CPU and "
                   "memory use beyond rank 6\n";
    }
  }
}

nlohmann::ordered_json certificate_json(const cc::NonexistenceCertificate& cert) {
  nlohmann::ordered_json j;
  j["target"] = cert.target;
  j["filter"] = {{"cubic", cert.filter.cubic},
                 {"planar", cert.filter.planar},
                 {"hamiltonian", cert.filter.hamiltonian}};
  j["absent"] = cert.absent;
  j["ranks_checked"] = cert.ranks_checked;
  j["next_rank_floor"] = cert.next_rank_floor;
  auto ranks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cert.per_rank.size(); ++i) {
    nlohmann::ordered_json row;
    row["rank"] = cert.per_rank[i].rank;
    row["classes"] = cert.per_rank[i].classes;
    row["min_count"] = cert.per_rank[i].min_count;
    auto counts = nlohmann::ordered_json::array();
    if (i < cert.counts_by_rank.size())
      for (long long c : cert.counts_by_rank[i]) counts.push_back(c);
    row["counts"] = counts;
    ranks.push_back(row);
  }
  j["per_rank"] = ranks;
  if (cert.witness)
    j["witness"] = cc::witness_row_json(cert.target, *cert.witness);
  else
    j["witness"] = nullptr;
  return j;
}

int cmd_count(const std::string& path, bool oracle) {
  cc::Multigraph g = load_graph(path);
  long long walk = cc::count_cycles(g);
  if (oracle) {
    long long brute = cc::count_cycles_oracle(g);
    if (brute != walk) {
      std::cerr << "counter mismatch: walk=" << walk << " oracle=" << brute << "\n";
      return 1;
    }
  }
  std::cout << walk << "\n";
  return 0;
}

int cmd_paths(const std::string& path, int from, int to) {
  cc::Multigraph g = load_graph(path);
  std::cout << cc::count_st_paths(g, from, to) << "\n";
  return 0;
}

int cmd_ear_profile(const std::string& path) {
  cc::Multigraph g = load_graph(path);
  cc::Multigraph reduced = cc::reduce(g).graph;
  for (const auto& cls : cc::ear_extension_profile(reduced))
    std::cout << cls.code.hex() << " " << cls.count << "\n";
  return 0;
}

int cmd_subtrees(const std::string& path) {
  cc::Tree t = cc::as_tree(load_graph(path));
  std::cout << cc::count_subtrees(t) << "\n";
  return 0;
}

int cmd_dual(const std::string& path) {
  cc::Tree t = cc::as_tree(load_graph(path));
  auto [op, fm] = cc::tree_to_outerplanar(t);
  cc::Multigraph companion = cc::outerplanar_as_multigraph(op);
  std::vector<std::vector<int>> origins;
  cc::ReducedClass reduced = cc::reduce_tracked(companion, &origins);
  // Reduced edge -> companion edges it absorbed; a reduced edge lies on a
  // face boundary exactly when its chain does.
  std::cout << "# reduced companion of a tree on " << t.n
            << " vertices; faces are tree vertices\n";
  for (std::size_t f = 0; f < fm.face_edges.size(); ++f) {
    std::vector<bool> on_face(companion.m(), false);
    for (int e : fm.face_edges[f]) on_face[e] = true;
    std::cout << "# face " << fm.face_to_tree[f] << ":";
    for (std::size_t r = 0; r < origins.size(); ++r)
      if (on_face[origins[r].front()]) std::cout << " " << r;
    std::cout << "\n";
  }
  std::cout << cc::to_mgf(reduced.graph);
  return 0;
}

int cmd_tree_spectrum(int max_n, bool as_json) {
  auto result = cc::subtree_count_spectrum(max_n);
  if (as_json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : result.entries) {
      nlohmann::ordered_json row;
      row["count"] = e.count;
      row["order"] = e.order;
      row["tree_mgf"] = cc::to_mgf(cc::tree_as_multigraph(e.witness));
      arr.push_back(row);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& e : result.entries)
      std::cout << e.count << " " << e.order << "\n";
  }
  return 0;
}

int cmd_search(long long max_count, bool cubic, bool planar, bool hamiltonian,
               const std::string& out_path, int jobs) {
  cc::TableSpec spec;
  spec.cubic = cubic;
  spec.planar = planar;
  spec.hamiltonian = hamiltonian;
  cc::WalkResult result = cc::witness_walk(max_count, {spec}, jobs);
  const cc::WitnessTable& table = result.tables[0];
  cc::oracle_check_table(table);
  std::string json = cc::witness_table_json(table);
  if (out_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << json;
  }
  return 0;
}

int cmd_prove(long long target, bool cubic, int jobs) {
  cc::TableSpec filter;
  filter.cubic = cubic;
  auto frontiers = cc::build_frontiers(cc::max_exhaustive_rank(), jobs);
  cc::NonexistenceCertificate cert = cc::prove_nonexistence(target, filter, frontiers);
  std::cout << certificate_json(cert).dump(2) << "\n";
  return cert.absent ? 0 : 2;
}

int cmd_oeis(const std::string& id, int terms) {
  for (long long v : cc::oeis_prefix(id, terms)) std::cout << v << "\n";
  return 0;
}

int cmd_export_dot(const std::string& path) {
  std::cout << cc::to_dot(load_graph(path));
  return 0;
}

int cmd_verify(const std::string& scope, int jobs) {
  cc::VerifyContext ctx(jobs);
  std::string self = self_binary_path();
  auto checks = cc::run_scope(scope, ctx, self.empty() ? nullptr : self.c_str());
  cc::write_report(std::cout, checks);
  for (const auto& c : checks)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle counts of inseparable multigraphs"};
  app.require_subcommand(1);
  warn_if_rank_raised();

  std::string file;
  bool oracle = false;
  auto* count = app.add_subcommand("count", "count cycles of an MGF graph");
  count->add_option("file", file, "input file (default: stdin)");
  count->add_flag("--oracle", oracle, "cross-check with the brute-force oracle");

  int from = 0, to = 0;
  auto* paths = app.add_subcommand("paths", "count simple paths between two vertices");
  paths->add_option("file", file)->required();
  paths->add_option("--from", from, "source vertex")->required();
  paths->add_option("--to", to, "target vertex")->required();

  auto* earp = app.add_subcommand("ear-profile",
                                  "classes reachable by adding one ear, with counts");
  earp->add_option("file", file)->required();

  auto* subt = app.add_subcommand("subtrees", "count subtrees of a tree");
  subt->add_option("file", file)->required();

  auto* dual = app.add_subcommand(
      "dual", "reduced outerplanar companion of a tree, with its face map");
  dual->add_option("file", file)->required();

  int max_n = 13;
  bool as_json = false;
  auto* spectrum =
      app.add_subcommand("tree-spectrum", "attainable subtree counts with witnesses");
  spectrum->add_option("--max-n", max_n, "largest tree order (default 13)");
  spectrum->add_flag("--json", as_json, "emit JSON instead of count/order lines");

  long long max_count = 100;
  bool cubic = false, planar = false, hamiltonian = false;
  std::string out_path;
  int jobs = 1;
  auto* search = app.add_subcommand("search", "witness table for counts 1..max");
  search->add_option("--max-count", max_count, "largest count to decide")->required();
  search->add_flag("--cubic", cubic, "restrict to cubic classes");
  search->add_flag("--planar", planar, "restrict to planar classes");
  search->add_flag("--hamiltonian", hamiltonian, "restrict to hamiltonian classes");
  search->add_option("--out", out_path, "write the JSON table to this file");
  search->add_option("--jobs", jobs, "worker threads (default 1)");

  long long target = 0;
  bool prove_cubic = false;
  int prove_jobs = 1;
  auto* prove = app.add_subcommand("prove", "certificate that a count is unattainable");
  prove->add_option("--absent", target, "the count to rule out")->required();
  prove->add_flag("--cubic", prove_cubic, "restrict to cubic classes");
  prove->add_option("--jobs", prove_jobs, "worker threads (default 1)");

  std::string oeis_id;
  int terms = 10;
  auto* oeis = app.add_subcommand("oeis", "prefix of an attainable-count sequence");
  oeis->add_option("id", oeis_id, "sequence id (A385523 or A385524)")->required();
  oeis->add_option("--terms", terms, "how many terms (default 10)");

  auto* dot = app.add_subcommand("export-dot", "convert MGF to DOT");
  dot->add_option("file", file)->required();

  std::string scope = "all";
  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  verify->add_option("--scope", scope,
                     "lemmas|theorem1|theorem2|corollaries|duality|all");
  verify->add_option("--jobs", verify_jobs, "worker threads (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return cmd_count(file, oracle);
    if (paths->parsed()) return cmd_paths(file, from, to);
    if (earp->parsed()) return cmd_ear_profile(file);
    if (subt->parsed()) return cmd_subtrees(file);
    if (dual->parsed()) return cmd_dual(file);
    if (spectrum->parsed()) return cmd_tree_spectrum(max_n, as_json);
    if (search->parsed())
      return cmd_search(max_count, cubic, planar, hamiltonian, out_path, jobs);
    if (prove->parsed()) return cmd_prove(target, prove_cubic, prove_jobs);
    if (oeis->parsed()) return cmd_oeis(oeis_id, terms);
    if (dot->parsed()) return cmd_export_dot(file);
    if (verify->parsed()) return cmd_verify(scope, verify_jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
