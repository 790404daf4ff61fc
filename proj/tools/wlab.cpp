// wlab: exact Wiener-index workbench over small graphs. Subcommands cover
// single-graph reports, extremal searches over generated or ingested
// catalogs, the diameter conjecture verifier, edge-minimal enumeration, the
// tree improvement step, table reproduction and shard merging.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlab/blocks.hpp"
#include "wlab/canonical.hpp"
#include "wlab/distance.hpp"
#include "wlab/enumerate.hpp"
#include "wlab/extremal.hpp"
#include "wlab/families.hpp"
#include "wlab/graph6.hpp"
#include "wlab/report.hpp"

using nlohmann::json;
using namespace wlab;

namespace {

int env_threads() {
  if (const char* env = std::getenv("WLAB_THREADS")) return std::max(1, std::atoi(env));
  return 1;
}

std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (const char* dir = std::getenv("WLAB_OUT_DIR"))
    return (std::filesystem::path(dir) / path).string();
  return path;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::string path = resolve_out(out_path);
  std::ofstream out(path);
  if (!out) throw SourceUnavailable("cannot write " + path);
  out << j.dump(2) << "\n";
}

Graph load_one(const std::string& family_text, const std::string& g6) {
  if (!family_text.empty()) return build(FamilySpec::parse(family_text));
  if (!g6.empty()) return graph6_decode(g6);
  std::string line;
  if (!std::getline(std::cin, line)) throw BadParameters("no graph given");
  return graph6_decode(line);
}

bool parse_shard(const std::string& text, int& index, int& total) {
  if (text.empty()) return true;
  size_t slash = text.find('/');
  if (slash == std::string::npos) return false;
  index = std::atoi(text.substr(0, slash).c_str());
  total = std::atoi(text.substr(slash + 1).c_str());
  return total >= 1 && index >= 0 && index < total;
}

json witness_list(const std::vector<Witness>& ws) {
  json arr = json::array();
  for (const Witness& w : ws)
    arr.push_back({{"graph6", w.graph6}, {"code", w.code.hex()}, {"wiener", w.wiener}});
  return arr;
}

// --- subcommands -------------------------------------------------------------

int cmd_wiener(const std::string& family_text, const std::string& g6, bool as_json) {
  Graph g = load_one(family_text, g6);
  DistanceMatrix m = distances(g);
  BlockCutTree bct = block_cut_tree(g);
  EccentricityProfile ecc = center_median(g);
  if (as_json) {
    json j;
    j["n"] = g.n;
    j["edges"] = g.edge_count();
    j["wiener"] = m.wiener;
    j["diameter"] = m.diameter;
    j["cut_vertices"] = bct.cut_vertices;
    json blocks = json::array();
    for (size_t b = 0; b < bct.blocks.size(); ++b)
      blocks.push_back({{"vertices", bct.blocks[b]},
                        {"kind", bct.kind[b] == BlockKind::NonPendant ? "non-pendant"
                                 : bct.kind[b] == BlockKind::Pendant  ? "pendant"
                                                                      : "s-pendant"}});
    j["blocks"] = blocks;
    j["center"] = ecc.center;
    j["median"] = ecc.median;
    j["center_median_distance"] = ecc.center_median_distance;
    j["graph6"] = graph6_encode(g);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "wiener " << m.wiener << "\n";
  std::cout << "diameter " << m.diameter << "\n";
  std::cout << "cut_vertices " << bct.cut_vertices.size() << "\n";
  std::cout << "blocks " << bct.blocks.size() << "\n";
  auto list = [](const std::vector<int>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
    return out;
  };
  std::cout << "center " << list(ecc.center) << "\n";
  std::cout << "median " << list(ecc.median) << "\n";
  return 0;
}

int cmd_search(bool trees, int n, std::optional<int> diameter, std::optional<int> cut,
               const std::string& g6_file, int threads, const std::string& shard,
               const std::string& resume, const std::string& out) {
  FamilyFilter f;
  f.n = n;
  f.diameter = diameter;
  f.cut_vertices = cut;
  SearchSource source;
  source.kind = !g6_file.empty() ? SourceKind::Graph6File
                : trees          ? SourceKind::Trees
                                 : SourceKind::ConnectedGraphs;
  source.path = g6_file;
  SearchOptions opt;
  opt.threads = threads;
  if (!parse_shard(shard, opt.shard_index, opt.shard_total))
    throw BadParameters("bad --shard, expected i/t");
  opt.resume_token = resume;
  try {
    SearchReport r = max_wiener_search(source, f, opt);
    emit(report_to_json(r), out);
  } catch (const EmptyFamily&) {
    SearchReport r;
    r.family = trees ? "trees" : "connected";
    r.filter = f;
    json j = report_to_json(r);
    j["max_wiener"] = nullptr;
    j["checksum"] = report_checksum(j);
    emit(j, out);
  }
  return 0;
}

int cmd_verify_djw(int d, const std::string& g6_file, int threads, const std::string& out) {
  SearchSource source;
  source.kind = g6_file.empty() ? SourceKind::ConnectedGraphs : SourceKind::Graph6File;
  source.path = g6_file;
  SearchOptions opt;
  opt.threads = threads;
  SearchReport r = verify_djw(d, source, opt);
  emit(report_to_json(r), out);
  return r.counterexamples.empty() ? 0 : 1;
}

int cmd_edge_minimal(int n, int k, int d, bool not_tree_reducible, const std::string& out) {
  std::vector<EdgeMinimalEntry> entries = enumerate_edge_minimal(n, k, d, not_tree_reducible);
  json j;
  j["family"] = {{"n", n}, {"cut_vertices", k}, {"diameter", d}};
  j["not_tree_reducible_only"] = not_tree_reducible;
  j["classes"] = json::array();
  for (const auto& e : entries)
    j["classes"].push_back({{"graph6", e.graph6},
                            {"code", e.code.hex()},
                            {"wiener", e.wiener},
                            {"tree_reducible", e.tree_reducible}});
  j["count"] = entries.size();
  emit(j, out);
  return 0;
}

int cmd_improve(const std::string& family_text, const std::string& g6, const std::string& out) {
  Graph t = load_one(family_text, g6);
  CoverCheck cover = diametral_path_cover_check(t);
  json j;
  DistanceMatrix before = distances(t);
  j["input"] = {{"graph6", graph6_encode(t)},
                {"wiener", before.wiener},
                {"diameter", before.diameter}};
  j["uncovered"] = cover.uncovered;
  if (cover.covered) {
    j["covered"] = true;
  } else {
    j["covered"] = false;
    Graph better = improve_tree(t);
    DistanceMatrix after = distances(better);
    j["improved"] = {{"graph6", graph6_encode(better)},
                     {"wiener", after.wiener},
                     {"diameter", after.diameter}};
  }
  emit(j, out);
  return 0;
}

json search_row(const FamilyFilter& f, int threads) {
  SearchSource trees{SourceKind::Trees, ""};
  SearchOptions opt;
  opt.threads = threads;
  SearchReport r = max_wiener_search(trees, f, opt);
  json row;
  row["max_wiener"] = r.max_wiener;
  row["witnesses"] = witness_list(r.witnesses);
  return row;
}

json table_table1() {
  json j;
  j["id"] = "table1";
  j["rows"] = json::array();
  for (const auto& e : enumerate_edge_minimal(7, 2, 3))
    j["rows"].push_back({{"graph6", e.graph6}, {"code", e.code.hex()}, {"wiener", e.wiener}});
  return j;
}

json table_maxwi2(int threads) {
  json j;
  j["id"] = "maxwi2";
  j["rows"] = json::array();
  for (int n = 6; n <= 9; ++n) {
    FamilyFilter f;
    f.n = n;
    f.cut_vertices = 2;
    SearchSource graphs{SourceKind::ConnectedGraphs, ""};
    SearchOptions opt;
    opt.threads = threads;
    SearchReport r = max_wiener_search(graphs, f, opt);
    j["rows"].push_back({{"n", n},
                         {"max_wiener", r.max_wiener},
                         {"witness_count", r.witnesses.size()},
                         {"witnesses", witness_list(r.witnesses)},
                         {"source", "search"}});
  }
  // From n = 10 the published characterisation pins the unique maximizer,
  // the lollipop L_{n,n-2}; generation stops at n = 9.
  FamilySpec lol;
  lol.tag = FamilyTag::Lollipop;
  lol.n = 10;
  lol.g = 8;
  Graph g = build(lol);
  Witness w;
  w.graph6 = graph6_encode(g);
  w.code = graph_canonical_form(g);
  w.wiener = distances(g).wiener;
  if (w.wiener != closed_form_wiener(lol)) throw Error("lollipop closed form disagrees");
  j["rows"].push_back({{"n", 10},
                       {"max_wiener", w.wiener},
                       {"witness_count", 1},
                       {"witnesses", witness_list({w})},
                       {"source", "characterisation"}});
  return j;
}

json table_eq4() {
  json j;
  j["id"] = "eq4";
  j["rows"] = json::array();
  for (int n1 = 2; n1 <= 6; ++n1) {
    int n2 = 12 - n1;
    j["rows"].push_back({{"n1", n1}, {"n2", n2}, {"bound", bound_eq4(n1, n2)}});
  }
  return j;
}

json table_fig89(int threads) {
  json j;
  j["id"] = "fig89";
  j["rows"] = json::array();
  auto closed = [](const std::string& text) {
    return closed_form_wiener(FamilySpec::parse(text));
  };
  for (int n = 9; n <= 13; ++n) {
    json row;
    row["n"] = n;
    row["d"] = n - 4;
    json forms;
    for (int i = 7; i <= (n >= 10 ? 10 : 9); ++i)
      forms["T" + std::to_string(i)] = closed("T" + std::to_string(i) + ":n=" + std::to_string(n));
    row["closed_forms"] = forms;
    FamilyFilter f;
    f.n = n;
    f.diameter = n - 4;
    json sr = search_row(f, threads);
    row["search_max"] = sr["max_wiener"];
    row["search_witnesses"] = sr["witnesses"];
    j["rows"].push_back(row);
  }
  for (int n = 10; n <= 13; ++n) {
    json row;
    row["n"] = n;
    row["d"] = n - 5;
    json forms;
    for (int i = 11; i <= 20; ++i) {
      if (i >= 18 && i <= 19 && n < 11) continue;
      if (i == 20 && n < 13) continue;
      forms["T" + std::to_string(i)] = closed("T" + std::to_string(i) + ":n=" + std::to_string(n));
    }
    row["closed_forms"] = forms;
    FamilyFilter f;
    f.n = n;
    f.diameter = n - 5;
    json sr = search_row(f, threads);
    row["search_max"] = sr["max_wiener"];
    row["search_witnesses"] = sr["witnesses"];
    j["rows"].push_back(row);
  }
  return j;
}

json table_cmevidence(int threads) {
  (void)threads;
  std::vector<std::pair<int, int>> nd;
  for (int n = 4; n <= 12; ++n)
    for (int d = 2; d <= n - 1; ++d) nd.emplace_back(n, d);
  json j;
  j["id"] = "cmevidence";
  j["rows"] = json::array();
  for (const CmEvidenceRow& row : center_median_evidence(nd)) {
    if (row.witness_graph6.empty()) continue;  // empty (n, d) family
    json r;
    r["n"] = row.n;
    r["d"] = row.d;
    r["max_wiener"] = row.max_wiener;
    r["witnesses"] = row.witness_graph6;
    r["center_median_distance"] = row.center_median_distance;
    j["rows"].push_back(r);
  }
  return j;
}

// Both readings of the bounded-diameter star-tree maximum: the balanced
// star-tree against each fixed diameter 2..4 and against their union.
json table_wagner(int threads) {
  json j;
  j["id"] = "wagner";
  j["rows"] = json::array();
  SearchSource trees{SourceKind::Trees, ""};
  SearchOptions opt;
  opt.threads = threads;
  for (int n = 5; n <= 12; ++n) {
    json row;
    row["n"] = n;
    FamilySpec wag = wagner_star_tree(n);
    row["star_tree"] = wag.text();
    row["star_tree_wiener"] = closed_form_wiener(wag);
    uint64_t union_max = 0;
    for (int d = 2; d <= 4; ++d) {
      FamilyFilter f;
      f.n = n;
      f.diameter = d;
      try {
        SearchReport r = max_wiener_search(trees, f, opt);
        row["max_diameter_" + std::to_string(d)] = r.max_wiener;
        union_max = std::max(union_max, r.max_wiener);
      } catch (const EmptyFamily&) {
        row["max_diameter_" + std::to_string(d)] = nullptr;
      }
    }
    row["max_diameter_2_to_4"] = union_max;
    row["star_tree_attains_union_max"] = closed_form_wiener(wag) == union_max;
    j["rows"].push_back(row);
  }
  return j;
}

int cmd_tables(const std::string& id, int threads, const std::string& out) {
  json j;
  if (id == "table1")
    j = table_table1();
  else if (id == "maxwi2")
    j = table_maxwi2(threads);
  else if (id == "eq4")
    j = table_eq4();
  else if (id == "fig89")
    j = table_fig89(threads);
  else if (id == "cmevidence")
    j = table_cmevidence(threads);
  else if (id == "wagner")
    j = table_wagner(threads);
  else
    throw BadParameters("unknown table id '" + id +
                        "' (table1, maxwi2, eq4, fig89, cmevidence, wagner)");
  emit(j, out);
  return 0;
}

int cmd_merge(const std::vector<std::string>& files, const std::string& out) {
  std::vector<SearchReport> parts;
  for (const std::string& f : files) {
    std::ifstream in(f);
    if (!in) throw SourceUnavailable("cannot open " + f);
    json j;
    in >> j;
    parts.push_back(report_from_json(j));
  }
  SearchReport merged = merge_reports(parts);
  emit(report_to_json(merged), out);
  return 0;
}

int cmd_g6cat(const std::vector<std::string>& files, bool gen_trees, bool gen_graphs, int n,
              std::optional<int> diameter, std::optional<int> cut) {
  FamilyFilter f;
  FamilyFilter* filter = nullptr;
  if (n > 0) {
    f.n = n;
    f.diameter = diameter;
    f.cut_vertices = cut;
    f.validate();
    filter = &f;
  }
  auto print = [&](const Graph& g) {
    std::cout << graph6_encode(g) << "\n";
    return true;
  };
  if (gen_trees || gen_graphs) {
    if (!filter) throw BadParameters("generation needs --n");
    if (gen_trees)
      enumerate_trees(f, print);
    else
      enumerate_connected_graphs(f, print);
    return 0;
  }
  if (files.empty()) {
    std::string line;
    int line_no = 0;
    while (std::getline(std::cin, line)) {
      ++line_no;
      if (line.empty()) continue;
      Graph g = graph6_decode(line, line_no);
      if (!filter || filter->matches(g)) print(g);
    }
    return 0;
  }
  for (const std::string& path : files) read_graph6(path, filter, print);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Wiener-index workbench for small graphs"};
  app.require_subcommand(1);
  int threads = env_threads();

  // wiener
  auto* wiener = app.add_subcommand("wiener", "Wiener index and structure of one graph");
  std::string w_family, w_g6;
  bool w_json = false;
  wiener->add_option("--family", w_family, "family spec, e.g. lollipop:n=9,g=7");
  wiener->add_option("--g6", w_g6, "graph6 record (stdin if neither option is given)");
  wiener->add_flag("--json", w_json, "JSON output");

  // search
  auto* search = app.add_subcommand("search", "maximum Wiener index over a family");
  bool s_trees = false, s_graphs = false;
  int s_n = 0;
  std::optional<int> s_diameter, s_cut;
  std::string s_file, s_shard, s_resume, s_out;
  int s_threads = threads;
  search->add_flag("--trees", s_trees, "search free trees");
  search->add_flag("--graphs", s_graphs, "search connected graphs");
  search->add_option("--n", s_n, "order")->required();
  search->add_option("--diameter", s_diameter, "exact diameter");
  search->add_option("--cut", s_cut, "exact cut-vertex count");
  search->add_option("--g6-file", s_file, "read candidates from a graph6 file");
  search->add_option("--threads", s_threads, "worker threads");
  search->add_option("--shard", s_shard, "process one deterministic shard, i/t");
  search->add_option("--resume", s_resume, "resume after this checkpoint token");
  search->add_option("--out", s_out, "write report here instead of stdout");

  // verify-djw
  auto* djw = app.add_subcommand("verify-djw", "check W(G) <= W(C_{2d+1}) at diameter d");
  int d_d = 0;
  std::string d_file, d_out;
  int d_threads = threads;
  djw->add_option("--d", d_d, "diameter")->required();
  djw->add_option("--g6-file", d_file, "graph catalog (generated when omitted)");
  djw->add_option("--threads", d_threads, "worker threads");
  djw->add_option("--out", d_out, "write report here instead of stdout");

  // edge-minimal
  auto* em = app.add_subcommand("edge-minimal", "edge-minimal classes of an (n,k,d) family");
  int e_n = 0, e_k = 0, e_d = 0;
  bool e_ntr = false;
  std::string e_out;
  em->add_option("--n", e_n, "order")->required();
  em->add_option("--cut", e_k, "cut vertices")->required();
  em->add_option("--diameter", e_d, "diameter")->required();
  em->add_flag("--not-tree-reducible", e_ntr, "keep only classes with no spanning tree of diameter d");
  em->add_option("--out", e_out, "write report here instead of stdout");

  // improve
  auto* improve = app.add_subcommand("improve", "apply the longest-path improvement to a tree");
  std::string i_family, i_g6, i_out;
  improve->add_option("--family", i_family, "family spec");
  improve->add_option("--g6", i_g6, "graph6 record (stdin if neither option is given)");
  improve->add_option("--out", i_out, "write report here instead of stdout");

  // tables
  auto* tables = app.add_subcommand("tables", "reproduce a published table");
  std::string t_id, t_out;
  int t_threads = threads;
  tables->add_option("--id", t_id, "table1 | maxwi2 | eq4 | fig89 | cmevidence | wagner")
      ->required();
  tables->add_option("--threads", t_threads, "worker threads");
  tables->add_option("--out", t_out, "write report here instead of stdout");

  // merge
  auto* merge = app.add_subcommand("merge", "combine shard reports");
  std::vector<std::string> m_files;
  std::string m_out;
  merge->add_option("files", m_files, "report files")->required();
  merge->add_option("--out", m_out, "write report here instead of stdout");

  // g6cat
  auto* g6cat = app.add_subcommand("g6cat", "filter graph6 records (files or stdin)");
  std::vector<std::string> c_files;
  int c_n = 0;
  std::optional<int> c_diameter, c_cut;
  bool c_trees = false, c_graphs = false;
  g6cat->add_option("files", c_files, "graph6 files");
  g6cat->add_flag("--trees", c_trees, "emit the generated tree stream instead of reading");
  g6cat->add_flag("--graphs", c_graphs, "emit the generated connected-graph stream");
  g6cat->add_option("--n", c_n, "keep only this order");
  g6cat->add_option("--diameter", c_diameter, "keep only this diameter");
  g6cat->add_option("--cut", c_cut, "keep only this cut-vertex count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*wiener) return cmd_wiener(w_family, w_g6, w_json);
    if (*search) {
      if (s_trees == s_graphs && s_file.empty())
        throw BadParameters("pick one of --trees / --graphs, or give --g6-file");
      return cmd_search(s_trees, s_n, s_diameter, s_cut, s_file, s_threads, s_shard, s_resume,
                        s_out);
    }
    if (*djw) return cmd_verify_djw(d_d, d_file, d_threads, d_out);
    if (*em) return cmd_edge_minimal(e_n, e_k, e_d, e_ntr, e_out);
    if (*improve) return cmd_improve(i_family, i_g6, i_out);
    if (*tables) return cmd_tables(t_id, t_threads, t_out);
    if (*merge) return cmd_merge(m_files, m_out);
    if (*g6cat) return cmd_g6cat(c_files, c_trees, c_graphs, c_n, c_diameter, c_cut);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
