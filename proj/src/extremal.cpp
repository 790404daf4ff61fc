#include "wlab/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "wlab/blocks.hpp"
#include "wlab/distance.hpp"
#include "wlab/families.hpp"
#include "wlab/graph6.hpp"

namespace wlab {

namespace {

DistanceMatrix tree_distances(const Graph& t, const char* who) {
  if (!is_tree(t)) throw NotATree(std::string(who) + " needs a tree");
  return distances(t);
}

}  // namespace

LayeredDecomposition layered_decomposition(const Graph& t, const std::vector<int>& base) {
  DistanceMatrix dm = tree_distances(t, "layered decomposition");
  const int d = dm.diameter;
  if (int(base.size()) != d + 1) throw NotALongestPath("base path must have diam+1 vertices");
  uint64_t seen = 0;
  for (size_t i = 0; i < base.size(); ++i) {
    t.check_vertex(base[i]);
    if ((seen >> base[i]) & 1) throw NotALongestPath("base path repeats a vertex");
    seen |= 1ULL << base[i];
    if (i > 0 && !t.has_edge(base[i - 1], base[i]))
      throw NotALongestPath("base is not a path in the tree");
  }

  LayeredDecomposition out;
  out.base = base;
  out.layers.resize(d + 1);
  for (int i = 0; i <= d; ++i) out.layers[i].resize(std::min(i, d - i) + 1);

  // Strip the base edges; every vertex then sits in the component of exactly
  // one base vertex, at its forest distance from it.
  Graph bar = t;
  for (int i = 0; i < d; ++i) bar.remove_edge(base[i], base[i + 1]);
  for (int i = 0; i <= d; ++i) {
    uint64_t comp = 1ULL << base[i];
    uint64_t frontier = comp;
    int level = 0;
    out.layers[i][0].push_back(base[i]);
    while (frontier) {
      uint64_t next = 0;
      for (int v : BitRange(frontier)) next |= bar.adj[v];
      frontier = next & ~comp;
      comp |= frontier;
      ++level;
      for (int v : BitRange(frontier)) {
        if (level > std::min(i, d - i))
          throw NotALongestPath("off-path branch exceeds min(i, d-i); base is not longest");
        out.layers[i][level].push_back(v);
      }
    }
  }
  return out;
}

CoverCheck diametral_path_cover_check(const Graph& t) {
  DistanceMatrix dm = tree_distances(t, "diametral path cover");
  const int d = dm.diameter;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < t.n; ++u)
    for (int w = u + 1; w < t.n; ++w)
      if (dm.at(u, w) == d) pairs.emplace_back(u, w);
  CoverCheck out;
  for (int v = 0; v < t.n; ++v) {
    bool on = false;
    for (auto [u, w] : pairs)
      if (dm.at(u, v) + dm.at(v, w) == d) {
        on = true;
        break;
      }
    if (!on) out.uncovered.push_back(v);
  }
  out.covered = out.uncovered.empty();
  return out;
}

namespace {

// Unique neighbor of x one step closer to target inside a tree.
int step_towards(const Graph& t, const DistanceMatrix& dm, int x, int target) {
  for (int u : BitRange(t.adj[x]))
    if (dm.at(u, target) == dm.at(x, target) - 1) return u;
  return -1;
}

}  // namespace

Graph improve_tree(const Graph& t) {
  DistanceMatrix dm = tree_distances(t, "improve");
  CoverCheck cover = diametral_path_cover_check(t);
  if (cover.covered) throw AlreadyCovered("every vertex already lies on a longest path");
  const int d = dm.diameter;
  const uint64_t w0 = dm.wiener;

  // Fixed longest path: lexicographically smallest diametral endpoint pair.
  std::vector<int> base;
  for (int u = 0; u < t.n && base.empty(); ++u)
    for (int w = u + 1; w < t.n && base.empty(); ++w)
      if (dm.at(u, w) == d) {
        base.push_back(u);
        int cur = u;
        while (cur != w) {
          cur = step_towards(t, dm, cur, w);
          base.push_back(cur);
        }
      }

  const int v = cover.uncovered.front();
  // Attachment index on the base path: the unique base vertex inside v's
  // off-path component, i.e. the one nearest to v.
  int g = 0;
  for (int i = 1; i <= d; ++i)
    if (dm.at(v, base[i]) < dm.at(v, base[g])) g = i;
  if (d - g < g) {  // mirror so that min(g, d-g) = g
    std::reverse(base.begin(), base.end());
    g = d - g;
  }
  const int vg = base[g];

  // v': nearest vertex to v (v itself excluded) towards v_g with degree >= 3.
  int vprime = v;
  do {
    vprime = step_towards(t, dm, vprime, vg);
  } while (t.degree(vprime) < 3 && vprime != vg);

  // Branch of t at v' containing v.
  const int b = step_towards(t, dm, vprime, v);
  uint64_t branch = 1ULL << b;
  uint64_t frontier = branch;
  while (frontier) {
    uint64_t next = 0;
    for (int x : BitRange(frontier)) next |= t.adj[x] & ~(1ULL << vprime);
    frontier = next & ~branch;
    branch |= frontier;
  }
  int ell = 0;
  for (int x : BitRange(branch)) ell = std::max(ell, int(dm.at(vprime, x)));

  // Re-identification targets, in the order the construction names them.
  std::vector<int> targets;
  if (ell <= d) targets.push_back(base[ell]);
  if (ell <= d) targets.push_back(base[d - ell]);
  if (vprime != vg) {
    int towards_path = step_towards(t, dm, vprime, vg);
    for (int y : BitRange(t.adj[vprime]))
      if (y != towards_path && !((branch >> y) & 1)) targets.push_back(y);
  }

  for (int u : targets) {
    if (u == vprime) continue;
    Graph cand = t;
    cand.remove_edge(vprime, b);
    cand.add_edge(u, b);
    WienerStats st = wiener_and_diameter(cand);
    if (st.connected && st.diameter == d && st.wiener > w0) return cand;
  }
  throw Error("improvement construction found no strictly better target");
}

bool is_edge_minimal(const Graph& g, const FamilyFilter& family) {
  family.validate();
  if (!family.matches(g)) throw NotInFamily("graph is not in the requested (n,k,d) family");
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (is_connected(h) && family.matches(h)) return false;
  }
  return true;
}

namespace {

struct SpanningTreeSearch {
  const Graph& g;
  int d;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> chosen;
  std::optional<Graph> found;

  SpanningTreeSearch(const Graph& graph, int diam) : g(graph), d(diam), edges(graph.edges()) {}

  struct UF {
    std::array<int, kMaxVertices> p{};
    void init(int n) {
      for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int v) {
      while (p[v] != v) v = p[v] = p[p[v]];
      return v;
    }
    bool unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      p[b] = a;
      return true;
    }
  };

  bool still_connectable(size_t idx, UF uf) {  // by value: scratch copy
    int comps = 0;
    for (int v = 0; v < g.n; ++v) comps += uf.find(v) == v;
    for (size_t i = idx; i < edges.size() && comps > 1; ++i)
      if (uf.unite(edges[i].first, edges[i].second)) --comps;
    return comps == 1;
  }

  void rec(size_t idx, UF uf) {
    if (found) return;
    if (chosen.size() == size_t(g.n - 1)) {
      Graph tree(g.n);
      for (auto [u, v] : chosen) tree.add_edge(u, v);
      if (wiener_and_diameter(tree).diameter == d) found = tree;
      return;
    }
    if (idx == edges.size()) return;
    if (chosen.size() + (edges.size() - idx) < size_t(g.n - 1)) return;
    auto [u, v] = edges[idx];
    UF with = uf;
    if (with.unite(u, v)) {
      chosen.push_back(edges[idx]);
      rec(idx + 1, with);
      chosen.pop_back();
      if (found) return;
    }
    if (still_connectable(idx + 1, uf)) rec(idx + 1, uf);
  }
};

}  // namespace

std::optional<Graph> tree_reduction_witness(const Graph& g, int d) {
  if (!is_connected(g)) throw DisconnectedError("tree reduction needs a connected graph");
  SpanningTreeSearch search(g, d);
  SpanningTreeSearch::UF uf;
  uf.init(g.n);
  search.rec(0, uf);
  return search.found;
}

bool is_reducible_to_tree(const Graph& g, int d) { return tree_reduction_witness(g, d).has_value(); }

// --- searches ----------------------------------------------------------------

namespace {

Witness make_witness(const Graph& g) {
  Witness w;
  w.graph6 = graph6_encode(g);
  w.code = is_tree(g) ? tree_canonical_code(g) : graph_canonical_form(g);
  w.wiener = wiener_and_diameter(g).wiener;
  return w;
}

struct Partial {
  uint64_t examined = 0;
  uint64_t max_wiener = 0;
  bool any = false;
  std::vector<Witness> witnesses;
  std::vector<Witness> counterexamples;
  std::string checkpoint;
};

void run_stream(const SearchSource& source, const FamilyFilter& filter, const StreamOptions& opt,
                const GraphVisitor& visit, EnumerationStream* stream) {
  switch (source.kind) {
    case SourceKind::Trees:
      enumerate_trees(filter, visit, stream, opt);
      break;
    case SourceKind::ConnectedGraphs:
      enumerate_connected_graphs(filter, visit, stream, opt);
      break;
    case SourceKind::Graph6File:
      read_graph6(source.path, &filter, visit, stream, opt);
      break;
  }
}

Partial scan_partial(const SearchSource& source, const FamilyFilter& filter,
                     const StreamOptions& opt, uint64_t djw_bound) {
  Partial p;
  EnumerationStream stream;
  run_stream(source, filter, opt,
             [&](const Graph& g) {
               WienerStats st = wiener_and_diameter(g);
               if (!st.connected) return true;  // file records outside every family
               ++p.examined;
               if (!p.any || st.wiener > p.max_wiener) {
                 p.any = true;
                 p.max_wiener = st.wiener;
                 p.witnesses.clear();
               }
               if (st.wiener == p.max_wiener) p.witnesses.push_back(make_witness(g));
               if (djw_bound && st.wiener > djw_bound)
                 p.counterexamples.push_back(make_witness(g));
               return true;
             },
             &stream);
  p.checkpoint = stream.checkpoint;
  return p;
}

SearchReport scan(const char* family_name, const SearchSource& source, const FamilyFilter& filter,
                  const SearchOptions& opt, uint64_t djw_bound) {
  filter.validate();
  auto t0 = std::chrono::steady_clock::now();

  std::vector<Partial> parts;
  if (opt.threads > 1 && opt.shard_total == 1) {
    parts.resize(opt.threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < opt.threads; ++i)
      pool.emplace_back([&, i] {
        StreamOptions s;
        s.shard_index = i;
        s.shard_total = opt.threads;
        parts[i] = scan_partial(source, filter, s, djw_bound);
      });
    for (auto& th : pool) th.join();
  } else {
    StreamOptions s;
    s.shard_index = opt.shard_index;
    s.shard_total = opt.shard_total;
    s.resume_token = opt.resume_token;
    parts.push_back(scan_partial(source, filter, s, djw_bound));
  }

  SearchReport r;
  r.family = family_name;
  r.filter = filter;
  r.bound = djw_bound;
  for (const Partial& p : parts) {
    r.examined += p.examined;
    for (const Witness& w : p.counterexamples) r.counterexamples.push_back(w);
    if (!p.any) continue;
    if (r.witnesses.empty() || p.max_wiener > r.max_wiener) {
      if (p.max_wiener > r.max_wiener) r.witnesses.clear();
      r.max_wiener = std::max(r.max_wiener, p.max_wiener);
    }
    if (p.max_wiener == r.max_wiener)
      r.witnesses.insert(r.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  if (parts.size() == 1) r.checkpoint = parts[0].checkpoint;
  auto by_code = [](const Witness& a, const Witness& b) { return a.code < b.code; };
  std::sort(r.witnesses.begin(), r.witnesses.end(), by_code);
  std::sort(r.counterexamples.begin(), r.counterexamples.end(), by_code);
  r.elapsed_ms = uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count());
  return r;
}

}  // namespace

SearchReport max_wiener_search(const SearchSource& source, const FamilyFilter& filter,
                               const SearchOptions& opt) {
  const char* name = source.kind == SourceKind::Trees      ? "trees"
                     : source.kind == SourceKind::ConnectedGraphs ? "connected"
                                                              : "graph6";
  SearchReport r = scan(name, source, filter, opt, 0);
  if (r.examined == 0) throw EmptyFamily("no graph matches the filter");
  return r;
}

SearchReport verify_djw(int d, const SearchSource& source, const SearchOptions& opt) {
  if (d < 3) throw BadParameters("the conjecture concerns diameter >= 3");
  const int n = 2 * d + 1;
  if (source.kind == SourceKind::ConnectedGraphs && n > 9)
    throw SourceUnavailable("generation covers n <= 9; supply a graph6 catalog for d >= 5");
  FamilySpec cyc;
  cyc.tag = FamilyTag::Cycle;
  cyc.n = n;
  const uint64_t bound = closed_form_wiener(cyc);
  FamilyFilter filter;
  filter.n = n;
  filter.diameter = d;
  SearchReport r = scan("djw", source, filter, opt, bound);
  return r;
}

uint64_t max_wiener_two_cuts(int n) {
  if (n < 6) throw BadParameters("two-cut maximum tabulated for n >= 6");
  // 6..9 from the exhaustive searches reproduced by the table command; from
  // n = 10 on the lollipop L_{n,n-2} is the unique maximizer.
  switch (n) {
    case 6:
      return 29;
    case 7:
      return 44;
    case 8:
      return 64;
    case 9:
      return 88;
    default: {
      FamilySpec s;
      s.tag = FamilyTag::Lollipop;
      s.n = n;
      s.g = n - 2;
      return closed_form_wiener(s);
    }
  }
}

uint64_t bound_eq4(int n1, int n2) {
  if (n1 < 2) throw BadParameters("n1 >= 2 required");
  if (n2 < 6) throw BadParameters("n2 >= 6 required");
  // D of the pendant vertex of L_{n2,n2-2}: two path steps plus a detour of 2
  // to every other cycle vertex.
  const uint64_t dz = 3 + 2 * uint64_t(n2 - 3) + cycle_vertex_distance(n2 - 2);
  return uint64_t(n1 - 1) * (n1 - 1) + max_wiener_two_cuts(n2) +
         uint64_t(n2 - 1) * (n1 - 1) + uint64_t(n1 - 1) * dz;
}

std::vector<EdgeMinimalEntry> enumerate_edge_minimal(int n, int k, int d,
                                                     bool require_not_tree_reducible) {
  FamilyFilter family;
  family.n = n;
  family.diameter = d;
  family.cut_vertices = k;
  family.validate();
  std::vector<EdgeMinimalEntry> out;
  enumerate_connected_graphs(
      family,
      [&](const Graph& g) {
        bool minimal = true;
        for (auto [u, v] : g.edges()) {
          Graph h = g;
          h.remove_edge(u, v);
          if (is_connected(h) && family.matches(h)) {
            minimal = false;
            break;
          }
        }
        if (!minimal) return true;
        EdgeMinimalEntry e;
        e.tree_reducible = is_reducible_to_tree(g, d);
        if (require_not_tree_reducible && e.tree_reducible) return true;
        e.graph6 = graph6_encode(g);
        e.code = graph_canonical_form(g);
        e.wiener = wiener_and_diameter(g).wiener;
        out.push_back(std::move(e));
        return true;
      });
  std::sort(out.begin(), out.end(),
            [](const EdgeMinimalEntry& a, const EdgeMinimalEntry& b) { return a.code < b.code; });
  return out;
}

std::vector<CmEvidenceRow> center_median_evidence(const std::vector<std::pair<int, int>>& nd) {
  std::vector<CmEvidenceRow> rows;
  for (auto [n, d] : nd) {
    FamilyFilter filter;
    filter.n = n;
    filter.diameter = d;
    SearchSource trees{SourceKind::Trees, ""};
    CmEvidenceRow row;
    row.n = n;
    row.d = d;
    try {
      SearchReport r = max_wiener_search(trees, filter);
      row.max_wiener = r.max_wiener;
      for (const Witness& w : r.witnesses) {
        Graph g = graph6_decode(w.graph6);
        row.witness_graph6.push_back(w.graph6);
        row.center_median_distance.push_back(center_median(g).center_median_distance);
      }
    } catch (const EmptyFamily&) {
      row.max_wiener = 0;  // family empty; row records zero witnesses
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wlab
