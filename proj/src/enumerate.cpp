#include "wlab/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "wlab/blocks.hpp"
#include "wlab/canonical.hpp"
#include "wlab/distance.hpp"
#include "wlab/graph6.hpp"

namespace wlab {

void FamilyFilter::validate() const {
  if (n < 1 || n > kMaxVertices) throw BadFilter("filter needs 1 <= n <= 64");
  if (diameter && (*diameter < 1 || *diameter > n - 1))
    throw BadFilter("diameter filter out of 1..n-1");
  if (cut_vertices && (*cut_vertices < 0 || *cut_vertices > n - 2))
    throw BadFilter("cut-vertex filter out of 0..n-2");
}

bool FamilyFilter::matches(const Graph& g) const {
  if (g.n != n) return false;
  if (diameter || cut_vertices) {
    if (!is_connected(g)) return false;
    if (diameter && wiener_and_diameter(g).diameter != *diameter) return false;
    if (cut_vertices && count_cut_vertices(g) != *cut_vertices) return false;
  }
  if (predicate && !predicate(g)) return false;
  return true;
}

namespace {

std::vector<uint64_t> parse_token(const std::string& token) {
  std::vector<uint64_t> out;
  size_t pos = 0;
  while (pos < token.size()) {
    size_t comma = token.find(',', pos);
    if (comma == std::string::npos) comma = token.size();
    out.push_back(std::stoull(token.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::string format_token(const std::vector<uint64_t>& path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(path[i]);
  }
  return out;
}

uint64_t fnv1a(const std::vector<uint64_t>& path) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (uint64_t v : path)
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  return h;
}

// Shared DFS plumbing: resume fast-forward, deterministic sharding by path
// hash at a fixed level, checkpoint tracking, early stop.
struct StreamCore {
  const FamilyFilter& filter;
  const GraphVisitor& visit;
  EnumerationStream* stream;
  int shard_index, shard_total, shard_level;
  std::vector<uint64_t> resume;
  std::vector<uint64_t> path;
  bool stopped = false;

  StreamCore(const FamilyFilter& f, const GraphVisitor& v, EnumerationStream* st,
             const StreamOptions& opt, int shard_lvl)
      : filter(f), visit(v), stream(st), shard_index(opt.shard_index),
        shard_total(opt.shard_total), shard_level(shard_lvl) {
    if (shard_total < 1 || shard_index < 0 || shard_index >= shard_total)
      throw BadFilter("shard index out of range");
    if (!opt.resume_token.empty()) resume = parse_token(opt.resume_token);
    if (stream) stream->source = "generated";
  }

  // Order of a node's subtree owner; nodes above the shard level belong to all shards.
  bool shard_owns() const {
    if (int(path.size()) != shard_level - 1) return true;
    return int(fnv1a(path) % uint64_t(shard_total)) == shard_index;
  }

  void emit(const Graph& g) {
    if (!filter.matches(g)) return;
    if (stream) {
      ++stream->emitted;
      stream->checkpoint = format_token(path);
    }
    if (!visit(g)) stopped = true;
  }
};

// --- free trees: canonical parent = drop the leaf with the largest marked code

struct TreeGen : StreamCore {
  using StreamCore::StreamCore;

  bool accept_new_leaf(const Graph& child) const {
    int z = child.n - 1;
    std::string zcode = ahu_code(child, z);
    for (int v = 0; v < child.n; ++v)
      if (v != z && child.degree(v) == 1 && ahu_code(child, v) > zcode) return false;
    return true;
  }

  void grow(const Graph& t, const uint64_t* rtail, size_t rlen) {
    if (stopped) return;
    if (t.n == filter.n) {
      if (rlen == 0 && !resume.empty() && rtail != nullptr) return;  // resume point itself
      emit(t);
      return;
    }
    if (filter.diameter) {
      int diam = t.n > 1 ? wiener_and_diameter(t).diameter : 0;
      if (diam > *filter.diameter) return;
      if (diam + (filter.n - t.n) < *filter.diameter) return;
    }
    std::vector<std::string> seen;
    for (int v = 0; v < t.n; ++v) {
      if (stopped) return;
      std::string vcode = ahu_code(t, v);
      if (std::find(seen.begin(), seen.end(), vcode) != seen.end()) continue;
      seen.push_back(std::move(vcode));

      const uint64_t* child_tail = nullptr;
      size_t child_len = 0;
      if (rtail != nullptr && rlen > 0) {
        if (uint64_t(v) < rtail[0]) continue;  // finished in a previous run
        if (uint64_t(v) == rtail[0]) {
          child_tail = rtail + 1;
          child_len = rlen - 1;
        }
      }
      Graph child = add_pendant(t, v);
      if (!accept_new_leaf(child)) continue;
      path.push_back(uint64_t(v));
      if (shard_owns()) grow(child, child_tail, child_tail ? child_len : 0);
      path.pop_back();
      if (child_tail != nullptr) rtail = nullptr;  // later siblings run normally
    }
  }
};

// --- connected graphs: canonical augmentation ------------------------------
// Parent of C = C minus the non-cut vertex latest in canonical order; a child
// is kept iff the added vertex lies in that vertex's orbit. Neighborhoods are
// deduplicated per parent by subset orbits under Aut(parent).

struct GraphGen : StreamCore {
  using StreamCore::StreamCore;

  static uint32_t apply_perm(const std::array<int, kMaxCanonVertices>& phi, uint32_t mask,
                             int k) {
    uint32_t out = 0;
    for (int v : BitRange(mask)) out |= 1u << phi[v];
    (void)k;
    return out;
  }

  std::vector<uint32_t> neighborhood_reps(
      int k, const std::vector<std::array<int, kMaxCanonVertices>>& gens) const {
    std::vector<uint32_t> reps;
    const uint32_t limit = 1u << k;
    if (gens.empty()) {
      reps.reserve(limit - 1);
      for (uint32_t m = 1; m < limit; ++m) reps.push_back(m);
      return reps;
    }
    std::vector<uint32_t> parent(limit);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t s) {
      while (parent[s] != s) s = parent[s] = parent[parent[s]];
      return s;
    };
    for (const auto& phi : gens)
      for (uint32_t m = 1; m < limit; ++m) {
        uint32_t a = find(m), b = find(apply_perm(phi, m, k));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    for (uint32_t m = 1; m < limit; ++m)
      if (find(m) == m) reps.push_back(m);
    return reps;
  }

  bool accept_child(const Graph& child, const CanonicalResult& canon) const {
    const int z = child.n - 1;
    uint64_t cuts = cut_vertex_mask(child);
    if ((cuts >> z) & 1) return false;
    for (int pos = child.n - 1; pos >= 0; --pos) {
      int v = canon.lab[pos];
      if (!((cuts >> v) & 1)) return canon.orbit[v] == canon.orbit[z];
    }
    return false;  // unreachable: a connected graph has non-cut vertices
  }

  void grow(const Graph& g, const std::vector<std::array<int, kMaxCanonVertices>>& gens,
            const uint64_t* rtail, size_t rlen) {
    if (stopped) return;
    if (g.n == filter.n) {
      if (rlen == 0 && !resume.empty() && rtail != nullptr) return;
      emit(g);
      return;
    }
    for (uint32_t mask : neighborhood_reps(g.n, gens)) {
      if (stopped) return;
      const uint64_t* child_tail = nullptr;
      size_t child_len = 0;
      if (rtail != nullptr && rlen > 0) {
        if (mask < rtail[0]) continue;
        if (mask == rtail[0]) {
          child_tail = rtail + 1;
          child_len = rlen - 1;
        }
      }
      Graph child(g.n + 1);
      child.adj = g.adj;
      for (int v : BitRange(mask)) child.add_edge(g.n, v);
      CanonicalResult canon = canonical_labeling(child);
      if (!accept_child(child, canon)) continue;
      path.push_back(mask);
      if (shard_owns()) grow(child, canon.generators, child_tail, child_tail ? child_len : 0);
      path.pop_back();
      if (child_tail != nullptr) rtail = nullptr;
    }
  }
};

}  // namespace

void enumerate_trees(const FamilyFilter& filter, const GraphVisitor& visit,
                     EnumerationStream* stream, const StreamOptions& opt) {
  filter.validate();
  if (filter.n > 18) throw TooLargeForGeneration("tree generation capped at n = 18");
  TreeGen gen(filter, visit, stream, opt, std::min(filter.n, 9));
  Graph root(1);
  if (filter.n == 1) {
    gen.emit(root);
    return;
  }
  gen.grow(root, gen.resume.empty() ? nullptr : gen.resume.data(), gen.resume.size());
}

void enumerate_connected_graphs(const FamilyFilter& filter, const GraphVisitor& visit,
                                EnumerationStream* stream, const StreamOptions& opt) {
  filter.validate();
  if (filter.n > 9)
    throw TooLargeForGeneration("graph generation capped at n = 9; ingest a graph6 catalog");
  GraphGen gen(filter, visit, stream, opt, std::min(filter.n, 6));
  Graph root(1);
  if (filter.n == 1) {
    gen.emit(root);
    return;
  }
  gen.grow(root, {}, gen.resume.empty() ? nullptr : gen.resume.data(), gen.resume.size());
}

void read_graph6(const std::string& path, const FamilyFilter* filter, const GraphVisitor& visit,
                 EnumerationStream* stream, const StreamOptions& opt) {
  if (filter) filter->validate();
  if (opt.shard_total < 1 || opt.shard_index < 0 || opt.shard_index >= opt.shard_total)
    throw BadFilter("shard index out of range");
  int resume_line = opt.resume_token.empty() ? 0 : std::stoi(opt.resume_token);
  std::ifstream in(path);
  if (!in) throw SourceUnavailable("cannot open " + path);
  if (stream) stream->source = "graph6:" + path;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if ((line_no - 1) % opt.shard_total != opt.shard_index) continue;
    if (line_no <= resume_line) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = graph6_decode(line, line_no);
    if (filter && !filter->matches(g)) continue;
    if (stream) {
      ++stream->emitted;
      stream->checkpoint = std::to_string(line_no);
    }
    if (!visit(g)) break;
  }
}

uint64_t write_graph6(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw SourceUnavailable("cannot open " + path + " for writing");
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
  return graphs.size();
}

}  // namespace wlab
