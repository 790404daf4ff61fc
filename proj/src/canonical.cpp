#include "wlab/canonical.hpp"

#include <algorithm>
#include <cstring>

#include "wlab/distance.hpp"

namespace wlab {

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.n - 1; }

// --- AHU codes for trees ----------------------------------------------------

namespace {

std::vector<int> tree_centers(const Graph& t) {
  std::vector<int> deg(t.n);
  uint64_t alive = t.vertex_mask();
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  int remaining = t.n;
  std::vector<int> leaves;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] <= 1) leaves.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : leaves) {
      alive &= ~(1ULL << v);
      --remaining;
      for (int u : BitRange(t.adj[v] & alive))
        if (--deg[u] == 1) next.push_back(u);
    }
    leaves = std::move(next);
  }
  std::vector<int> centers;
  for (int v : BitRange(alive)) centers.push_back(v);
  return centers;
}

std::string ahu_rooted(const Graph& t, int v, int parent, int marked) {
  std::vector<std::string> kids;
  for (int u : BitRange(t.adj[v]))
    if (u != parent) kids.push_back(ahu_rooted(t, u, v, marked));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  if (v == marked) out += '*';
  for (auto& k : kids) out += k;
  out += ')';
  return out;
}

}  // namespace

std::string ahu_code(const Graph& t, int marked_vertex) {
  if (!is_tree(t)) throw NotATree("AHU code needs a tree");
  std::vector<int> centers = tree_centers(t);
  if (centers.size() == 1) return "C" + ahu_rooted(t, centers[0], -1, marked_vertex);
  std::string a = ahu_rooted(t, centers[0], centers[1], marked_vertex);
  std::string b = ahu_rooted(t, centers[1], centers[0], marked_vertex);
  return "E" + (a <= b ? a + b : b + a);
}

CanonicalCode tree_canonical_code(const Graph& t) {
  std::string s = ahu_code(t);
  CanonicalCode code;
  code.kind = CodeKind::Tree;
  code.bytes.push_back(uint8_t(t.n));
  code.bytes.insert(code.bytes.end(), s.begin(), s.end());
  return code;
}

// --- canonical labeling of general graphs (n <= 12) -------------------------

namespace {

constexpr int KN = kMaxCanonVertices;

// Ordered partition of the vertex set: vertices listed in pi, cell boundaries
// marked in starts (bit p set iff position p opens a cell).
struct Partition {
  int n = 0;
  std::array<int, KN> pi{};
  uint16_t starts = 0;

  int cell_end(int begin) const {
    int p = begin + 1;
    while (p < n && !((starts >> p) & 1)) ++p;
    return p;
  }
  bool discrete() const { return starts == uint16_t((1u << n) - 1); }
};

void refine(const Graph& g, Partition& part) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int sb = 0; sb < part.n; sb = part.cell_end(sb)) {
      uint64_t smask = 0;
      int se = part.cell_end(sb);
      for (int p = sb; p < se; ++p) smask |= 1ULL << part.pi[p];
      for (int xb = 0; xb < part.n;) {
        int xe = part.cell_end(xb);
        if (xe - xb > 1) {
          int cnt[KN];
          bool uniform = true;
          for (int p = xb; p < xe; ++p) {
            cnt[p - xb] = std::popcount(g.adj[part.pi[p]] & smask);
            if (cnt[p - xb] != cnt[0]) uniform = false;
          }
          if (!uniform) {
            // sort the segment by count, ties by current order (stable)
            std::array<std::pair<int, int>, KN> keyed;
            for (int p = xb; p < xe; ++p) keyed[p - xb] = {cnt[p - xb], part.pi[p]};
            std::stable_sort(keyed.begin(), keyed.begin() + (xe - xb),
                             [](auto& a, auto& b) { return a.first < b.first; });
            for (int p = xb; p < xe; ++p) {
              part.pi[p] = keyed[p - xb].second;
              if (p > xb && keyed[p - xb].first != keyed[p - xb - 1].first)
                part.starts |= uint16_t(1u << p);
            }
            changed = true;
          }
        }
        xb = xe;
      }
      if (changed) break;  // boundaries moved; rescan from the first cell
    }
  }
}

struct UnionFind {
  std::array<int, KN> parent{};
  void init(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smallest vertex as the root
  }
};

struct CanonSearch {
  const Graph& g;
  int n;
  bool have_best = false;
  std::array<uint64_t, 2> best_code{};
  std::array<int, KN> best_lab{};
  UnionFind orbits;
  std::vector<std::array<int, KN>> generators;
  std::vector<int> prefix;  // individualized vertices along the current branch

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n) { orbits.init(n); }

  std::array<uint64_t, 2> pack(const std::array<int, KN>& lab) const {
    std::array<uint64_t, 2> w{};
    int t = 0;
    for (int i = 0; i < n; ++i) {
      uint64_t row = g.adj[lab[i]];
      for (int j = i + 1; j < n; ++j, ++t)
        if ((row >> lab[j]) & 1) w[t >> 6] |= 1ULL << (63 - (t & 63));
    }
    return w;
  }

  void leaf(const Partition& part) {
    std::array<int, KN> lab{};
    for (int p = 0; p < n; ++p) lab[p] = part.pi[p];
    auto code = pack(lab);
    if (!have_best || code > best_code) {
      have_best = true;
      best_code = code;
      best_lab = lab;
    } else if (code == best_code) {
      std::array<int, KN> phi{};
      for (int p = 0; p < n; ++p) phi[best_lab[p]] = lab[p];
      bool identity = true;
      for (int v = 0; v < n; ++v)
        if (phi[v] != v) identity = false;
      if (!identity) {
        for (int v = 0; v < n; ++v) orbits.unite(v, phi[v]);
        generators.push_back(phi);
      }
    }
  }

  // Orbits of the subgroup (of the discovered generators) fixing the current
  // prefix pointwise. Pruning a candidate equivalent under such an
  // automorphism skips an exact mirror image of an explored subtree.
  UnionFind stabilizer_orbits() const {
    UnionFind uf;
    uf.init(n);
    for (const auto& phi : generators) {
      bool fixes = true;
      for (int w : prefix)
        if (phi[w] != w) {
          fixes = false;
          break;
        }
      if (fixes)
        for (int v = 0; v < n; ++v) uf.unite(v, phi[v]);
    }
    return uf;
  }

  void search(const Partition& part) {
    if (part.discrete()) {
      leaf(part);
      return;
    }
    int tb = 0;
    while (part.cell_end(tb) == tb + 1) tb = tb + 1;
    int te = part.cell_end(tb);
    uint64_t tried = 0;  // candidates already expanded at this node
    for (int p = tb; p < te; ++p) {
      int v = part.pi[p];
      if (!generators.empty()) {
        UnionFind stab = stabilizer_orbits();
        bool skip = false;
        for (int u : BitRange(tried))
          if (stab.find(u) == stab.find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      tried |= 1ULL << v;
      Partition child = part;
      // individualize v: cell becomes [{v}, rest]
      int q = tb;
      child.pi[q++] = v;
      for (int r = tb; r < te; ++r)
        if (part.pi[r] != v) child.pi[q++] = part.pi[r];
      child.starts |= uint16_t(1u << (tb + 1));
      refine(g, child);
      prefix.push_back(v);
      search(child);
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g) {
  if (g.n > KN) throw TooLarge("canonical labeling supports n <= 12");
  const int n = g.n;

  // Initial coloring: (degree, sorted distance row), unreachable encoded as 63.
  std::array<std::array<uint8_t, KN + 2>, KN> key{};
  for (int v = 0; v < n; ++v) {
    uint64_t seen = 1ULL << v;
    uint64_t frontier = seen;
    std::array<uint8_t, KN> row;
    row.fill(63);
    row[v] = 0;
    int level = 0;
    while (frontier) {
      uint64_t next = 0;
      for (int u : BitRange(frontier)) next |= g.adj[u];
      frontier = next & ~seen;
      seen |= frontier;
      ++level;
      for (int u : BitRange(frontier)) row[u] = uint8_t(level);
    }
    std::sort(row.begin(), row.begin() + n);
    key[v][0] = uint8_t(g.degree(v));
    for (int i = 0; i < n; ++i) key[v][i + 1] = row[i];
  }
  std::array<int, KN> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
    int c = std::memcmp(key[a].data(), key[b].data(), KN + 2);
    return c < 0 || (c == 0 && a < b);
  });

  Partition part;
  part.n = n;
  part.starts = 1;
  for (int p = 0; p < n; ++p) {
    part.pi[p] = order[p];
    if (p > 0 && std::memcmp(key[order[p]].data(), key[order[p - 1]].data(), KN + 2) != 0)
      part.starts |= uint16_t(1u << p);
  }
  refine(g, part);

  CanonSearch s(g);
  s.search(part);

  CanonicalResult res;
  res.lab = s.best_lab;
  for (int v = 0; v < n; ++v) res.orbit[v] = s.orbits.find(v);
  res.generators = std::move(s.generators);

  res.code.kind = CodeKind::General;
  res.code.bytes.push_back(uint8_t(n));
  int tri_bits = n * (n - 1) / 2;
  for (int byte = 0; byte * 8 < tri_bits; ++byte)
    res.code.bytes.push_back(uint8_t((s.best_code[byte / 8] >> (56 - 8 * (byte % 8))) & 0xff));
  return res;
}

CanonicalCode graph_canonical_form(const Graph& g) { return canonical_labeling(g).code; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (is_tree(a) && is_tree(b)) return tree_canonical_code(a) == tree_canonical_code(b);
  return graph_canonical_form(a) == graph_canonical_form(b);
}

}  // namespace wlab
