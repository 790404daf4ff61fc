#pragma once
// Test-only oracles, all independent of the library's BFS / canonical paths:
// Floyd-Warshall distances, factorial-time isomorphism, Prufer tree codes,
// labeled-enumeration dedup.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "wlab/graph.hpp"

namespace oracle {

inline wlab::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  wlab::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Floyd-Warshall Wiener index; -1 when disconnected.
inline long long fw_wiener(const wlab::Graph& g) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, inf));
  for (int v = 0; v < g.n; ++v) d[v][v] = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.has_edge(u, v)) d[u][v] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  long long total = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      if (d[i][j] >= inf) return -1;
      total += d[i][j];
    }
  return total;
}

// Exhaustive permutation isomorphism test.
inline bool perm_isomorphic(const wlab::Graph& a, const wlab::Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u)
      for (int v = u + 1; v < a.n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Vertex orbits from the full automorphism group, brute force.
inline std::vector<int> perm_orbits(const wlab::Graph& g) {
  std::vector<int> orbit(g.n);
  std::iota(orbit.begin(), orbit.end(), 0);
  auto root = [&](int v) {
    while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
    return v;
  };
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.n && ok; ++u)
      for (int v = u + 1; v < g.n && ok; ++v)
        if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
    if (ok)
      for (int v = 0; v < g.n; ++v) {
        int a = root(v), b = root(perm[v]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> out(g.n);
  for (int v = 0; v < g.n; ++v) out[v] = root(v);
  return out;
}

// Smallest adjacency bit string over all labelings: a (slow) canonical form.
inline std::vector<int> min_code(const wlab::Graph& g) {
  std::vector<int> perm(g.n), best;
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> code;
    code.reserve(g.n * (g.n - 1) / 2);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) code.push_back(g.has_edge(perm[u], perm[v]));
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline wlab::Graph tree_from_prufer(const std::vector<int>& seq) {
  int n = int(seq.size()) + 2;
  wlab::Graph g(n);
  std::vector<int> deg(n, 1);
  for (int v : seq) ++deg[v];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<int> s = seq;
  for (int v : s) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, v);
    if (--deg[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin(), b = *leaves.rbegin();
  g.add_edge(a, b);
  return g;
}

inline wlab::Graph random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return wlab::Graph(1);
  if (n == 2) return from_edges(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int& v : seq) v = int(rng() % n);
  return tree_from_prufer(seq);
}

// Random connected graph: random tree plus extra random edges.
inline wlab::Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
  wlab::Graph g = random_tree(n, rng);
  for (int i = 0; i < extra_edges; ++i) {
    int u = int(rng() % n), v = int(rng() % n);
    if (u != v) g.add_edge(std::min(u, v), std::max(u, v));
  }
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[int(rng() % (i + 1))]);
  return perm;
}

// All connected graphs on n vertices up to isomorphism, by labeled
// enumeration plus min-code dedup. Usable to n = 6 or so.
inline std::vector<wlab::Graph> all_connected_dedup(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::vector<int>> seen;
  std::vector<wlab::Graph> out;
  for (uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
    wlab::Graph g(n);
    for (size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
    if (!wlab::is_connected(g)) continue;
    auto code = min_code(g);
    if (seen.insert(code).second) out.push_back(g);
  }
  return out;
}

}  // namespace oracle
