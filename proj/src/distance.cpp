#include "wlab/distance.hpp"

#include <algorithm>

namespace wlab {

namespace {

// Level-synchronous BFS over neighbor masks; returns the visited mask and the
// eccentricity, filling dist (0xff left where unreachable).
inline uint64_t bfs_row(const Graph& g, int src, uint8_t* dist, int* ecc, uint32_t* sum) {
  uint64_t seen = 1ULL << src;
  uint64_t frontier = seen;
  dist[src] = 0;
  int level = 0;
  uint32_t s = 0;
  while (frontier) {
    uint64_t next = 0;
    for (int v : BitRange(frontier)) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= frontier;
    ++level;
    if (frontier) {
      s += uint32_t(level) * std::popcount(frontier);
      for (int v : BitRange(frontier)) dist[v] = uint8_t(level);
    }
  }
  *ecc = level - 1;
  *sum = s;
  return seen;
}

}  // namespace

DistanceMatrix distances(const Graph& g) {
  DistanceMatrix m;
  m.n = g.n;
  for (auto& row : m.d) row.fill(0xff);
  for (int v = 0; v < g.n; ++v) {
    int ecc = 0;
    uint32_t sum = 0;
    uint64_t seen = bfs_row(g, v, m.d[v].data(), &ecc, &sum);
    if (seen != g.vertex_mask()) throw DisconnectedError("graph is disconnected");
    m.vertex_sums[v] = sum;
    m.wiener += sum;
    m.diameter = std::max(m.diameter, ecc);
  }
  m.wiener /= 2;
  return m;
}

WienerStats wiener_and_diameter(const Graph& g) {
  WienerStats st;
  uint64_t total = 0;
  int diam = 0;
  const uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.n; ++v) {
    uint64_t seen = 1ULL << v;
    uint64_t frontier = seen;
    int level = 0;
    while (frontier) {
      uint64_t next = 0;
      for (int u : BitRange(frontier)) next |= g.adj[u];
      frontier = next & ~seen;
      seen |= frontier;
      ++level;
      if (frontier) total += uint64_t(level) * std::popcount(frontier);
    }
    if (seen != all) return st;  // connected stays false
    diam = std::max(diam, level - 1);
  }
  st.connected = true;
  st.wiener = total / 2;
  st.diameter = diam;
  return st;
}

EccentricityProfile center_median(const Graph& g) {
  DistanceMatrix m = distances(g);
  EccentricityProfile p;
  p.ecc.resize(g.n);
  int best_ecc = kMaxVertices + 1;
  uint32_t best_sum = ~0u;
  for (int v = 0; v < g.n; ++v) {
    int e = 0;
    for (int u = 0; u < g.n; ++u) e = std::max(e, int(m.d[v][u]));
    p.ecc[v] = e;
    best_ecc = std::min(best_ecc, e);
    best_sum = std::min(best_sum, m.vertex_sums[v]);
  }
  for (int v = 0; v < g.n; ++v) {
    if (p.ecc[v] == best_ecc) p.center.push_back(v);
    if (m.vertex_sums[v] == best_sum) p.median.push_back(v);
  }
  int dist = kMaxVertices + 1;
  for (int c : p.center)
    for (int md : p.median) dist = std::min(dist, int(m.d[c][md]));
  p.center_median_distance = dist;
  return p;
}

}  // namespace wlab
