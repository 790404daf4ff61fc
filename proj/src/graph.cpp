#include "wlab/graph.hpp"

namespace wlab {

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  uint64_t seen = 1;
  uint64_t frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (int v : BitRange(frontier)) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

Graph delete_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (!g.has_edge(u, v))
    throw EdgeAbsent("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

Graph add_pendant(const Graph& g, int v) {
  g.check_vertex(v);
  Graph out(g.n + 1);
  out.adj = g.adj;
  out.add_edge(g.n, v);
  return out;
}

Graph merge_at_vertex(const Graph& g1, int v1, const Graph& g2, int v2) {
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  Graph out(g1.n + g2.n - 1);
  out.adj = g1.adj;
  auto map2 = [&](int u) {
    if (u == v2) return v1;
    return g1.n + u - (u > v2 ? 1 : 0);
  };
  for (int u = 0; u < g2.n; ++u)
    for (int w : BitRange(g2.adj[u] >> (u + 1) << (u + 1))) out.add_edge(map2(u), map2(w));
  return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int w : BitRange(g.adj[u] >> (u + 1) << (u + 1))) out.add_edge(perm[u], perm[w]);
  return out;
}

}  // namespace wlab
