#include "wlab/blocks.hpp"

#include <algorithm>

namespace wlab {

namespace {

struct Tarjan {
  const Graph& g;
  int timer = 0;
  std::array<int, kMaxVertices> disc{}, low{};
  std::array<bool, kMaxVertices> cut{};
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>>* blocks;  // null when only cut vertices are wanted

  explicit Tarjan(const Graph& graph, std::vector<std::vector<int>>* out) : g(graph), blocks(out) {
    disc.fill(-1);
  }

  void pop_block(int u, int v) {
    uint64_t members = 0;
    while (true) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      members |= (1ULL << a) | (1ULL << b);
      if (a == u && b == v) break;
    }
    std::vector<int> verts;
    for (int x : BitRange(members)) verts.push_back(x);
    blocks->push_back(std::move(verts));
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int v : BitRange(g.adj[u])) {
      if (v == parent) continue;
      if (disc[v] == -1) {
        ++children;
        if (blocks) edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != -1) cut[u] = true;
          if (blocks) pop_block(u, v);
        }
      } else if (disc[v] < disc[u]) {
        if (blocks) edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent == -1 && children > 1) cut[u] = true;
  }
};

}  // namespace

int count_cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("cut vertices need a connected graph");
  Tarjan t(g, nullptr);
  t.dfs(0, -1);
  int k = 0;
  for (int v = 0; v < g.n; ++v) k += t.cut[v];
  return k;
}

uint64_t cut_vertex_mask(const Graph& g) {
  Tarjan t(g, nullptr);
  t.dfs(0, -1);
  uint64_t mask = 0;
  for (int v = 0; v < g.n; ++v)
    if (t.cut[v]) mask |= 1ULL << v;
  return mask;
}

BlockCutTree block_cut_tree(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("block decomposition needs a connected graph");
  BlockCutTree bct;
  if (g.n == 1) {
    bct.blocks.push_back({0});
    bct.kind.push_back(BlockKind::NonPendant);
    return bct;
  }
  std::vector<std::vector<int>> raw;
  Tarjan t(g, &raw);
  t.dfs(0, -1);
  for (int v = 0; v < g.n; ++v)
    if (t.cut[v]) bct.cut_vertices.push_back(v);
  for (auto& b : raw) std::sort(b.begin(), b.end());
  std::sort(raw.begin(), raw.end());
  bct.blocks = std::move(raw);

  uint64_t cut_mask = 0;
  for (int c : bct.cut_vertices) cut_mask |= 1ULL << c;
  std::vector<int> cuts_in(bct.blocks.size(), 0);
  for (size_t b = 0; b < bct.blocks.size(); ++b)
    for (int v : bct.blocks[b]) cuts_in[b] += (cut_mask >> v) & 1;

  bct.kind.assign(bct.blocks.size(), BlockKind::NonPendant);
  for (size_t b = 0; b < bct.blocks.size(); ++b)
    if (cuts_in[b] == 1) bct.kind[b] = BlockKind::Pendant;

  bct.blocks_at.resize(bct.cut_vertices.size());
  for (size_t i = 0; i < bct.cut_vertices.size(); ++i)
    for (size_t b = 0; b < bct.blocks.size(); ++b)
      if (std::binary_search(bct.blocks[b].begin(), bct.blocks[b].end(), bct.cut_vertices[i]))
        bct.blocks_at[i].push_back(int(b));

  // s-pendant: pendant and the cut vertex lies in exactly one non-pendant block.
  for (size_t b = 0; b < bct.blocks.size(); ++b) {
    if (bct.kind[b] != BlockKind::Pendant) continue;
    int c = -1;
    for (int v : bct.blocks[b])
      if ((cut_mask >> v) & 1) c = v;
    size_t ci = std::lower_bound(bct.cut_vertices.begin(), bct.cut_vertices.end(), c) -
                bct.cut_vertices.begin();
    int non_pendant = 0;
    for (int id : bct.blocks_at[ci])
      if (cuts_in[id] != 1) ++non_pendant;
    if (non_pendant == 1) bct.kind[b] = BlockKind::SPendant;
  }
  return bct;
}

}  // namespace wlab
