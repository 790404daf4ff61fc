#pragma once
// Biconnected decomposition: blocks, cut vertices, pendant classification.
// A block is pendant iff it contains exactly one cut vertex; it is s-pendant
// iff it is pendant and its cut vertex lies in exactly one non-pendant block.

#include <vector>

#include "wlab/graph.hpp"

namespace wlab {

enum class BlockKind { NonPendant, Pendant, SPendant };

struct BlockCutTree {
  std::vector<int> cut_vertices;            // ascending
  std::vector<std::vector<int>> blocks;     // vertex sets, each ascending; blocks sorted
  std::vector<BlockKind> kind;              // per block
  std::vector<std::vector<int>> blocks_at;  // blocks_at[i] = block ids sharing cut_vertices[i]

  bool is_cut(int v) const {
    for (int c : cut_vertices)
      if (c == v) return true;
    return false;
  }
  int pendant_count() const {
    int k = 0;
    for (BlockKind b : kind)
      if (b != BlockKind::NonPendant) ++k;
    return k;
  }
};

// Throws DisconnectedError.
BlockCutTree block_cut_tree(const Graph& g);

// Cut-vertex count only (Tarjan, no block extraction); fast path for filters.
int count_cut_vertices(const Graph& g);

// Cut vertices as a bit mask; input must be connected (unchecked).
uint64_t cut_vertex_mask(const Graph& g);

}  // namespace wlab
