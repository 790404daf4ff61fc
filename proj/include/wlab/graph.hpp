#pragma once
// Simple undirected graphs on up to 64 vertices. Adjacency is one 64-bit
// neighbor mask per vertex, so neighborhood operations are single word ops.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "wlab/errors.hpp"

namespace wlab {

constexpr int kMaxVertices = 64;

struct Graph {
  int n = 0;
  std::array<uint64_t, kMaxVertices> adj{};

  Graph() = default;
  explicit Graph(int order) : n(order) {
    if (order < 1 || order > kMaxVertices)
      throw BadParameters("graph order must be in 1..64, got " + std::to_string(order));
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
  }

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw BadParameters("self-loops are not allowed");
    adj[u] |= 1ULL << v;
    adj[v] |= 1ULL << u;
  }

  void remove_edge(int u, int v) {
    adj[u] &= ~(1ULL << v);
    adj[v] &= ~(1ULL << u);
  }

  int degree(int v) const { return std::popcount(adj[v]); }

  uint64_t vertex_mask() const { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (uint64_t m = adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
        out.emplace_back(u, std::countr_zero(m));
    return out;
  }

  bool operator==(const Graph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; ++v)
      if (adj[v] != o.adj[v]) return false;
    return true;
  }
};

// Iterate set bits of a mask: for (int v : BitRange(m)) ...
struct BitRange {
  uint64_t mask;
  explicit BitRange(uint64_t m) : mask(m) {}
  struct It {
    uint64_t m;
    int operator*() const { return std::countr_zero(m); }
    It& operator++() {
      m &= m - 1;
      return *this;
    }
    bool operator!=(const It& o) const { return m != o.m; }
  };
  It begin() const { return {mask}; }
  It end() const { return {0}; }
};

bool is_connected(const Graph& g);

// Structural edits. All return fresh graphs; inputs are never mutated.
Graph delete_edge(const Graph& g, int u, int v);
Graph add_pendant(const Graph& g, int v);

// Identify v1 of g1 with v2 of g2; vertices of g1 keep their indices, the
// remaining vertices of g2 follow in index order.
Graph merge_at_vertex(const Graph& g1, int v1, const Graph& g2, int v2);

// Relabel: vertex v of g becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

}  // namespace wlab
