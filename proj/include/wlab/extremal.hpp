#pragma once
// Search procedures: extremal Wiener searches over enumerated families, the
// longest-path cover condition and its improvement transformation,
// edge-minimality and tree-reducibility, the odd-cycle diameter-bound
// verifier and the two-part composition bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlab/canonical.hpp"
#include "wlab/enumerate.hpp"
#include "wlab/graph.hpp"

namespace wlab {

// --- layered view of a tree along a fixed longest path ---------------------

struct LayeredDecomposition {
  std::vector<int> base;  // v_0..v_d, a longest path
  // layers[i][j]: vertices at off-path distance j from v_i, 0 <= j <= min(i, d-i).
  std::vector<std::vector<std::vector<int>>> layers;

  const std::vector<int>& layer(int i, int j) const { return layers[i][j]; }
};

// base must be a path in t whose length equals diam(t); throws NotALongestPath.
LayeredDecomposition layered_decomposition(const Graph& t, const std::vector<int>& base);

struct CoverCheck {
  bool covered = false;
  std::vector<int> uncovered;  // ascending
};

// For each vertex, whether it lies on some path of length diam(t). Trees only.
CoverCheck diametral_path_cover_check(const Graph& t);

// Detach the offending branch and re-identify it per the cases of the
// improvement construction; returns a tree of equal order and diameter with
// strictly larger Wiener index. Throws AlreadyCovered when every vertex
// already lies on a longest path.
Graph improve_tree(const Graph& t);

// True iff no single edge deletion keeps the graph in the (n,k,d) family.
// Throws NotInFamily when g itself is not in it.
bool is_edge_minimal(const Graph& g, const FamilyFilter& family);

// A spanning tree of g with diameter exactly d, if one exists.
std::optional<Graph> tree_reduction_witness(const Graph& g, int d);
bool is_reducible_to_tree(const Graph& g, int d);

// --- search reports ---------------------------------------------------------

struct Witness {
  std::string graph6;
  CanonicalCode code;
  uint64_t wiener = 0;
};

struct SearchReport {
  std::string family;  // "trees", "connected", "graph6:<path>", ...
  FamilyFilter filter;
  uint64_t examined = 0;  // graphs that matched the filter
  uint64_t max_wiener = 0;
  std::vector<Witness> witnesses;        // all maximizers, sorted by code
  std::vector<Witness> counterexamples;  // verify-djw only
  uint64_t bound = 0;                    // verify-djw only
  uint64_t elapsed_ms = 0;
  std::string checkpoint;
};

enum class SourceKind { Trees, ConnectedGraphs, Graph6File };

struct SearchSource {
  SourceKind kind = SourceKind::ConnectedGraphs;
  std::string path;  // Graph6File only
};

struct SearchOptions {
  int threads = 1;
  int shard_index = 0;
  int shard_total = 1;
  std::string resume_token;
};

// Exact maximum and every witness up to isomorphism. Throws EmptyFamily.
SearchReport max_wiener_search(const SearchSource& source, const FamilyFilter& filter,
                               const SearchOptions& opt = {});

// Checks W(G) <= W(C_{2d+1}) over all connected graphs of diameter d on 2d+1
// vertices; counterexamples listed (expected none). Throws SourceUnavailable
// when the generator cannot cover 2d+1 vertices and no file is given.
SearchReport verify_djw(int d, const SearchSource& source, const SearchOptions& opt = {});

// (n1-1)^2 + maxW(C_{n2,2}) + (n2-1)(n1-1) + (n1-1) * D_{L_{n2,n2-2}}(z),
// z the pendant vertex of the lollipop. Throws BadParameters.
uint64_t bound_eq4(int n1, int n2);

// Largest Wiener index over graphs with n vertices and exactly 2 cut vertices.
// Exhaustive for n <= 9; the published characterisation (lollipop L_{n,n-2})
// for n >= 10.
uint64_t max_wiener_two_cuts(int n);

struct EdgeMinimalEntry {
  std::string graph6;
  CanonicalCode code;
  uint64_t wiener = 0;
  bool tree_reducible = false;
};

// All edge-minimal classes in the (n,k,d) family, sorted by code. With
// require_not_tree_reducible, only those with no spanning tree of diameter d.
std::vector<EdgeMinimalEntry> enumerate_edge_minimal(int n, int k, int d,
                                                     bool require_not_tree_reducible = false);

// Center-median evidence over the maximizers of trees with given (n, d).
struct CmEvidenceRow {
  int n = 0;
  int d = 0;
  uint64_t max_wiener = 0;
  std::vector<std::string> witness_graph6;
  std::vector<int> center_median_distance;  // per witness
};
std::vector<CmEvidenceRow> center_median_evidence(const std::vector<std::pair<int, int>>& nd);

}  // namespace wlab
