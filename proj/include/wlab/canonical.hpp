#pragma once
// Canonical forms: AHU-style codes for trees (any order up to 64) and a
// refinement + backtracking canonical labeling for general graphs (n <= 12).
// Equal codes within a kind hold iff the graphs are isomorphic.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wlab/graph.hpp"

namespace wlab {

enum class CodeKind : uint8_t { Tree, General };

struct CanonicalCode {
  CodeKind kind = CodeKind::General;
  std::vector<uint8_t> bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;  // lowercase hex, for JSON reports
};

constexpr int kMaxCanonVertices = 12;

struct CanonicalResult {
  CanonicalCode code;
  std::array<int, kMaxCanonVertices> lab{};    // canonical position -> vertex
  std::array<int, kMaxCanonVertices> orbit{};  // vertex -> smallest vertex in its orbit
  std::vector<std::array<int, kMaxCanonVertices>> generators;  // automorphisms, vertex -> vertex
};

// Full canonical labeling with automorphism orbits. Throws TooLarge for n > 12.
CanonicalResult canonical_labeling(const Graph& g);

// Length-prefixed upper-triangle bit string of the canonically relabeled graph.
CanonicalCode graph_canonical_form(const Graph& g);

// Center-rooted AHU code; throws NotATree.
CanonicalCode tree_canonical_code(const Graph& t);

// Relabeling-invariant AHU string; an optional marked vertex is folded into
// the code, so equal marked codes hold iff some isomorphism maps one mark to
// the other. Used for tree vertex orbits.
std::string ahu_code(const Graph& t, int marked_vertex = -1);

bool is_tree(const Graph& g);

// Tree codes when both inputs are trees, general codes (n <= 12) otherwise.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace wlab
