#pragma once
// Named graph families: constructors and exact closed-form Wiener evaluators.
// Every closed form is an integer polynomial evaluated in 64-bit arithmetic
// with divisibility asserted; no floating point.

#include <cstdint>
#include <string>
#include <vector>

#include "wlab/graph.hpp"

namespace wlab {

enum class FamilyTag {
  Path,         // P_n
  Star,         // K_{1,n-1}
  Cycle,        // C_n
  Lollipop,     // L_{n,g}: C_g plus a pendant path, n >= g+1
  DoubleBroom,  // T(l,k,d): path on d vertices, l and k pendants at its ends
  StarTree,     // S(c_1..c_t): center joined to t vertices of degrees c_i, sum c_i = n-1
  T1, T2, T3, T4,      // fixed trees on 12 vertices, diameter 7
  T5, T6,              // fixed trees on 8 vertices, diameter 4
  T7, T8, T9, T10,     // diameter n-4 candidates, parameter n
  T11, T12, T13, T14, T15, T16, T17, T18, T19, T20,  // diameter n-5 candidates
  T21,                 // spider with four legs of length t, n = 4t+1
  G3, G4, G5, G6,      // fixed graphs on 7 / 9 vertices
  G7, G8, G9, G10,     // fixed graphs on 9 vertices
  G11,                 // 4-cycle plus chord with four legs, n = 4t+1
  G12,                 // triangle with four legs, n = 4t+3
};

struct FamilySpec {
  FamilyTag tag = FamilyTag::Path;
  int n = 0;               // order (Path/Star/Cycle/Lollipop/T7..T20)
  int g = 0;               // girth (Lollipop)
  int l = 0, k = 0, d = 0;  // DoubleBroom
  int t = 0;               // T21 / G11 / G12
  std::vector<int> parts;  // StarTree partition of n-1

  // Canonical text syntax, e.g. "lollipop:n=9,g=7", "T21:t=2",
  // "startree:c=2+3+3", "G3".
  static FamilySpec parse(const std::string& text);
  std::string text() const;
};

// Throws BadParameters naming the violated constraint. Vertex numbering per
// family: longest path first, then branches in figure order.
Graph build(const FamilySpec& spec);

uint64_t closed_form_wiener(const FamilySpec& spec);

// D_{P_n}(v_i) = (n^2 + 2i^2 - (2n-2)i - n) / 2;  D_{C_n}(u) = n^2/4 or (n^2-1)/4.
uint64_t path_vertex_distance(int n, int i);
uint64_t cycle_vertex_distance(int n);

// The maximal caterpillar T(floor((n-d+1)/2), ceil((n-d+1)/2), d-1) in the
// family of caterpillars on n vertices with diameter d, and its Wiener index
// by the published piecewise formula.
FamilySpec max_caterpillar(int n, int diameter);
uint64_t max_caterpillar_wiener(int n, int diameter);

// The balanced star-tree S(k,..,k,k+1,..,k+1), k = floor(sqrt(n-1)), that
// maximizes the Wiener index among trees of diameter at most 4.
FamilySpec wagner_star_tree(int n);

}  // namespace wlab
