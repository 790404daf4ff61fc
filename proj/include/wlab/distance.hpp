#pragma once
// Exact distances: all-pairs BFS, vertex distance sums D_G(v), the Wiener
// index W(G) = 1/2 * sum_v D_G(v), eccentricities, center and median.

#include <array>
#include <cstdint>
#include <vector>

#include "wlab/graph.hpp"

namespace wlab {

struct DistanceMatrix {
  int n = 0;
  std::array<std::array<uint8_t, kMaxVertices>, kMaxVertices> d{};
  std::array<uint32_t, kMaxVertices> vertex_sums{};
  uint64_t wiener = 0;
  int diameter = 0;

  uint8_t at(int u, int v) const { return d[u][v]; }
};

// Throws DisconnectedError when any pair is unreachable.
DistanceMatrix distances(const Graph& g);

// Hot path for searches: no matrix is stored, nothing is thrown.
struct WienerStats {
  bool connected = false;
  uint64_t wiener = 0;
  int diameter = 0;
};
WienerStats wiener_and_diameter(const Graph& g);

struct EccentricityProfile {
  std::vector<int> ecc;     // e(v) per vertex
  std::vector<int> center;  // argmin ecc, ascending
  std::vector<int> median;  // argmin D_G(v), ascending
  int center_median_distance = 0;
};
EccentricityProfile center_median(const Graph& g);

// Wiener index of two graphs glued at a shared cut vertex w:
//   W = w1 + w2 + (n1-1)*d2w + (n2-1)*d1w
// where d1w, d2w are the distance sums of w inside each part.
inline uint64_t compose_wiener(uint64_t w1, uint64_t w2, int n1, int n2, uint64_t d1w,
                               uint64_t d2w) {
  return w1 + w2 + uint64_t(n1 - 1) * d2w + uint64_t(n2 - 1) * d1w;
}

}  // namespace wlab
