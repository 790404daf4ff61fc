#pragma once
// graph6 codec, bit-exact: N(n) = n+63 for n <= 62, else 126 followed by
// three sextets of n; then the upper triangle of the adjacency matrix read
// column by column (x01, x02, x12, x03, ...), packed big-endian into 6-bit
// groups, zero-padded, each group +63.

#include <string>
#include <string_view>

#include "wlab/graph.hpp"

namespace wlab {

std::string graph6_encode(const Graph& g);

// line_no is only used for error reporting (MalformedRecord / UnsupportedOrder).
Graph graph6_decode(std::string_view record, int line_no = 1);

}  // namespace wlab
