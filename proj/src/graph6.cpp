#include "wlab/graph6.hpp"

namespace wlab {

std::string graph6_encode(const Graph& g) {
  std::string out;
  if (g.n <= 62) {
    out.push_back(char(g.n + 63));
  } else {
    out.push_back(char(126));
    out.push_back(char(((g.n >> 12) & 0x3f) + 63));
    out.push_back(char(((g.n >> 6) & 0x3f) + 63));
    out.push_back(char((g.n & 0x3f) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | int(g.has_edge(i, j));
      if (++nbits == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(char((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view record, int line_no) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (record.size() < pos + k) throw MalformedRecord(line_no, "record truncated");
  };
  auto sextet = [&]() {
    need(1);
    unsigned char c = record[pos++];
    if (c < 63 || c > 126) throw MalformedRecord(line_no, "byte outside graph6 range");
    return int(c - 63);
  };

  need(1);
  int n;
  if ((unsigned char)record[0] == 126) {
    ++pos;
    n = (sextet() << 12) | (sextet() << 6) | sextet();
    if (n <= 62) throw MalformedRecord(line_no, "non-canonical order header");
  } else {
    n = sextet();
  }
  if (n < 1) throw UnsupportedOrder("line " + std::to_string(line_no) + ": empty graph");
  if (n > kMaxVertices)
    throw UnsupportedOrder("line " + std::to_string(line_no) + ": order " + std::to_string(n) +
                           " exceeds 64");

  Graph g(n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = sextet();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
      --nbits;
    }
  if (nbits && (acc & ((1 << nbits) - 1)))
    throw MalformedRecord(line_no, "nonzero padding bits");
  if (pos != record.size()) throw MalformedRecord(line_no, "trailing bytes");
  return g;
}

}  // namespace wlab
