#include <doctest.h>

#include "helpers.hpp"
#include "wlab/blocks.hpp"
#include "wlab/distance.hpp"
#include "wlab/families.hpp"

using namespace wlab;

namespace {

Graph family(const std::string& text) { return build(FamilySpec::parse(text)); }

}  // namespace

TEST_CASE("distances on named graphs") {
  CHECK(distances(family("path:n=4")).wiener == 10);
  CHECK(distances(family("cycle:n=7")).wiener == 42);
  CHECK(distances(family("T5")).wiener == 65);
  CHECK(distances(family("T6")).wiener == 62);
  CHECK(distances(family("path:n=4")).diameter == 3);
  CHECK(distances(family("cycle:n=7")).diameter == 3);
}

TEST_CASE("distances rejects disconnected input") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_THROWS_AS(distances(g), DisconnectedError);
  CHECK_FALSE(wiener_and_diameter(g).connected);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 2 + int(rng() % 11);
    Graph g = oracle::random_connected_graph(n, int(rng() % (n + 2)), rng);
    DistanceMatrix m = distances(g);
    CHECK(static_cast<long long>(m.wiener) == oracle::fw_wiener(g));
    // half-sum identity, exactly
    uint64_t sum = 0;
    for (int v = 0; v < n; ++v) sum += m.vertex_sums[v];
    CHECK(sum == 2 * m.wiener);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(m.at(a, b) == m.at(b, a));
    WienerStats st = wiener_and_diameter(g);
    CHECK(st.connected);
    CHECK(st.wiener == m.wiener);
    CHECK(st.diameter == m.diameter);
  }
}

TEST_CASE("block decomposition of named graphs") {
  BlockCutTree cyc = block_cut_tree(family("cycle:n=7"));
  CHECK(cyc.cut_vertices.empty());
  CHECK(cyc.blocks.size() == 1);
  CHECK(cyc.kind[0] == BlockKind::NonPendant);

  BlockCutTree lol = block_cut_tree(family("lollipop:n=9,g=7"));
  CHECK(lol.cut_vertices.size() == 2);
  CHECK(lol.blocks.size() == 3);
  int k2 = 0, c7 = 0;
  for (const auto& b : lol.blocks) {
    if (b.size() == 2) ++k2;
    if (b.size() == 7) ++c7;
  }
  CHECK(k2 == 2);
  CHECK(c7 == 1);
  // block adjacency: each cut vertex lies in exactly two blocks, and the
  // junction (vertex 0) shares the girth block
  REQUIRE(lol.blocks_at.size() == 2);
  for (const auto& ids : lol.blocks_at) CHECK(ids.size() == 2);
  bool junction_in_cycle = false;
  for (int id : lol.blocks_at[0])
    if (lol.blocks[id].size() == 7) junction_in_cycle = true;
  CHECK(lol.cut_vertices[0] == 0);
  CHECK(junction_in_cycle);

  BlockCutTree g3 = block_cut_tree(family("G3"));
  CHECK(g3.cut_vertices.size() == 3);
  CHECK(g3.blocks.size() == 5);
  int pendant = 0, triangle = 0;
  for (size_t b = 0; b < g3.blocks.size(); ++b) {
    if (g3.kind[b] != BlockKind::NonPendant) ++pendant;
    if (g3.blocks[b].size() == 3) {
      ++triangle;
      CHECK(g3.kind[b] == BlockKind::NonPendant);
    }
  }
  CHECK(pendant == 4);
  CHECK(triangle == 1);
}

TEST_CASE("s-pendant classification on a block path") {
  // bridge - C4 - bridge: both bridges are pendant; each cut vertex of a
  // pendant bridge lies in exactly one non-pendant block
  Graph g = oracle::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {5, 6}});
  BlockCutTree bct = block_cut_tree(g);
  int spendant = 0;
  for (BlockKind k : bct.kind) spendant += k == BlockKind::SPendant;
  CHECK(spendant == 2);
}

TEST_CASE("center and median of small graphs") {
  EccentricityProfile p5 = center_median(family("path:n=5"));
  CHECK(p5.center == std::vector<int>{2});
  CHECK(p5.median == std::vector<int>{2});
  CHECK(p5.center_median_distance == 0);

  EccentricityProfile star = center_median(family("star:n=5"));
  CHECK(star.center == std::vector<int>{0});
  CHECK(star.median == std::vector<int>{0});
  CHECK(star.center_median_distance == 0);
}

TEST_CASE("median of a tree is one vertex or two adjacent vertices") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 1200; ++iter) {
    int n = 3 + int(rng() % 14);
    Graph t = oracle::random_tree(n, rng);
    EccentricityProfile p = center_median(t);
    REQUIRE(!p.median.empty());
    CHECK(p.median.size() <= 2);
    if (p.median.size() == 2) CHECK(t.has_edge(p.median[0], p.median[1]));
    CHECK(p.center.size() <= 2);
    if (p.center.size() == 2) CHECK(t.has_edge(p.center[0], p.center[1]));
  }
}

TEST_CASE("distance function of a tree is strictly convex") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 1200; ++iter) {
    int n = 3 + int(rng() % 12);
    Graph t = oracle::random_tree(n, rng);
    DistanceMatrix m = distances(t);
    for (int w = 0; w < n; ++w)
      for (int u : BitRange(t.adj[w]))
        for (int v : BitRange(t.adj[w]))
          if (u < v) CHECK(2 * m.vertex_sums[w] < m.vertex_sums[u] + m.vertex_sums[v]);
  }
}

TEST_CASE("compose_wiener on worked examples") {
  // two 2-vertex paths glued at an end make P3
  CHECK(compose_wiener(1, 1, 2, 2, 1, 1) == 4);
  // lollipop n=9, g=7 as cycle + 3-path glued at the junction
  CHECK(compose_wiener(42, 4, 7, 3, 12, 3) == 88);
  CHECK(distances(family("lollipop:n=9,g=7")).wiener == 88);

  // star glued at its hub with a path end, against the merged graph
  Graph star = family("star:n=5");
  Graph p3 = family("path:n=3");
  Graph merged = merge_at_vertex(star, 0, p3, 0);
  DistanceMatrix ms = distances(star), mp = distances(p3);
  CHECK(compose_wiener(ms.wiener, mp.wiener, star.n, p3.n, ms.vertex_sums[0], mp.vertex_sums[0]) ==
        distances(merged).wiener);
}

TEST_CASE("composition identity on random cut-vertex gluings") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 1000; ++iter) {
    int n1 = 2 + int(rng() % 7), n2 = 2 + int(rng() % 7);
    Graph g1 = oracle::random_connected_graph(n1, int(rng() % 4), rng);
    Graph g2 = oracle::random_connected_graph(n2, int(rng() % 4), rng);
    int v1 = int(rng() % n1), v2 = int(rng() % n2);
    Graph merged = merge_at_vertex(g1, v1, g2, v2);
    DistanceMatrix m1 = distances(g1), m2 = distances(g2);
    CHECK(compose_wiener(m1.wiener, m2.wiener, n1, n2, m1.vertex_sums[v1], m2.vertex_sums[v2]) ==
          distances(merged).wiener);
  }
}

TEST_CASE("edge deletion strictly increases the Wiener index") {
  Graph c4 = family("cycle:n=4");
  CHECK(distances(c4).wiener == 8);
  Graph p4 = delete_edge(c4, 3, 0);
  CHECK(distances(p4).wiener == 10);

  CHECK_THROWS_AS(delete_edge(c4, 0, 2), EdgeAbsent);
  CHECK_THROWS_AS(delete_edge(c4, 0, 9), IndexOutOfRange);

  std::mt19937_64 rng(19);
  int checked = 0;
  while (checked < 1000) {
    int n = 3 + int(rng() % 8);
    Graph g = oracle::random_connected_graph(n, 1 + int(rng() % 5), rng);
    uint64_t w = distances(g).wiener;
    for (auto [u, v] : g.edges()) {
      Graph h = delete_edge(g, u, v);
      if (!is_connected(h)) continue;
      CHECK(distances(h).wiener > w);
      ++checked;
    }
  }
}

TEST_CASE("merge_at_vertex builds the vertex-identified union") {
  Graph p2 = family("path:n=2");
  Graph merged = merge_at_vertex(p2, 1, p2, 0);
  CHECK(merged.n == 3);
  CHECK(distances(merged).wiener == 4);  // P3
  CHECK(merged.has_edge(0, 1));
  CHECK(merged.has_edge(1, 2));

  Graph pend = add_pendant(family("path:n=3"), 1);
  CHECK(pend.n == 4);
  CHECK(pend.degree(1) == 3);  // now the star K_{1,3}
}
