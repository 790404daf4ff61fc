#include <doctest.h>

#include <functional>
#include <numeric>

#include "helpers.hpp"
#include "wlab/blocks.hpp"
#include "wlab/canonical.hpp"
#include "wlab/distance.hpp"
#include "wlab/families.hpp"

using namespace wlab;

namespace {

Graph family(const std::string& text) { return build(FamilySpec::parse(text)); }

void check_spec(const FamilySpec& s) {
  Graph g = build(s);
  CAPTURE(s.text());
  CHECK(closed_form_wiener(s) == distances(g).wiener);
}

// Every partition of m in non-increasing order.
void for_each_partition(int m, std::vector<int>& cur, const std::function<void()>& fn) {
  if (m == 0) {
    fn();
    return;
  }
  int hi = cur.empty() ? m : std::min(m, cur.back());
  for (int next = hi; next >= 1; --next) {
    cur.push_back(next);
    for_each_partition(m - next, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("golden Wiener values of the fixed trees and graphs") {
  const std::pair<const char*, uint64_t> golden[] = {
      {"T1", 213}, {"T2", 218}, {"T3", 236}, {"T4", 230}, {"T5", 65}, {"T6", 62},
      {"G3", 40},  {"G4", 76},  {"G5", 78},  {"G6", 79},  {"G7", 84}, {"G8", 82},
      {"G9", 80},  {"G10", 79},
  };
  for (auto [name, w] : golden) {
    CAPTURE(name);
    CHECK(closed_form_wiener(FamilySpec::parse(name)) == w);
    CHECK(distances(family(name)).wiener == w);
  }
}

TEST_CASE("fixed graphs sit in the right (n, k, d) families") {
  struct Row {
    const char* name;
    int n, k, d;
  };
  const Row rows[] = {
      {"T1", 12, 7, 7}, {"T2", 12, 7, 7}, {"T3", 12, 6, 7}, {"T4", 12, 8, 7},
      {"T5", 8, 3, 4},  {"T6", 8, 3, 4},  {"G3", 7, 3, 3},  {"G4", 9, 3, 4},
      {"G5", 9, 3, 4},  {"G6", 9, 3, 4},  {"G7", 9, 3, 4},  {"G8", 9, 3, 4},
      {"G9", 9, 3, 4},  {"G10", 9, 3, 4},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    Graph g = family(r.name);
    CHECK(g.n == r.n);
    CHECK(count_cut_vertices(g) == r.k);
    CHECK(distances(g).diameter == r.d);
  }
}

TEST_CASE("closed forms match the distance kernel across parameter sweeps") {
  for (int n = 1; n <= 24; ++n) check_spec(FamilySpec::parse("path:n=" + std::to_string(n)));
  for (int n = 2; n <= 24; ++n) check_spec(FamilySpec::parse("star:n=" + std::to_string(n)));
  for (int n = 3; n <= 24; ++n) check_spec(FamilySpec::parse("cycle:n=" + std::to_string(n)));
  for (int n = 4; n <= 20; ++n)
    for (int g = 3; g < n; ++g)
      check_spec(FamilySpec::parse("lollipop:n=" + std::to_string(n) + ",g=" + std::to_string(g)));
  for (int n = 3; n <= 15; ++n)
    for (int l = 1; l <= n - 2; ++l)
      for (int k = 1; l + k <= n - 1; ++k) {
        FamilySpec s;
        s.tag = FamilyTag::DoubleBroom;
        s.l = l;
        s.k = k;
        s.d = n - l - k;
        check_spec(s);
      }
  for (int m = 1; m <= 12; ++m) {
    std::vector<int> cur;
    for_each_partition(m, cur, [&] {
      FamilySpec s;
      s.tag = FamilyTag::StarTree;
      s.parts = cur;
      check_spec(s);
    });
  }
  for (int i = 7; i <= 10; ++i)
    for (int n = (i == 10 ? 10 : 9); n <= 24; ++n)
      check_spec(FamilySpec::parse("T" + std::to_string(i) + ":n=" + std::to_string(n)));
  for (int i = 11; i <= 20; ++i) {
    int lo = i >= 18 ? 11 : 10;
    if (i == 20) lo = 13;
    for (int n = lo; n <= 24; ++n)
      check_spec(FamilySpec::parse("T" + std::to_string(i) + ":n=" + std::to_string(n)));
  }
  for (int t = 1; t <= 5; ++t) {
    check_spec(FamilySpec::parse("T21:t=" + std::to_string(t)));
    check_spec(FamilySpec::parse("G11:t=" + std::to_string(t)));
    check_spec(FamilySpec::parse("G12:t=" + std::to_string(t)));
  }
}

TEST_CASE("published closed-form spot values") {
  CHECK(closed_form_wiener(FamilySpec::parse("cycle:n=9")) == 90);
  CHECK(closed_form_wiener(FamilySpec::parse("cycle:n=11")) == 165);
  CHECK(closed_form_wiener(FamilySpec::parse("lollipop:n=10,g=8")) == 121);
  CHECK(closed_form_wiener(FamilySpec::parse("T7:n=9")) == 98);
  CHECK(closed_form_wiener(FamilySpec::parse("T9:n=9")) == 98);
  CHECK(closed_form_wiener(FamilySpec::parse("T8:n=9")) == 96);
  CHECK(closed_form_wiener(FamilySpec::parse("T21:t=2")) == 88);
  CHECK(closed_form_wiener(FamilySpec::parse("startree:c=2+3+3")) == 90);
  CHECK(closed_form_wiener(FamilySpec::parse("startree:c=2+2+2")) == 48);
}

TEST_CASE("lollipop structure") {
  Graph g = family("lollipop:n=9,g=7");
  CHECK(g.n == 9);
  CHECK(count_cut_vertices(g) == 2);
  BlockCutTree bct = block_cut_tree(g);
  size_t girth_block = 0;
  for (const auto& b : bct.blocks) girth_block = std::max(girth_block, b.size());
  CHECK(girth_block == 7);
  // diam(L_{n,g}) = (n-g) + floor(g/2)
  for (int n = 4; n <= 20; ++n)
    for (int gg = 3; gg < n; ++gg) {
      Graph lol = family("lollipop:n=" + std::to_string(n) + ",g=" + std::to_string(gg));
      CHECK(distances(lol).diameter == (n - gg) + gg / 2);
    }
}

TEST_CASE("double broom and star-tree shapes") {
  // T(2,3,n-5) is the maximal caterpillar for diameter n-4
  for (int n = 9; n <= 16; ++n) {
    FamilySpec s = max_caterpillar(n, n - 4);
    CHECK(s.l == 2);
    CHECK(s.k == 3);
    CHECK(s.d == n - 5);
    Graph g = build(s);
    CHECK(g.n == n);
    CHECK(distances(g).diameter == n - 4);
    CHECK(max_caterpillar_wiener(n, n - 4) == distances(g).wiener);
  }
  // the piecewise caterpillar formula agrees with the double-broom closed form
  for (int n = 5; n <= 20; ++n)
    for (int d = 3; d <= n - 2; ++d)
      CHECK(max_caterpillar_wiener(n, d) == closed_form_wiener(max_caterpillar(n, d)));

  Graph s233 = family("startree:c=2+3+3");
  CHECK(s233.n == 9);
  CHECK(distances(s233).diameter == 4);
}

TEST_CASE("wagner star-tree partition") {
  FamilySpec w9 = wagner_star_tree(9);
  CHECK(w9.parts == std::vector<int>{2, 3, 3});
  FamilySpec w7 = wagner_star_tree(7);
  CHECK(w7.parts == std::vector<int>{2, 2, 2});
  for (int n = 4; n <= 40; ++n) {
    FamilySpec s = wagner_star_tree(n);
    CHECK(std::accumulate(s.parts.begin(), s.parts.end(), 0) == n - 1);
    Graph g = build(s);
    CHECK(g.n == n);
    CHECK(distances(g).diameter <= 4);
  }
}

TEST_CASE("T21 and G12 family membership") {
  for (int t = 1; t <= 5; ++t) {
    Graph t21 = family("T21:t=" + std::to_string(t));
    CHECK(t21.n == 4 * t + 1);
    CHECK(is_tree(t21));
    CHECK(count_cut_vertices(t21) == 4 * t - 3);
    CHECK(distances(t21).diameter == 2 * t);

    Graph g12 = family("G12:t=" + std::to_string(t));
    CHECK(g12.n == 4 * t + 3);
    CHECK(count_cut_vertices(g12) == 4 * t - 1);
    CHECK(distances(g12).diameter == 2 * t + 1);
  }
  CHECK(are_isomorphic(family("G12:t=1"), family("G3")));
}

TEST_CASE("ordering of the diameter n-4 and n-5 candidates") {
  for (int n = 10; n <= 40; ++n) {
    uint64_t t7 = closed_form_wiener(FamilySpec::parse("T7:n=" + std::to_string(n)));
    for (int i = 8; i <= 10; ++i)
      CHECK(t7 > closed_form_wiener(FamilySpec::parse("T" + std::to_string(i) +
                                                      ":n=" + std::to_string(n))));
  }
  for (int n = 12; n <= 40; ++n) {
    uint64_t t11 = closed_form_wiener(FamilySpec::parse("T11:n=" + std::to_string(n)));
    for (int i = 12; i <= 20; ++i) {
      if (i == 20 && n < 13) continue;
      CHECK(t11 > closed_form_wiener(FamilySpec::parse("T" + std::to_string(i) +
                                                       ":n=" + std::to_string(n))));
    }
  }
  // the published ties
  CHECK(closed_form_wiener(FamilySpec::parse("T11:n=10")) ==
        closed_form_wiener(FamilySpec::parse("T13:n=10")));
  CHECK(closed_form_wiener(FamilySpec::parse("T11:n=11")) ==
        closed_form_wiener(FamilySpec::parse("T18:n=11")));
  CHECK(are_isomorphic(family("T18:n=11"), family("T19:n=11")));
}

TEST_CASE("vertex distance closed forms") {
  CHECK(path_vertex_distance(5, 0) == 10);
  CHECK(cycle_vertex_distance(7) == 12);
  CHECK(path_vertex_distance(9, 4) == 20);
  for (int n = 1; n <= 20; ++n) {
    DistanceMatrix m = distances(family("path:n=" + std::to_string(n)));
    for (int i = 0; i < n; ++i) CHECK(path_vertex_distance(n, i) == m.vertex_sums[i]);
  }
  for (int n = 3; n <= 20; ++n)
    CHECK(cycle_vertex_distance(n) ==
          distances(family("cycle:n=" + std::to_string(n))).vertex_sums[0]);
  CHECK_THROWS_AS(path_vertex_distance(5, 5), BadParameters);
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(FamilySpec::parse("lollipop:n=5,g=2"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("lollipop:n=5,g=5"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("T7:n=8"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("T10:n=9"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("T18:n=10"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("T20:n=12"), BadParameters);
  CHECK_NOTHROW(FamilySpec::parse("T20:n=13"));
  CHECK_THROWS_AS(FamilySpec::parse("T21:t=0"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("doublebroom:l=0,k=1,d=2"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("nosuch:n=5"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("path:m=5"), BadParameters);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:n=bogus"), BadParameters);
}

TEST_CASE("spec text round trip") {
  const char* specs[] = {"path:n=7",       "cycle:n=9",  "lollipop:n=9,g=7",
                         "doublebroom:l=2,k=3,d=5", "startree:c=2+3+3", "T21:t=2",
                         "T7:n=9",         "G3",         "G11:t=2"};
  for (const char* s : specs) {
    FamilySpec spec = FamilySpec::parse(s);
    CHECK(spec.text() == s);
    CHECK(build(FamilySpec::parse(spec.text())) == build(spec));
  }
}
