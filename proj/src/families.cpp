#include "wlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace wlab {

namespace {

struct TagInfo {
  FamilyTag tag;
  const char* name;
};

const TagInfo kTags[] = {
    {FamilyTag::Path, "path"},     {FamilyTag::Star, "star"},
    {FamilyTag::Cycle, "cycle"},   {FamilyTag::Lollipop, "lollipop"},
    {FamilyTag::DoubleBroom, "doublebroom"}, {FamilyTag::StarTree, "startree"},
    {FamilyTag::T1, "T1"},   {FamilyTag::T2, "T2"},   {FamilyTag::T3, "T3"},
    {FamilyTag::T4, "T4"},   {FamilyTag::T5, "T5"},   {FamilyTag::T6, "T6"},
    {FamilyTag::T7, "T7"},   {FamilyTag::T8, "T8"},   {FamilyTag::T9, "T9"},
    {FamilyTag::T10, "T10"}, {FamilyTag::T11, "T11"}, {FamilyTag::T12, "T12"},
    {FamilyTag::T13, "T13"}, {FamilyTag::T14, "T14"}, {FamilyTag::T15, "T15"},
    {FamilyTag::T16, "T16"}, {FamilyTag::T17, "T17"}, {FamilyTag::T18, "T18"},
    {FamilyTag::T19, "T19"}, {FamilyTag::T20, "T20"}, {FamilyTag::T21, "T21"},
    {FamilyTag::G3, "G3"},   {FamilyTag::G4, "G4"},   {FamilyTag::G5, "G5"},
    {FamilyTag::G6, "G6"},   {FamilyTag::G7, "G7"},   {FamilyTag::G8, "G8"},
    {FamilyTag::G9, "G9"},   {FamilyTag::G10, "G10"}, {FamilyTag::G11, "G11"},
    {FamilyTag::G12, "G12"},
};

const char* tag_name(FamilyTag t) {
  for (const auto& e : kTags)
    if (e.tag == t) return e.name;
  throw BadParameters("unknown family tag");
}

bool takes_n(FamilyTag t) {
  switch (t) {
    case FamilyTag::Path:
    case FamilyTag::Star:
    case FamilyTag::Cycle:
    case FamilyTag::Lollipop:
      return true;
    default:
      return t >= FamilyTag::T7 && t <= FamilyTag::T20;
  }
}

int fixed_order(FamilyTag t) {
  switch (t) {
    case FamilyTag::T1:
    case FamilyTag::T2:
    case FamilyTag::T3:
    case FamilyTag::T4:
      return 12;
    case FamilyTag::T5:
    case FamilyTag::T6:
      return 8;
    case FamilyTag::G3:
      return 7;
    default:
      return 9;  // G4..G10
  }
}

int64_t exact_div(int64_t num, int64_t den, const char* what) {
  if (num % den != 0)
    throw NonIntegerResult(std::string(what) + ": " + std::to_string(num) + " not divisible by " +
                           std::to_string(den));
  return num / den;
}

void validate(const FamilySpec& s) {
  auto fail = [&](const std::string& why) {
    throw BadParameters(std::string(tag_name(s.tag)) + ": " + why);
  };
  switch (s.tag) {
    case FamilyTag::Path:
      if (s.n < 1) fail("n >= 1 required");
      break;
    case FamilyTag::Star:
      if (s.n < 2) fail("n >= 2 required");
      break;
    case FamilyTag::Cycle:
      if (s.n < 3) fail("n >= 3 required");
      break;
    case FamilyTag::Lollipop:
      if (s.g < 3) fail("girth g >= 3 required");
      if (s.n < s.g + 1) fail("n >= g+1 required");
      break;
    case FamilyTag::DoubleBroom:
      if (s.l < 1 || s.k < 1 || s.d < 1) fail("l, k, d >= 1 required");
      break;
    case FamilyTag::StarTree: {
      if (s.parts.empty()) fail("partition required");
      for (int c : s.parts)
        if (c < 1) fail("every part must be >= 1");
      break;
    }
    case FamilyTag::T7:
    case FamilyTag::T8:
    case FamilyTag::T9:
      if (s.n < 9) fail("n >= 9 required");
      break;
    case FamilyTag::T10:
      if (s.n < 10) fail("n >= 10 required");
      break;
    case FamilyTag::T18:
    case FamilyTag::T19:
      if (s.n < 11) fail("n >= 11 required");
      break;
    case FamilyTag::T20:
      if (s.n < 13) fail("n >= 13 required");
      break;
    case FamilyTag::T21:
    case FamilyTag::G11:
    case FamilyTag::G12:
      if (s.t < 1) fail("t >= 1 required");
      break;
    default:
      if (s.tag >= FamilyTag::T11 && s.tag <= FamilyTag::T17 && s.n < 10)
        fail("n >= 10 required");
      if (!takes_n(s.tag) && s.parts.empty() && s.tag != FamilyTag::T21 &&
          s.tag != FamilyTag::G11 && s.tag != FamilyTag::G12 && s.n != 0 &&
          s.n != fixed_order(s.tag))
        fail("order is fixed at " + std::to_string(fixed_order(s.tag)));
      break;
  }
}

int spec_order(const FamilySpec& s) {
  switch (s.tag) {
    case FamilyTag::Path:
    case FamilyTag::Star:
    case FamilyTag::Cycle:
    case FamilyTag::Lollipop:
      return s.n;
    case FamilyTag::DoubleBroom:
      return s.l + s.k + s.d;
    case FamilyTag::StarTree:
      return std::accumulate(s.parts.begin(), s.parts.end(), 0) + 1;
    case FamilyTag::T21:
    case FamilyTag::G11:
      return 4 * s.t + 1;
    case FamilyTag::G12:
      return 4 * s.t + 3;
    default:
      return takes_n(s.tag) ? s.n : fixed_order(s.tag);
  }
}

void path_edges(Graph& g, int from, int to) {
  for (int v = from; v < to; ++v) g.add_edge(v, v + 1);
}

// Chain of `len` fresh vertices hanging at `anchor`; `next` is the first free index.
void attach_chain(Graph& g, int anchor, int len, int& next) {
  int prev = anchor;
  for (int i = 0; i < len; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
}

}  // namespace

Graph build(const FamilySpec& s) {
  validate(s);
  const int n = spec_order(s);
  if (n > kMaxVertices) throw BadParameters("order exceeds 64 vertices");
  Graph g(n);
  switch (s.tag) {
    case FamilyTag::Path:
      path_edges(g, 0, n - 1);
      break;
    case FamilyTag::Star:
      for (int v = 1; v < n; ++v) g.add_edge(0, v);
      break;
    case FamilyTag::Cycle:
      path_edges(g, 0, n - 1);
      g.add_edge(n - 1, 0);
      break;
    case FamilyTag::Lollipop: {
      // cycle 0..g-1, pendant path attached at 0; the pendant end is n-1
      path_edges(g, 0, s.g - 1);
      g.add_edge(s.g - 1, 0);
      int next = s.g;
      attach_chain(g, 0, n - s.g, next);
      break;
    }
    case FamilyTag::DoubleBroom: {
      // path 0..d-1, l leaves at 0, k leaves at d-1
      path_edges(g, 0, s.d - 1);
      for (int i = 0; i < s.l; ++i) g.add_edge(0, s.d + i);
      for (int i = 0; i < s.k; ++i) g.add_edge(s.d - 1, s.d + s.l + i);
      break;
    }
    case FamilyTag::StarTree: {
      // center 0, spokes 1..t, spoke i carries parts[i]-1 leaves
      int t = int(s.parts.size());
      for (int i = 1; i <= t; ++i) g.add_edge(0, i);
      int next = t + 1;
      for (int i = 1; i <= t; ++i)
        for (int j = 0; j < s.parts[i - 1] - 1; ++j) g.add_edge(i, next++);
      break;
    }

    // Fixed trees on 12 vertices, diameter 7: base path 0..7, branch
    // vertices numbered in figure order.
    case FamilyTag::T1:
      path_edges(g, 0, 7);
      g.add_edge(2, 8);
      g.add_edge(8, 9);
      g.add_edge(4, 10);
      g.add_edge(4, 11);
      break;
    case FamilyTag::T2:
      path_edges(g, 0, 7);
      g.add_edge(2, 8);
      g.add_edge(8, 9);
      g.add_edge(4, 10);
      g.add_edge(5, 11);
      break;
    case FamilyTag::T3:
      path_edges(g, 0, 7);
      g.add_edge(1, 8);
      g.add_edge(1, 9);
      g.add_edge(6, 10);
      g.add_edge(6, 11);
      break;
    case FamilyTag::T4:
      path_edges(g, 0, 7);
      g.add_edge(2, 8);
      g.add_edge(8, 9);
      g.add_edge(5, 10);
      g.add_edge(10, 11);
      break;

    // Fixed trees on 8 vertices, diameter 4.
    case FamilyTag::T5:
      path_edges(g, 0, 4);
      g.add_edge(1, 5);
      g.add_edge(3, 6);
      g.add_edge(2, 7);
      break;
    case FamilyTag::T6:
      path_edges(g, 0, 4);
      g.add_edge(1, 5);
      g.add_edge(1, 6);
      g.add_edge(1, 7);
      break;

    // Diameter n-4 candidates: base path 0..n-4.
    case FamilyTag::T7: {
      path_edges(g, 0, n - 4);
      g.add_edge(1, n - 3);
      g.add_edge(n - 5, n - 2);
      g.add_edge(n - 5, n - 1);
      break;
    }
    case FamilyTag::T8: {
      path_edges(g, 0, n - 4);
      g.add_edge(1, n - 3);
      int next = n - 2;
      attach_chain(g, 2, 2, next);
      break;
    }
    case FamilyTag::T9: {
      path_edges(g, 0, n - 4);
      int next = n - 3;
      attach_chain(g, 2, 2, next);
      g.add_edge(n - 5, n - 1);
      break;
    }
    case FamilyTag::T10: {
      path_edges(g, 0, n - 4);
      int next = n - 3;
      attach_chain(g, 3, 3, next);
      break;
    }

    // Diameter n-5 candidates: base path 0..n-5.
    case FamilyTag::T11:
      path_edges(g, 0, n - 5);
      g.add_edge(1, n - 4);
      g.add_edge(1, n - 3);
      g.add_edge(n - 6, n - 2);
      g.add_edge(n - 6, n - 1);
      break;
    case FamilyTag::T12: {
      path_edges(g, 0, n - 5);
      int next = n - 4;
      attach_chain(g, 2, 2, next);
      g.add_edge(n - 6, n - 2);
      g.add_edge(n - 6, n - 1);
      break;
    }
    case FamilyTag::T13: {
      path_edges(g, 0, n - 5);
      g.add_edge(1, n - 4);
      int next = n - 3;
      attach_chain(g, 2, 2, next);
      g.add_edge(n - 6, n - 1);
      break;
    }
    case FamilyTag::T14:
      path_edges(g, 0, n - 5);
      g.add_edge(1, n - 4);
      g.add_edge(2, n - 3);
      g.add_edge(n - 3, n - 2);
      g.add_edge(n - 3, n - 1);
      break;
    case FamilyTag::T15:
      path_edges(g, 0, n - 5);
      g.add_edge(2, n - 4);
      g.add_edge(n - 4, n - 3);
      g.add_edge(n - 4, n - 2);
      g.add_edge(n - 4, n - 1);
      break;
    case FamilyTag::T16: {
      path_edges(g, 0, n - 5);
      int next = n - 4;
      attach_chain(g, 2, 2, next);
      attach_chain(g, 2, 2, next);
      break;
    }
    case FamilyTag::T17: {
      path_edges(g, 0, n - 5);
      int next = n - 4;
      attach_chain(g, 2, 2, next);
      attach_chain(g, n - 7, 2, next);
      break;
    }
    case FamilyTag::T18: {
      path_edges(g, 0, n - 5);
      int next = n - 4;
      attach_chain(g, 3, 3, next);
      g.add_edge(n - 6, n - 1);
      break;
    }
    case FamilyTag::T19: {
      path_edges(g, 0, n - 5);
      int next = n - 4;
      attach_chain(g, 3, 2, next);
      g.add_edge(n - 3, n - 2);
      g.add_edge(n - 3, n - 1);
      break;
    }
    case FamilyTag::T20: {
      path_edges(g, 0, n - 5);
      int next = n - 4;
      attach_chain(g, 4, 4, next);
      break;
    }

    // Spider: path 0..2t plus two legs of t vertices at the middle vertex t.
    case FamilyTag::T21: {
      path_edges(g, 0, 2 * s.t);
      int next = 2 * s.t + 1;
      attach_chain(g, s.t, s.t, next);
      attach_chain(g, s.t, s.t, next);
      break;
    }

    // Triangle 0,1,2 with one leaf at 0, one at 1, two at 2.
    case FamilyTag::G3:
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 0);
      g.add_edge(0, 3);
      g.add_edge(1, 4);
      g.add_edge(2, 5);
      g.add_edge(2, 6);
      break;

    // Triangle 0,1,2; leaves at 1 and 2; extra structure at 0.
    case FamilyTag::G4:  // leaf at each triangle vertex, 4-cycle through 0
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 0);
      g.add_edge(1, 3);
      g.add_edge(2, 4);
      g.add_edge(0, 5);
      g.add_edge(0, 6);
      g.add_edge(6, 7);
      g.add_edge(7, 8);
      g.add_edge(8, 0);
      break;
    case FamilyTag::G5:  // leaf at 1, two leaves at 2, 4-cycle through 0
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 0);
      g.add_edge(1, 3);
      g.add_edge(2, 4);
      g.add_edge(2, 5);
      g.add_edge(0, 6);
      g.add_edge(6, 7);
      g.add_edge(7, 8);
      g.add_edge(8, 0);
      break;
    case FamilyTag::G6:  // leaf at 1 and at 2, 5-cycle through 0
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 0);
      g.add_edge(1, 3);
      g.add_edge(2, 4);
      g.add_edge(0, 5);
      g.add_edge(5, 6);
      g.add_edge(6, 7);
      g.add_edge(7, 8);
      g.add_edge(8, 0);
      break;

    case FamilyTag::G7:  // 6-cycle, leaves at alternating vertices 0, 2, 4
      path_edges(g, 0, 5);
      g.add_edge(5, 0);
      g.add_edge(0, 6);
      g.add_edge(2, 7);
      g.add_edge(4, 8);
      break;
    case FamilyTag::G8:  // 6-cycle, leaves at consecutive vertices 1, 2, 3
      path_edges(g, 0, 5);
      g.add_edge(5, 0);
      g.add_edge(1, 6);
      g.add_edge(2, 7);
      g.add_edge(3, 8);
      break;
    case FamilyTag::G9:  // 5-cycle, leaves at 0 and 1, two leaves at 3
      path_edges(g, 0, 4);
      g.add_edge(4, 0);
      g.add_edge(0, 5);
      g.add_edge(1, 6);
      g.add_edge(3, 7);
      g.add_edge(3, 8);
      break;
    case FamilyTag::G10:  // 5-cycle, leaf at 0, two leaves at 1, leaf at 3
      path_edges(g, 0, 4);
      g.add_edge(4, 0);
      g.add_edge(0, 5);
      g.add_edge(1, 6);
      g.add_edge(1, 7);
      g.add_edge(3, 8);
      break;

    // 4-cycle 0,1,2,3 with chord 0-2; legs: t vertices at 0, t-1 at 1, 2, 3.
    case FamilyTag::G11: {
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 3);
      g.add_edge(3, 0);
      g.add_edge(0, 2);
      int next = 4;
      attach_chain(g, 0, s.t, next);
      attach_chain(g, 1, s.t - 1, next);
      attach_chain(g, 2, s.t - 1, next);
      attach_chain(g, 3, s.t - 1, next);
      break;
    }

    // Triangle 0,1,2 with four legs of t vertices: two at 0, one at 1, one at 2.
    case FamilyTag::G12: {
      g.add_edge(0, 1);
      g.add_edge(1, 2);
      g.add_edge(2, 0);
      int next = 3;
      attach_chain(g, 0, s.t, next);
      attach_chain(g, 0, s.t, next);
      attach_chain(g, 1, s.t, next);
      attach_chain(g, 2, s.t, next);
      break;
    }
  }
  return g;
}

uint64_t closed_form_wiener(const FamilySpec& s) {
  validate(s);
  const int64_t n = spec_order(s);
  switch (s.tag) {
    case FamilyTag::Path:
      return uint64_t(exact_div((n + 1) * n * (n - 1), 6, "path"));
    case FamilyTag::Star:
      return uint64_t((n - 1) * (n - 1));
    case FamilyTag::Cycle:
      return uint64_t(n % 2 == 0 ? exact_div(n * n * n, 8, "even cycle")
                                 : exact_div(n * (n * n - 1), 8, "odd cycle"));
    case FamilyTag::Lollipop: {
      const int64_t gg = s.g;
      const int64_t common = 4 * (n * n + n * gg + 3 * gg - 1) - 2 * gg * gg;
      if (gg % 2 == 0)
        return uint64_t(exact_div(3 * gg * gg * gg + (n - gg) * common, 24, "lollipop even"));
      return uint64_t(
          exact_div(3 * gg * (gg * gg - 1) + (n - gg) * (common - 6), 24, "lollipop odd"));
    }
    case FamilyTag::DoubleBroom: {
      const int64_t l = s.l, k = s.k, d = s.d;
      return uint64_t(exact_div((d + 1) * d * (d - 1), 6, "double broom") + l * (l - 1) +
                      k * (k - 1) + l * k * (d + 1) + (l + k) * d * (d + 1) / 2);
    }
    case FamilyTag::StarTree: {
      const int64_t t = int64_t(s.parts.size());
      int64_t sum1 = 0, sum2 = 0;
      for (int c : s.parts) {
        sum1 += c - 1;
        sum2 += int64_t(c - 1) * (c - 1);
      }
      return uint64_t(t * t + 3 * t * sum1 + 2 * sum1 * sum1 - sum1 - sum2);
    }
    case FamilyTag::T1:
      return 213;
    case FamilyTag::T2:
      return 218;
    case FamilyTag::T3:
      return 236;
    case FamilyTag::T4:
      return 230;
    case FamilyTag::T5:
      return 65;
    case FamilyTag::T6:
      return 62;
    case FamilyTag::T7:
      return uint64_t(exact_div(n * n * n - 25 * n + 84, 6, "T7"));
    case FamilyTag::T8:
      return uint64_t(exact_div(n * n * n - 43 * n + 234, 6, "T8"));
    case FamilyTag::T9:
      return uint64_t(exact_div(n * n * n - 31 * n + 138, 6, "T9"));
    case FamilyTag::T10:
      return uint64_t(exact_div(n * n * n - 55 * n + 378, 6, "T10"));
    case FamilyTag::T11:
      return uint64_t(exact_div(n * n * n - 37 * n + 132, 6, "T11"));
    case FamilyTag::T12:
      return uint64_t(exact_div(n * n * n - 43 * n + 186, 6, "T12"));
    case FamilyTag::T13:
      return uint64_t(exact_div(n * n * n - 49 * n + 252, 6, "T13"));
    case FamilyTag::T14:
      return uint64_t(exact_div(n * n * n - 67 * n + 414, 6, "T14"));
    case FamilyTag::T15:
      return uint64_t(exact_div(n * n * n - 67 * n + 402, 6, "T15"));
    case FamilyTag::T16:
      return uint64_t(exact_div(n * n * n - 73 * n + 456, 6, "T16"));
    case FamilyTag::T17:
      return uint64_t(exact_div(n * n * n - 49 * n + 240, 6, "T17"));
    case FamilyTag::T18:
      return uint64_t(exact_div(n * n * n - 61 * n + 396, 6, "T18"));
    case FamilyTag::T19:
      return uint64_t(exact_div(n * n * n - 79 * n + 594, 6, "T19"));
    case FamilyTag::T20:
      return uint64_t(exact_div(n * n * n - 97 * n + 864, 6, "T20"));
    case FamilyTag::T21:
      return uint64_t(exact_div(5 * n * n * n + 9 * n * n - 17 * n + 3, 48, "T21"));
    case FamilyTag::G3:
      return 40;
    case FamilyTag::G4:
      return 76;
    case FamilyTag::G5:
      return 78;
    case FamilyTag::G6:
      return 79;
    case FamilyTag::G7:
      return 84;
    case FamilyTag::G8:
      return 82;
    case FamilyTag::G9:
      return 80;
    case FamilyTag::G10:
      return 79;
    case FamilyTag::G11: {
      const int64_t t = s.t;
      return uint64_t(exact_div(20 * t * t * t + 18 * t * t + 4 * t, 3, "G11"));
    }
    case FamilyTag::G12:
      return uint64_t(exact_div(5 * n * n * n + 6 * n * n - 11 * n - 12, 48, "G12"));
  }
  throw BadParameters("unknown family tag");
}

uint64_t path_vertex_distance(int n, int i) {
  if (n < 1 || i < 0 || i >= n) throw BadParameters("path vertex index out of range");
  const int64_t nn = n, ii = i;
  return uint64_t(exact_div(nn * nn + 2 * ii * ii - (2 * nn - 2) * ii - nn, 2, "D_P"));
}

uint64_t cycle_vertex_distance(int n) {
  if (n < 3) throw BadParameters("cycle needs n >= 3");
  const int64_t nn = n;
  return uint64_t(n % 2 == 0 ? exact_div(nn * nn, 4, "D_C even")
                             : exact_div(nn * nn - 1, 4, "D_C odd"));
}

FamilySpec max_caterpillar(int n, int diameter) {
  if (diameter < 2 || diameter > n - 2)
    throw BadParameters("caterpillar maximum needs 2 <= d <= n-2");
  FamilySpec s;
  s.tag = FamilyTag::DoubleBroom;
  s.l = (n - diameter + 1) / 2;
  s.k = n - diameter + 1 - s.l;
  s.d = diameter - 1;
  return s;
}

uint64_t max_caterpillar_wiener(int n, int diameter) {
  max_caterpillar(n, diameter);  // parameter check
  const int64_t d = diameter, m = n - diameter + 1;
  const int64_t d_choose3 = exact_div(d * (d - 1) * (d - 2), 6, "caterpillar C(d,3)");
  const int64_t tail = exact_div(m * ((d - 1) * (d - 1) + d - 3), 2, "caterpillar tail");
  if ((n - diameter) % 2 != 0)
    return uint64_t(d_choose3 + exact_div(m * m, 4, "caterpillar odd") * (d + 2) + tail);
  return uint64_t(d_choose3 + exact_div(m * m - 1, 4, "caterpillar even") * (d + 2) + tail + 1);
}

FamilySpec wagner_star_tree(int n) {
  if (n < 4) throw BadParameters("star-tree maximum needs n >= 4");
  int k = int(std::sqrt(double(n - 1)));
  while ((k + 1) * (k + 1) <= n - 1) ++k;
  while (k * k > n - 1) --k;
  int small, big;
  if (k * k + k > n - 1) {
    small = k * k + k - n + 1;
    big = n - 1 - k * k;
  } else {
    small = k * k + 2 * k - n + 2;
    big = n - 1 - k * k - k;
  }
  FamilySpec s;
  s.tag = FamilyTag::StarTree;
  for (int i = 0; i < small; ++i) s.parts.push_back(k);
  for (int i = 0; i < big; ++i) s.parts.push_back(k + 1);
  return s;
}

// --- text syntax -------------------------------------------------------------

FamilySpec FamilySpec::parse(const std::string& text) {
  std::string name = text;
  std::string args;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  FamilySpec s;
  bool found = false;
  for (const auto& e : kTags)
    if (name == e.name) {
      s.tag = e.tag;
      found = true;
      break;
    }
  if (!found) throw BadParameters("unknown family '" + name + "'");

  std::map<std::string, std::string> kv;
  size_t pos = 0;
  while (pos < args.size()) {
    size_t comma = args.find(',', pos);
    if (comma == std::string::npos) comma = args.size();
    std::string item = args.substr(pos, comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw BadParameters("expected key=value in '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
    pos = comma + 1;
  }
  auto get_int = [&](const std::string& key, int& out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    try {
      out = std::stoi(it->second);
    } catch (const std::exception&) {
      throw BadParameters("bad integer for '" + key + "'");
    }
    kv.erase(it);
    return true;
  };
  get_int("n", s.n);
  get_int("g", s.g);
  get_int("l", s.l);
  get_int("k", s.k);
  get_int("d", s.d);
  get_int("t", s.t);
  if (auto it = kv.find("c"); it != kv.end()) {
    std::string parts = it->second;
    size_t p = 0;
    while (p < parts.size()) {
      size_t plus = parts.find('+', p);
      if (plus == std::string::npos) plus = parts.size();
      try {
        s.parts.push_back(std::stoi(parts.substr(p, plus - p)));
      } catch (const std::exception&) {
        throw BadParameters("bad partition entry in '" + parts + "'");
      }
      p = plus + 1;
    }
    kv.erase(it);
  }
  if (!kv.empty()) throw BadParameters("unknown parameter '" + kv.begin()->first + "'");
  validate(s);
  return s;
}

std::string FamilySpec::text() const {
  std::string out = tag_name(tag);
  switch (tag) {
    case FamilyTag::Path:
    case FamilyTag::Star:
    case FamilyTag::Cycle:
      return out + ":n=" + std::to_string(n);
    case FamilyTag::Lollipop:
      return out + ":n=" + std::to_string(n) + ",g=" + std::to_string(g);
    case FamilyTag::DoubleBroom:
      return out + ":l=" + std::to_string(l) + ",k=" + std::to_string(k) +
             ",d=" + std::to_string(d);
    case FamilyTag::StarTree: {
      out += ":c=";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
      }
      return out;
    }
    case FamilyTag::T21:
    case FamilyTag::G11:
    case FamilyTag::G12:
      return out + ":t=" + std::to_string(t);
    default:
      if (takes_n(tag)) return out + ":n=" + std::to_string(n);
      return out;  // fixed graphs
  }
}

}  // namespace wlab
