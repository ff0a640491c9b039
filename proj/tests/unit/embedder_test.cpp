#include <algorithm>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "bturan/embedder.hpp"
#include "bturan/pattern.hpp"
#include "bturan/tree_enum.hpp"

using namespace bturan;

namespace {

// Oracle: every injective map of pattern vertices to host vertices, keeping
// each pattern edge on a host edge between opposite sides.
bool brute_contains(const BipartiteGraph& g, const Pattern& p) {
  const int n = p.vertex_count();
  const int hosts = g.vertex_count();
  if (n > hosts) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(hosts, false);
  auto left = [&](int h) { return h < g.left_size(); };
  std::function<bool(int)> go = [&](int v) {
    if (v == n) {
      for (auto [x, y] : p.edges()) {
        int hx = map[x], hy = map[y];
        if (left(hx) == left(hy)) return false;
        int i = left(hx) ? hx : hy;
        int j = (left(hx) ? hy : hx) - g.left_size();
        if (!g.has_edge(i, j)) return false;
      }
      return true;
    }
    for (int h = 0; h < hosts; ++h) {
      if (used[h]) continue;
      used[h] = true;
      map[v] = h;
      if (go(v + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return go(0);
}

std::vector<Pattern> small_patterns() {
  std::vector<Pattern> out;
  for (int m = 2; m <= 6; ++m)
    for (auto& t : free_trees(m)) out.push_back(std::move(t));
  std::vector<Pattern> two_k2{make_star(1), make_star(1)};
  std::vector<Pattern> p3k2{make_path(3), make_star(1)};
  std::vector<Pattern> p3p3{make_path(3), make_path(3)};
  out.push_back(make_union(two_k2));
  out.push_back(make_union(p3k2));
  out.push_back(make_union(p3p3));
  return out;
}

BipartiteGraph theta(int n) {
  BipartiteGraph g(n, n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, 0);
    g.add_edge(i, i);
  }
  return g;
}

}  // namespace

TEST(Embedder, TwoBicliquesAreDoubleStarFree) {
  auto g = BipartiteGraph::complete(2, 4).disjoint_union(BipartiteGraph::complete(2, 4));
  EXPECT_FALSE(find_embedding(g, make_double_star(2, 2)).has_value());
}

TEST(Embedder, SixCycleAvoidsS221) {
  BipartiteGraph c6(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
  std::vector<int> legs{2, 2, 1};
  EXPECT_FALSE(find_embedding(c6, make_spider(legs)).has_value());
  EXPECT_TRUE(find_embedding(c6, make_path(6)).has_value());
}

TEST(Embedder, TooSmallHost) {
  EXPECT_FALSE(find_embedding(BipartiteGraph::complete(1, 1), make_path(3)).has_value());
}

TEST(Embedder, WitnessIsValid) {
  auto g = theta(5);
  auto e = find_embedding(g, make_path(6));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(is_valid_embedding(g, make_path(6), *e));
  auto image = edge_image(make_path(6), *e);
  EXPECT_EQ(image.size(), 5U);
  EXPECT_TRUE(std::is_sorted(image.begin(), image.end()));
  for (auto [i, j] : image) EXPECT_TRUE(g.has_edge(i, j));
  EXPECT_FALSE(find_embedding(g, make_double_star(2, 2)).has_value());
}

TEST(Embedder, FamilyFreeness) {
  EXPECT_TRUE(is_family_free(BipartiteGraph::complete(2, 10), PatternFamily(TreesKL{3, 3})));
  EXPECT_FALSE(is_family_free(BipartiteGraph::complete(3, 3), PatternFamily(TreesKL{3, 3})));
  EXPECT_TRUE(is_family_free(BipartiteGraph(4, 4), PatternFamily(TreesKL{2, 3})));
  EXPECT_TRUE(is_family_free(BipartiteGraph(4, 4), PatternFamily(make_path(2))));
}

TEST(Embedder, ForestComponentsOrientIndependently) {
  // K_{1,2} and K_{2,1} side by side: 2 P3 needs one centre on each side.
  BipartiteGraph g(3, 3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}});
  std::vector<Pattern> p3p3{make_path(3), make_path(3)};
  auto u = make_union(p3p3);
  auto e = find_embedding(g, u);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(is_valid_embedding(g, u, *e));
}

TEST(EmbedderProperty, AgreesWithBruteForceOnTinyHosts) {
  const auto patterns = small_patterns();
  int positives = 0, checks = 0;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (unsigned mask = 0; mask < (1U << (a * b)); ++mask) {
        BipartiteGraph g(a, b);
        for (int k = 0; k < a * b; ++k)
          if ((mask >> k) & 1U) g.add_edge(k / b, k % b);
        for (const auto& p : patterns) {
          auto e = find_embedding(g, p);
          bool oracle = brute_contains(g, p);
          ASSERT_EQ(e.has_value(), oracle) << p.display_name() << " in mask " << mask << " (" << a << "," << b << ")";
          if (e) {
            ASSERT_TRUE(is_valid_embedding(g, p, *e));
            ++positives;
          }
          ++checks;
        }
      }
    }
  }
  EXPECT_GT(positives, checks / 20);
}

TEST(EmbedderProperty, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(5);
  const auto patterns = small_patterns();
  for (int trial = 0; trial < 300; ++trial) {
    int a = 2 + trial % 5, b = 2 + (trial / 5) % 5;
    BipartiteGraph g(a, b);
    std::bernoulli_distribution coin(0.35);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (coin(rng)) g.add_edge(i, j);
    BipartiteGraph bigger = g;
    bigger.add_edge(static_cast<int>(rng() % a), static_cast<int>(rng() % b));
    for (const auto& p : patterns) {
      if (contains(g, p)) EXPECT_TRUE(contains(bigger, p)) << p.display_name();
    }
  }
}

TEST(EmbedderGeneral, FindsPathsInGeneralGraphs) {
  GeneralGraph triangle(4, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(contains(triangle, make_path(3)));
  EXPECT_FALSE(contains(triangle, make_path(4)));
  EXPECT_FALSE(contains(triangle, make_star(3)));
  GeneralGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_FALSE(contains(c4, make_star(3)));
  EXPECT_TRUE(contains(c4, make_path(4)));
  const auto p4 = make_path(4);
  auto m = find_embedding(c4, p4);
  ASSERT_TRUE(m.has_value());
  for (auto [u, v] : p4.edges()) EXPECT_TRUE(c4.has_edge((*m)[u], (*m)[v]));
}
