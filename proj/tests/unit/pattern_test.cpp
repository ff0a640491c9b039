#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "bturan/error.hpp"
#include "bturan/pattern.hpp"
#include "bturan/pattern_literal.hpp"
#include "bturan/tree_enum.hpp"

using namespace bturan;

namespace {

// Independent oracle: decode every Pruefer sequence and key each tree by the
// least rooted AHU string over all roots.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int from) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != from) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

struct OracleTree {
  std::string key;
  std::pair<int, int> parts;
};

std::vector<OracleTree> pruefer_trees(int m) {
  std::map<std::string, std::pair<int, int>> found;
  std::vector<int> seq(static_cast<std::size_t>(std::max(0, m - 2)), 0);
  while (true) {
    std::vector<int> degree(m, 1);
    for (int x : seq) ++degree[x];
    std::vector<std::vector<int>> adj(m);
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(x);
      adj[x].push_back(leaf);
      --degree[leaf];
      --degree[x];
    }
    int u = -1, w = -1;
    for (int i = 0; i < m; ++i) {
      if (degree[i] == 1) (u < 0 ? u : w) = i;
    }
    adj[u].push_back(w);
    adj[w].push_back(u);
    std::string best;
    for (int r = 0; r < m; ++r) {
      auto c = rooted_code(adj, r, -1);
      if (best.empty() || c < best) best = c;
    }
    if (!found.count(best)) {
      std::vector<int> colour(m, -1);
      colour[0] = 0;
      std::vector<int> stack{0};
      int zeros = 0;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        zeros += colour[v] == 0;
        for (int y : adj[v])
          if (colour[y] < 0) {
            colour[y] = 1 - colour[v];
            stack.push_back(y);
          }
      }
      found[best] = {std::min(zeros, m - zeros), std::max(zeros, m - zeros)};
    }
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[i] == m - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  std::vector<OracleTree> out;
  for (auto& [k, p] : found) out.push_back({k, p});
  return out;
}

}  // namespace

TEST(Pattern, DoubleStarParameters) {
  auto d = make_double_star(2, 2);
  EXPECT_EQ(d.vertex_count(), 6);
  EXPECT_EQ(d.part_sizes(), (std::pair{3, 3}));
  EXPECT_EQ(d.max_degree(), 3);
}

TEST(Pattern, SpiderParameters) {
  std::vector<int> legs{3, 1, 1};
  auto s = make_spider(legs);
  EXPECT_EQ(s.vertex_count(), 6);
  EXPECT_EQ(s.part_sizes(), (std::pair{2, 4}));
  EXPECT_EQ(s.max_degree(), 3);
}

TEST(Pattern, StarsAndPaths) {
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(make_star(k).part_sizes(), (std::pair{1, k}));
  EXPECT_EQ(make_path(5).part_sizes(), (std::pair{2, 3}));
  EXPECT_EQ(make_path(6).max_degree(), 2);
}

TEST(Pattern, ForestIdentity) {
  std::vector<Pattern> parts{make_path(3), make_star(1)};
  auto u = make_union(parts);
  EXPECT_EQ(u.edge_count(), u.vertex_count() - u.component_count());
  EXPECT_EQ(u.component_count(), 2);
  for (int m = 2; m <= 9; ++m)
    for (const auto& t : free_trees(m)) EXPECT_EQ(t.edge_count(), t.vertex_count() - 1);
}

TEST(Pattern, UnionBalancesParts) {
  std::vector<Pattern> parts{make_star(3), make_star(3)};
  EXPECT_EQ(make_union(parts).part_sizes(), (std::pair{4, 4}));
}

TEST(Pattern, RejectsBadInput) {
  std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_THROW(Pattern::from_edges(cycle), InvalidArgument);
  std::vector<Edge> isolated{{0, 2}};
  EXPECT_THROW(Pattern::from_edges(isolated), InvalidArgument);
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Pattern::from_edges(loop), InvalidArgument);
  std::vector<int> two_legs{2, 2};
  EXPECT_THROW(make_spider(two_legs), InvalidArgument);
  std::vector<int> zero_leg{2, 0, 1};
  EXPECT_THROW(make_spider(zero_leg), InvalidArgument);
  EXPECT_THROW(make_double_star(0, 2), InvalidArgument);
}

TEST(Pattern, SpiderOfOnesIsStar) {
  for (int d = 3; d <= 7; ++d) {
    std::vector<int> ones(d, 1);
    EXPECT_EQ(make_spider(ones), make_star(d));
  }
}

TEST(Pattern, SpiderLegOrderIrrelevant) {
  std::vector<int> legs{1, 2, 3, 1};
  auto base = make_spider(legs);
  std::sort(legs.begin(), legs.end());
  do {
    EXPECT_EQ(make_spider(legs), base);
    EXPECT_EQ(make_spider(legs).canonical_form(), base.canonical_form());
  } while (std::next_permutation(legs.begin(), legs.end()));
}

TEST(Pattern, ExbcDefined) {
  EXPECT_FALSE(exbc_defined(make_path(4)));
  EXPECT_TRUE(exbc_defined(make_star(3)));
  std::vector<Pattern> p3k2{make_path(3), make_star(1)};
  EXPECT_FALSE(exbc_defined(make_union(p3k2)));
  std::vector<Pattern> two_k2{make_star(1), make_star(1)};
  EXPECT_FALSE(exbc_defined(make_union(two_k2)));
  EXPECT_FALSE(exbc_defined(make_path(2)));
  EXPECT_FALSE(exbc_defined(make_path(3)));
  EXPECT_TRUE(exbc_defined(make_path(5)));
}

TEST(Pattern, FitsHost) {
  std::vector<int> legs{3, 1, 1};
  EXPECT_FALSE(make_spider(legs).fits(3, 3));
  EXPECT_TRUE(make_double_star(2, 2).fits(3, 3));
  EXPECT_FALSE(make_path(5).fits(2, 2));
  EXPECT_TRUE(make_star(4).fits(5, 1));
}

TEST(Pattern, CaterpillarNormalises) {
  EXPECT_EQ(make_caterpillar(2, 1, 0), make_caterpillar(0, 1, 2));
  EXPECT_EQ(make_caterpillar(0, 0, 0), make_path(3));
  EXPECT_EQ(make_caterpillar(1, 0, 1), make_path(5));
}

TEST(TreeEnum, TkLExamples) {
  auto t14 = enumerate_T_kl(1, 4);
  ASSERT_EQ(t14.size(), 1U);
  EXPECT_EQ(t14[0], make_star(4));

  auto t23 = enumerate_T_kl(2, 3);
  ASSERT_EQ(t23.size(), 2U);
  std::vector<int> s211{2, 1, 1};
  EXPECT_NE(std::find(t23.begin(), t23.end(), make_path(5)), t23.end());
  EXPECT_NE(std::find(t23.begin(), t23.end(), make_spider(s211)), t23.end());

  auto t33 = enumerate_T_kl(3, 3);
  ASSERT_EQ(t33.size(), 3U);
  std::vector<int> s221{2, 2, 1};
  for (const auto& p : {make_path(6), make_spider(s221), make_double_star(2, 2)})
    EXPECT_NE(std::find(t33.begin(), t33.end(), p), t33.end()) << p.display_name();
}

TEST(TreeEnum, CapIsEnforced) {
  EXPECT_THROW(enumerate_T_kl(6, 7), ResourceError);
  EXPECT_THROW(enumerate_T_kl(3, 2), InvalidArgument);
  EXPECT_NO_THROW(enumerate_T_kl(6, 7, 13));
}

TEST(TreeEnum, RootedCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int m = 1; m <= 9; ++m) EXPECT_EQ(rooted_level_sequences(m).size(), expected[m - 1]) << m;
}

TEST(TreeEnumProperty, MatchesPrueferOracle) {
  for (int m = 2; m <= 8; ++m) {
    auto oracle = pruefer_trees(m);
    auto trees = free_trees(m);
    EXPECT_EQ(trees.size(), oracle.size()) << m;
    std::map<std::pair<int, int>, int> by_parts;
    for (const auto& o : oracle) ++by_parts[o.parts];
    for (int k = 1; 2 * k <= m; ++k) {
      const int expected = by_parts[std::pair(k, m - k)];
      EXPECT_EQ(static_cast<int>(enumerate_T_kl(k, m - k).size()), expected) << k << "," << m - k;
    }
  }
}

TEST(TreeEnum, FreeTreeTotals) {
  const std::map<int, std::size_t> expected{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 6}, {7, 11}, {8, 23}, {9, 47}, {10, 106}};
  for (auto [m, count] : expected) {
    std::size_t total = 0;
    for (int k = 1; 2 * k <= m; ++k) total += enumerate_T_kl(k, m - k).size();
    EXPECT_EQ(total, count) << m;
  }
}

TEST(TreeEnum, LiteralNames) {
  std::set<std::string> names;
  for (const auto& t : free_trees(6)) names.insert(with_literal_name(t).display_name());
  EXPECT_EQ(names, (std::set<std::string>{"D2,2", "K1,5", "P6", "S2,1,1,1", "S2,2,1", "S3,1,1"}));
  for (int m = 2; m <= 9; ++m)
    for (const auto& t : free_trees(m)) {
      const auto named = with_literal_name(t);
      EXPECT_EQ(named, t);
      if (!named.name().empty()) EXPECT_EQ(with_literal_name(parse_pattern_literal(named.name()).single()), named);
    }
}

TEST(Literal, ParsesAllForms) {
  EXPECT_EQ(parse_pattern_literal("P5").single(), make_path(5));
  EXPECT_EQ(parse_pattern_literal("K1,4").single(), make_star(4));
  EXPECT_EQ(parse_pattern_literal("K2").single(), make_path(2));
  std::vector<int> s311{3, 1, 1};
  EXPECT_EQ(parse_pattern_literal("S3,1,1").single(), make_spider(s311));
  std::vector<int> s2111{2, 1, 1, 1};
  EXPECT_EQ(parse_pattern_literal("S2,3*1").single(), make_spider(s2111));
  EXPECT_EQ(parse_pattern_literal("D2,2").single(), make_double_star(2, 2));
  EXPECT_EQ(parse_pattern_literal("Prst:1,1,2").single(), make_caterpillar(1, 1, 2));
  auto t = parse_pattern_literal("T3,3");
  ASSERT_FALSE(t.is_single());
  EXPECT_EQ(t.trees(), (TreesKL{3, 3}));
  auto u = parse_pattern_literal("U(P3,K2)").single();
  EXPECT_EQ(u.component_count(), 2);
  EXPECT_EQ(u.vertex_count(), 5);
  auto nested = parse_pattern_literal("U(K1,3,P3)").single();
  EXPECT_EQ(nested.vertex_count(), 7);
}

TEST(Literal, NamesRoundTrip) {
  for (const char* lit : {"P5", "K1,4", "S3,1,1", "S2,1,1,1", "D2,3", "Prst:1,1,2", "U(K2,P3)"}) {
    auto p = parse_pattern_literal(lit).single();
    EXPECT_EQ(parse_pattern_literal(p.display_name()).single(), p) << lit << " -> " << p.display_name();
  }
  EXPECT_EQ(parse_pattern_literal("T2,3").display_name(), "T2,3");
}

TEST(Literal, RejectsGarbage) {
  for (const char* lit : {"", "Q3", "P", "P5x", "S3,1", "K1,", "T3", "T4,3", "U(P3)", "D2", "P 5", "S3,*1"}) {
    EXPECT_THROW(parse_pattern_literal(lit), InvalidArgument) << lit;
  }
}

TEST(Family, MembersAndFits) {
  PatternFamily f(TreesKL{3, 3});
  EXPECT_EQ(f.members().size(), 3U);
  EXPECT_EQ(f.part_sizes(), (std::pair{3, 3}));
  EXPECT_FALSE(f.fits(2, 10));
  EXPECT_TRUE(f.fits(3, 3));
  PatternFamily s(make_path(4));
  EXPECT_EQ(s.members().size(), 1U);
  EXPECT_EQ(s.vertex_count(), 4);
}
