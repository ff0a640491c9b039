#include <gtest/gtest.h>

#include "bturan/canonical.hpp"
#include "bturan/constructions.hpp"
#include "bturan/error.hpp"

using namespace bturan;

namespace {

ConstructionSpec spec(ConstructionKind k, std::vector<int> p) { return {k, std::move(p)}; }

// All valid parameter tuples with host parts up to `limit`.
std::vector<ConstructionSpec> sweep(ConstructionKind kind, int limit) {
  std::vector<ConstructionSpec> out;
  auto push = [&](std::vector<int> p) {
    ConstructionSpec s{kind, std::move(p)};
    try {
      validate(s);
      out.push_back(std::move(s));
    } catch (const InvalidArgument&) {
    }
  };
  const auto arity = parameter_names(kind).size();
  for (int x = 0; x <= limit; ++x) {
    if (arity == 1) {
      push({x});
      continue;
    }
    for (int y = 0; y <= limit + 2; ++y) {
      if (arity == 2) {
        push({x, y});
        continue;
      }
      for (int z = 0; z <= limit; z += (limit > 8 ? 3 : 1)) push({x, y, z});
    }
  }
  return out;
}

int max_degree(const BipartiteGraph& g) {
  int d = 0;
  for (int i = 0; i < g.left_size(); ++i) d = std::max(d, g.left_degree(i));
  for (int j = 0; j < g.right_size(); ++j) d = std::max(d, g.right_degree(j));
  return d;
}

}  // namespace

TEST(Constructions, ThetaFive) {
  auto g = build_construction(spec(ConstructionKind::Theta, {5}));
  EXPECT_EQ(g.left_size(), 5);
  EXPECT_EQ(g.edge_count(), 12);
  EXPECT_TRUE(is_connected(g));
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_EQ(g.left_degree(0), 4);
  EXPECT_EQ(g.right_degree(0), 4);
}

TEST(Constructions, TwoBicliquesSix) {
  auto s = spec(ConstructionKind::TwoBicliques2, {6});
  auto g = build_construction(s);
  EXPECT_EQ(g.edge_count(), 16);
  auto expected = BipartiteGraph::complete(2, 4).disjoint_union(BipartiteGraph::complete(4, 2));
  EXPECT_EQ(canonical_code(g), canonical_code(expected));
  EXPECT_TRUE(verify_construction(s).ok());
}

TEST(Constructions, CirculantFiveThree) {
  auto g = build_construction(spec(ConstructionKind::Circulant, {5, 3}));
  EXPECT_EQ(g.edge_count(), 15);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(g.left_degree(i), 3);
    EXPECT_EQ(g.right_degree(i), 3);
  }
  EXPECT_TRUE(is_connected(g));
}

TEST(Constructions, ClaimedCounts) {
  EXPECT_EQ(claimed_edge_count(spec(ConstructionKind::DisjointDoubleBiclique, {2, 6, 6})), 16);
  EXPECT_EQ(claimed_edge_count(spec(ConstructionKind::ConnectedD22, {6})), 15);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(claimed_edge_count(spec(ConstructionKind::Matching, {n})), n);
  EXPECT_EQ(claimed_edge_count(spec(ConstructionKind::BlocksUnion, {4, 4})), 10);
  EXPECT_EQ(claimed_edge_count(spec(ConstructionKind::BridgedDoubleBiclique, {2, 6, 6})), 15);
  EXPECT_EQ(claimed_edge_count(spec(ConstructionKind::StarPlus, {4, 6, 2})), 9);
}

TEST(Constructions, RejectsOutOfRange) {
  EXPECT_THROW(build_construction(spec(ConstructionKind::Circulant, {5, 1})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::Circulant, {5, 6})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::Theta, {2})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::TwoBicliques2, {2})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::ConnectedD22, {3})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::DisjointDoubleBiclique, {4, 3, 6})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::StarPlus, {3, 6, 3})), InvalidArgument);
  EXPECT_THROW(build_construction(spec(ConstructionKind::StarPlus, {5, 4, 2})), InvalidArgument);
  try {
    build_construction(spec(ConstructionKind::Theta, {2}));
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 3"), std::string::npos);
  }
}

TEST(Constructions, Literals) {
  EXPECT_EQ(parse_construction("theta(5)"), spec(ConstructionKind::Theta, {5}));
  EXPECT_EQ(parse_construction("circulant(k=3,n=6)"), spec(ConstructionKind::Circulant, {6, 3}));
  EXPECT_EQ(parse_construction("disjoint_double_biclique(2,a=6,b=7)"),
            spec(ConstructionKind::DisjointDoubleBiclique, {2, 6, 7}));
  EXPECT_EQ(to_string(spec(ConstructionKind::StarPlus, {4, 6, 2})), "star_plus(4,6,2)");
  for (const char* bad : {"theta", "theta()", "theta(5,6)", "nope(3)", "circulant(n=5,n=5)", "theta(x)", "theta(2)"})
    EXPECT_THROW(parse_construction(bad), InvalidArgument) << bad;
  for (auto kind : all_construction_kinds()) EXPECT_EQ(kind_from_name(kind_name(kind)), kind);
}

TEST(Constructions, SpanningDoubleStar) {
  for (int n = 2; n <= 12; ++n) {
    auto g = build_construction(spec(ConstructionKind::SpanningDoubleStar, {n}));
    EXPECT_EQ(g.edge_count(), 2 * n - 1);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(Constructions, ConnectivityOfConnectedKinds) {
  for (auto kind : all_construction_kinds()) {
    if (!is_connected_kind(kind)) continue;
    for (const auto& s : sweep(kind, 12)) EXPECT_TRUE(is_connected(build_construction(s))) << to_string(s);
  }
}

TEST(Constructions, DegreesOfRegularKinds) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 2; k <= n; ++k) EXPECT_EQ(max_degree(build_construction(spec(ConstructionKind::Circulant, {n, k}))), k);
}

TEST(ConstructionsProperty, EdgeCountIdentity) {
  for (auto kind : all_construction_kinds()) {
    auto specs = sweep(kind, 20);
    EXPECT_FALSE(specs.empty());
    for (const auto& s : specs) {
      auto g = build_construction(s);
      EXPECT_EQ(g.edge_count(), claimed_edge_count(s)) << to_string(s);
      EXPECT_EQ((std::pair{g.left_size(), g.right_size()}), host_parts(s));
    }
  }
}

TEST(ConstructionsProperty, FreeOfDeclaredTarget) {
  for (auto kind : all_construction_kinds()) {
    for (const auto& s : sweep(kind, 14)) {
      if (kind == ConstructionKind::DisjointDoubleBiclique && s.params[0] > 4) continue;
      auto v = verify_construction(s);
      EXPECT_TRUE(v.free) << to_string(s) << " contains " << declared_target(s).display_name();
    }
  }
}

TEST(ConstructionsProperty, DoubleBicliqueAvoidsLargeSmallPart) {
  // Every connected pattern with smaller part >= s+1 is excluded: check trees on up to 9 vertices.
  for (int s = 0; s <= 3; ++s) {
    auto g = build_construction(spec(ConstructionKind::DisjointDoubleBiclique, {s, 9, 10}));
    for (int k = s + 1; 2 * k <= 9; ++k)
      for (int l = k; k + l <= 9; ++l) EXPECT_TRUE(is_family_free(g, PatternFamily(TreesKL{k, l}))) << s << " " << k << "," << l;
  }
}
