#include <gtest/gtest.h>

#include <bit>

#include "bturan/canonical.hpp"
#include "bturan/constructions.hpp"
#include "bturan/embedder.hpp"
#include "bturan/error.hpp"
#include "bturan/pattern_literal.hpp"
#include "bturan/solver.hpp"
#include "bturan/tree_enum.hpp"

using namespace bturan;

namespace {

PatternFamily lit(const char* s) { return parse_pattern_literal(s); }

SolverConfig config(Variant v, int threads = 1) {
  SolverConfig c;
  c.variant = v;
  c.threads = threads;
  return c;
}

long long brute_force(const PatternFamily& f, int a, int b, bool connected) {
  const auto members = f.members();
  const int m = a * b;
  long long best = -1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int e = std::popcount(mask);
    if (e <= best) continue;
    BipartiteGraph g(a, b);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) g.add_edge(i / b, i % b);
    if (connected && !is_connected(g)) continue;
    if (is_family_free(g, members)) best = e;
  }
  return best;
}

long long brute_force_general(int n, const Pattern& p) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  long long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    const int e = std::popcount(mask);
    if (e <= best) continue;
    GeneralGraph g(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1u) g.add_edge(all[i].u, all[i].v);
    if (!contains(g, p)) best = e;
  }
  return best;
}

void check_certificate(const SolveResult& r, const PatternFamily& f, int a, int b, Variant v) {
  ASSERT_TRUE(r.is_exact());
  EXPECT_EQ(r.certificate.left_size(), a);
  EXPECT_EQ(r.certificate.right_size(), b);
  EXPECT_EQ(r.certificate.edge_count(), r.value);
  if (!r.degenerate) EXPECT_TRUE(is_family_free(r.certificate, f));
  if (v == Variant::BC) EXPECT_TRUE(is_connected(r.certificate));
}

BipartiteGraph theta(int n) { return build_construction({ConstructionKind::Theta, {n}}); }

}  // namespace

TEST(Solver, Examples) {
  auto d22 = solve(3, 3, lit("D2,2"));
  EXPECT_EQ(d22.value, 6);
  check_certificate(d22, lit("D2,2"), 3, 3, Variant::B);

  auto p6 = solve(3, 3, lit("P6"));
  EXPECT_EQ(p6.value, 6);
  EXPECT_EQ(canonical_code(p6.certificate), canonical_code(BipartiteGraph::complete(2, 3).padded(3, 3)));

  EXPECT_EQ(solve(2, 2, lit("P4")).value, 2);
  auto s311 = solve(4, 4, lit("S3,1,1"), config(Variant::BC));
  EXPECT_EQ(s311.value, 8);
  check_certificate(s311, lit("S3,1,1"), 4, 4, Variant::BC);
}

TEST(Solver, Degenerate) {
  auto r = solve(2, 2, lit("P5"));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.certificate.edge_count(), 4);
}

TEST(Solver, Rejections) {
  EXPECT_THROW(solve(4, 4, lit("P4"), config(Variant::BC)), InfeasibleQuery);
  EXPECT_THROW(solve(0, 3, lit("P4")), InvalidArgument);
  auto c = config(Variant::B);
  c.threads = 0;
  EXPECT_THROW(solve(3, 3, lit("P4"), c), InvalidArgument);
  EXPECT_THROW(solve_general(11, make_path(3)), InvalidArgument);
}

TEST(Solver, NoConnectedHost) {
  auto r = solve(2, 4, lit("K1,3"), config(Variant::BC));
  EXPECT_EQ(r.status, SolveStatus::NoConnectedHost);
  EXPECT_TRUE(r.experimental);
}

TEST(Solver, BudgetExhaustion) {
  auto c = config(Variant::B);
  c.node_budget = 3;
  c.seed_from_registry = false;
  auto r = solve(5, 5, lit("D2,2"), c);
  EXPECT_EQ(r.status, SolveStatus::Inconclusive);
  EXPECT_LE(r.value, 12);
  if (r.value >= 0) EXPECT_TRUE(is_family_free(r.certificate, lit("D2,2")));
}

TEST(Solver, ThreadCountDoesNotChangeValue) {
  for (const char* p : {"D2,2", "S2,2,1", "P5", "K1,3"}) {
    for (auto v : {Variant::B, Variant::BC}) {
      const auto one = solve(4, 4, lit(p), config(v, 1));
      const auto four = solve(4, 4, lit(p), config(v, 4));
      EXPECT_EQ(one.value, four.value) << p;
      check_certificate(four, lit(p), 4, 4, v);
    }
  }
}

TEST(Solver, SeedDoesNotChangeValue) {
  auto c = config(Variant::B);
  c.seed_from_registry = false;
  EXPECT_EQ(solve(5, 5, lit("D2,2"), c).value, solve(5, 5, lit("D2,2")).value);
  EXPECT_EQ(solve(4, 5, lit("S2,2*1"), c).value, 8);  // max{2*4, 2*3 + 2}
}

TEST(Solver, Families) {
  // T_{2,2} = {P4}; T_{1,3} = {K_{1,3}}.
  EXPECT_EQ(solve(4, 4, PatternFamily(TreesKL{2, 2})).value, 6);
  EXPECT_EQ(solve(4, 4, PatternFamily(TreesKL{2, 3})).value, brute_force(PatternFamily(TreesKL{2, 3}), 4, 4, false));
}

TEST(Enumerate, Uniqueness) {
  auto k33 = enumerate_extremal(3, 3, lit("S3,1,1"), Variant::B);
  ASSERT_TRUE(k33.all_extremal);
  ASSERT_EQ(k33.all_extremal->size(), 1u);
  EXPECT_EQ(k33.all_extremal->front().first, canonical_code(BipartiteGraph::complete(3, 3)));

  auto five = enumerate_extremal(5, 5, lit("D2,2"), Variant::B);
  EXPECT_EQ(five.value, 12);
  ASSERT_TRUE(five.all_extremal);
  std::vector<CanonicalCode> codes;
  for (const auto& [code, g] : *five.all_extremal) {
    codes.push_back(code);
    EXPECT_EQ(g.edge_count(), 12);
    EXPECT_TRUE(is_family_free(g, lit("D2,2")));
  }
  const auto two_k23 = BipartiteGraph::complete(2, 3).disjoint_union(BipartiteGraph::complete(3, 2));
  EXPECT_NE(std::find(codes.begin(), codes.end(), canonical_code(two_k23)), codes.end());
  EXPECT_NE(std::find(codes.begin(), codes.end(), canonical_code(theta(5))), codes.end());
}

TEST(Enumerate, PairwiseNonIsomorphic) {
  auto r = enumerate_extremal(4, 4, lit("P5"), Variant::B);
  ASSERT_TRUE(r.all_extremal);
  for (std::size_t i = 0; i < r.all_extremal->size(); ++i) {
    EXPECT_EQ(canonical_code((*r.all_extremal)[i].second), (*r.all_extremal)[i].first);
    for (std::size_t j = i + 1; j < r.all_extremal->size(); ++j)
      EXPECT_NE((*r.all_extremal)[i].first, (*r.all_extremal)[j].first);
  }
}

TEST(SolverGeneral, Examples) {
  EXPECT_EQ(solve_general(3, make_path(3)), 1);
  EXPECT_EQ(solve_general(4, make_path(4)), 3);
  EXPECT_EQ(solve_general(4, make_star(3)), 4);
  EXPECT_EQ(solve_general(2, make_path(3)), 1);
}

TEST(SolverGeneral, AgreesWithExhaustiveSearch) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : {make_path(3), make_path(4), make_star(3), make_path(5), make_double_star(1, 2)})
      EXPECT_EQ(solve_general(n, p), brute_force_general(n, p)) << p.display_name() << " n=" << n;
}

TEST(SolverGeneral, Sandwich) {
  for (const auto& p : {make_path(3), make_path(4), make_star(3)})
    for (int n = 2; n <= 4; ++n) {
      const auto small = solve_general(n, p);
      const auto big = solve_general(2 * n, p);
      const auto b = solve(n, n, PatternFamily(p)).value;
      EXPECT_LT(small, b) << p.display_name() << " " << n;
      EXPECT_LE(b, big);
      EXPECT_GE(b, (static_cast<long long>(n) * big + 2 * n - 2) / (2 * n - 1));
    }
}

// Every pattern on at most 6 vertices (trees and forests), every host with parts <= 3.
TEST(SolverOracle, AgreesWithExhaustiveSearch) {
  std::vector<PatternFamily> fs;
  for (int m = 2; m <= 6; ++m)
    for (auto& t : free_trees(m)) fs.emplace_back(t);
  for (const char* s : {"U(K2,K2)", "U(P3,K2)", "U(P3,P3)", "U(K2,K2,K2)", "U(K1,3,K2)", "U(P4,K2)"})
    fs.push_back(lit(s));
  for (const auto& f : fs)
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b)
        for (auto v : {Variant::B, Variant::BC}) {
          if (v == Variant::BC && !exbc_defined(f.single())) continue;
          const auto r = solve(a, b, f, config(v));
          const auto truth = brute_force(f, a, b, v == Variant::BC);
          const std::string tag = f.display_name() + " " + std::to_string(a) + "," + std::to_string(b) + " " +
                                  std::string(variant_name(v));
          if (truth < 0) {
            EXPECT_EQ(r.status, SolveStatus::NoConnectedHost) << tag;
            continue;
          }
          EXPECT_EQ(r.value, truth) << tag;
          check_certificate(r, f, a, b, v);
        }
}

TEST(SolverProperty, ConnectedNeverExceedsUnrestricted) {
  for (int m = 4; m <= 6; ++m)
    for (auto& t : free_trees(m)) {
      PatternFamily f(t);
      if (!exbc_defined(t)) continue;
      for (int n = 3; n <= 4; ++n) {
        const auto b = solve(n, n, f, config(Variant::B));
        const auto c = solve(n, n, f, config(Variant::BC));
        if (c.status == SolveStatus::NoConnectedHost) continue;
        EXPECT_LE(c.value, b.value) << t.display_name();
      }
    }
}

TEST(SolverProperty, AgreesWithRegistryExactValues) {
  for (int m = 3; m <= 6; ++m)
    for (auto& t : free_trees(m)) {
      PatternFamily f(t);
      for (int n = 2; n <= 5; ++n)
        for (auto v : {Variant::B, Variant::BC}) {
          ValueOrBounds known;
          try {
            known = lookup(f, n, n, v);
          } catch (const InfeasibleQuery&) {
            continue;
          }
          const auto r = solve(n, n, f, config(v));
          if (r.status == SolveStatus::NoConnectedHost) continue;
          EXPECT_TRUE(known.admits(r.value)) << t.display_name() << " n=" << n << " " << known.describe() << " got "
                                             << r.value;
        }
    }
}
