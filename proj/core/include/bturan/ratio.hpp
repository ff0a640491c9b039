#pragma once

#include <optional>
#include <string>

#include "bturan/bipartite_graph.hpp"
#include "bturan/pattern.hpp"
#include "bturan/registry.hpp"

namespace bturan {

/// Larger root of 14x^2 - 14x + 3 = 0, closed form.
double x0();
/// The same root by bisection on [0.5, 1].
double x0_bisection(double tol = 1e-15);

struct RatioParams {
  double c = 0.75;  // 2/3 <= c < 1
  double p = 0.5;   // 0 < p <= c
  int k = 8;        // tree size scale
  int n = 32;       // host half-size
};

/// Sizes after flooring. Zero where a kind does not use the quantity.
struct RatioBlocks {
  int biclique = 0;  // (2c-1)k
  int path = 0;      // (1-c)k per side
  int periods = 0;   // copies of biclique + path
  int universal = 0; // floor(pk/2)
  int ell = 0;       // smallest even number > pk
  int alpha = 0;     // floor((1-c-p/2)k - 2)
};

RatioBlocks ratio_blocks(int kind, const RatioParams& params);

/// Kind 1: bicliques joined by paths. Kind 2: universal vertices u in A and
/// floor(pk/2) - 1 in B. Kind 3: a path with two attached bicliques.
/// Throws InvalidArgument naming an empty or oversized block.
BipartiteGraph build_ratio_construction(int kind, const RatioParams& params);

/// Dense T-free subgraph of K_{n,n}: two bicliques of smaller side k - 1 when
/// l < 2k, otherwise disjoint K_{l-1,l-1} blocks.
BipartiteGraph gamma_b_witness(const Pattern& t, int n);

/// (2/3)(|T|-2)n - |T|^2 when l < 2k, (2/3 - 1/l)(|T|-2)n - |T|^2 otherwise.
double gamma_b_guarantee(const Pattern& t, int n);

enum class RatioSource { Solver, Registry, Witness };

struct RatioReport {
  std::string tree;
  int n = 0;
  Variant variant = Variant::B;
  RatioSource source = RatioSource::Solver;
  long long edges = 0;  // exact value, or lower bound for witness and ranges
  double ratio = 0;
  bool exact = false;
  std::optional<long long> upper_edges;
  std::optional<double> upper_ratio;
};

std::string_view source_name(RatioSource s);
std::optional<RatioSource> source_from_name(std::string_view name);

/// edges / ((|T| - 2) n). Needs |T| >= 3.
RatioReport finite_ratio(const Pattern& t, int n, Variant variant, RatioSource source);

}  // namespace bturan
