#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bturan/bipartite_graph.hpp"
#include "bturan/canonical.hpp"
#include "bturan/pattern.hpp"
#include "bturan/registry.hpp"

namespace bturan {

struct SolverConfig {
  Variant variant = Variant::B;
  std::size_t memo_capacity = std::size_t{1} << 21;  // entries, over all shards
  int threads = 1;
  std::uint64_t node_budget = 200'000'000;
  bool enumerate_extremal = false;
  bool seed_from_registry = true;
};

enum class SolveStatus {
  Exact,
  Inconclusive,     // node budget ran out; value is the best lower bound found
  NoConnectedHost,  // bc only: no spanning-connected F-free subgraph exists
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double wall_seconds = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Exact;
  long long value = 0;
  BipartiteGraph certificate;
  std::optional<std::vector<std::pair<CanonicalCode, BipartiteGraph>>> all_extremal;  // sorted by code
  SolveStats stats;
  bool degenerate = false;    // no member fits K_{a,b}
  bool experimental = false;  // bc on an unbalanced host

  bool is_exact() const noexcept { return status == SolveStatus::Exact; }
};

/// Exact ex_b(a, b, F) or ex_bc(a, b, F). Throws InfeasibleQuery for bc when
/// the connected variant is undefined for a single pattern.
SolveResult solve(int a, int b, const PatternFamily& f, const SolverConfig& cfg = {});

/// solve() with enumeration of every extremal graph up to isomorphism.
SolveResult enumerate_extremal(int a, int b, const PatternFamily& f, Variant variant, SolverConfig cfg = {});

inline constexpr int kMaxGeneralOrder = 10;

/// Classical ex(n, F) over all n-vertex graphs. Throws InvalidArgument past
/// kMaxGeneralOrder and ResourceError when the node budget runs out.
long long solve_general(int n, const Pattern& p, const SolverConfig& cfg = {});

}  // namespace bturan
