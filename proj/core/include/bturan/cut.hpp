#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bturan/bipartite_graph.hpp"
#include "bturan/general_graph.hpp"

namespace bturan {

/// side[v] is 0 for A and 1 for B; |A| = |B|.
struct BalancedCut {
  std::vector<std::uint8_t> side;
  long long cut_size = 0;
};

/// Cut edges of `side` in G. Throws InvalidArgument unless the sides are balanced.
long long cut_size(const GeneralGraph& g, const std::vector<std::uint8_t>& side);

/// Local switching: while swapping some u in A with some v in B enlarges the
/// cut, swap them. Cut edges are tried first, in lexicographic order, then
/// other pairs; the scan restarts after each swap. The default seed puts
/// 0..n-1 in A.
BalancedCut switch_to_large_cut(const GeneralGraph& g, std::optional<std::vector<std::uint8_t>> seed = std::nullopt);

/// ceil(n e / (2n - 1)) for a graph on 2n vertices.
long long switching_guarantee(const GeneralGraph& g);

/// True iff no cut-edge swap enlarges the cut.
bool is_switch_optimal(const GeneralGraph& g, const BalancedCut& cut);
/// True iff no swap of any u in A with any v in B enlarges the cut.
bool is_pair_swap_optimal(const GeneralGraph& g, const BalancedCut& cut);

/// Largest balanced cut by exhaustion; at most 20 vertices.
BalancedCut max_balanced_cut(const GeneralGraph& g);

/// Cut edges as a subgraph of K_{n,n}: A in increasing order on the left,
/// B in increasing order on the right.
BipartiteGraph bipartite_subgraph_from_cut(const GeneralGraph& g, const BalancedCut& cut);

}  // namespace bturan
