#include "bturan/cut.hpp"

#include <algorithm>
#include <bit>

#include "bturan/error.hpp"

namespace bturan {

namespace {

Row mask_of(const std::vector<std::uint8_t>& side, std::uint8_t which) {
  Row m = 0;
  for (std::size_t v = 0; v < side.size(); ++v)
    if (side[v] == which) m |= Row{1} << v;
  return m;
}

void check_balanced(const GeneralGraph& g, const std::vector<std::uint8_t>& side) {
  const int n2 = g.vertex_count();
  if (static_cast<int>(side.size()) != n2) throw InvalidArgument("cut assigns " + std::to_string(side.size()) + " vertices, graph has " + std::to_string(n2));
  int in_b = 0;
  for (auto s : side) {
    if (s > 1) throw InvalidArgument("cut sides must be 0 or 1");
    in_b += s;
  }
  if (2 * in_b != n2) throw InvalidArgument("cut is not balanced");
}

long long count_cut(const GeneralGraph& g, Row a_mask) {
  long long total = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((a_mask >> v) & 1U) total += std::popcount(g.neighbours(v) & ~a_mask);
  return total;
}

// Change in cut size when u (in A) and v (in B) trade sides.
int swap_gain(const GeneralGraph& g, Row a_mask, int u, int v) {
  const Row b_mask = g.all_vertices() & ~a_mask;
  const int u_same = std::popcount(g.neighbours(u) & a_mask);
  const int u_cross = std::popcount(g.neighbours(u) & b_mask);
  const int v_same = std::popcount(g.neighbours(v) & b_mask);
  const int v_cross = std::popcount(g.neighbours(v) & a_mask);
  return u_same - u_cross + v_same - v_cross + (g.has_edge(u, v) ? 2 : 0);
}

std::optional<std::pair<int, int>> improving_cut_edge(const GeneralGraph& g, Row a_mask, const std::vector<Edge>& edges) {
  for (const auto& e : edges) {
    int u = e.u, v = e.v;
    const bool u_in_a = (a_mask >> u) & 1U;
    if (u_in_a == static_cast<bool>((a_mask >> v) & 1U)) continue;
    if (!u_in_a) std::swap(u, v);
    if (swap_gain(g, a_mask, u, v) > 0) return std::pair{u, v};
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> improving_pair(const GeneralGraph& g, Row a_mask) {
  const int n2 = g.vertex_count();
  for (int u = 0; u < n2; ++u) {
    if (!((a_mask >> u) & 1U)) continue;
    for (int v = 0; v < n2; ++v)
      if (!((a_mask >> v) & 1U) && swap_gain(g, a_mask, u, v) > 0) return std::pair{u, v};
  }
  return std::nullopt;
}

}  // namespace

long long cut_size(const GeneralGraph& g, const std::vector<std::uint8_t>& side) {
  check_balanced(g, side);
  return count_cut(g, mask_of(side, 0));
}

long long switching_guarantee(const GeneralGraph& g) {
  const long long n = g.vertex_count() / 2;
  if (n == 0) return 0;
  const long long den = 2 * n - 1;
  return (n * g.edge_count() + den - 1) / den;
}

BalancedCut switch_to_large_cut(const GeneralGraph& g, std::optional<std::vector<std::uint8_t>> seed) {
  const int n2 = g.vertex_count();
  if (n2 < 2 || n2 % 2) throw InvalidArgument("balanced cut needs an even vertex count >= 2, got " + std::to_string(n2));
  std::vector<std::uint8_t> side;
  if (seed) {
    side = std::move(*seed);
  } else {
    side.assign(static_cast<std::size_t>(n2), 0);
    std::fill(side.begin() + n2 / 2, side.end(), 1);
  }
  check_balanced(g, side);
  Row a_mask = mask_of(side, 0);
  const auto edges = g.edges();
  while (true) {
    auto swap = improving_cut_edge(g, a_mask, edges);
    // A cut with no improving cut edge can still be improved by a non-adjacent
    // pair, e.g. when no edge crosses at all.
    if (!swap) swap = improving_pair(g, a_mask);
    if (!swap) break;
    a_mask ^= (Row{1} << swap->first) | (Row{1} << swap->second);
  }
  BalancedCut out;
  for (int v = 0; v < n2; ++v) side[v] = ((a_mask >> v) & 1U) ? 0 : 1;
  out.side = std::move(side);
  out.cut_size = count_cut(g, a_mask);
  return out;
}

bool is_switch_optimal(const GeneralGraph& g, const BalancedCut& cut) {
  check_balanced(g, cut.side);
  return !improving_cut_edge(g, mask_of(cut.side, 0), g.edges());
}

bool is_pair_swap_optimal(const GeneralGraph& g, const BalancedCut& cut) {
  check_balanced(g, cut.side);
  return !improving_pair(g, mask_of(cut.side, 0));
}

BalancedCut max_balanced_cut(const GeneralGraph& g) {
  const int n2 = g.vertex_count();
  if (n2 < 2 || n2 % 2) throw InvalidArgument("balanced cut needs an even vertex count >= 2");
  if (n2 > 20) throw InvalidArgument("exhaustive balanced cut supports at most 20 vertices");
  long long best = -1;
  Row best_mask = 0;
  // Vertex 0 stays in A: each bipartition is visited once.
  for (Row m = 0; m < (Row{1} << (n2 - 1)); ++m) {
    const Row a_mask = (m << 1) | 1U;
    if (std::popcount(a_mask) != n2 / 2) continue;
    const long long c = count_cut(g, a_mask);
    if (c > best) {
      best = c;
      best_mask = a_mask;
    }
  }
  BalancedCut out;
  out.side.resize(static_cast<std::size_t>(n2));
  for (int v = 0; v < n2; ++v) out.side[v] = ((best_mask >> v) & 1U) ? 0 : 1;
  out.cut_size = best;
  return out;
}

BipartiteGraph bipartite_subgraph_from_cut(const GeneralGraph& g, const BalancedCut& cut) {
  check_balanced(g, cut.side);
  const int n2 = g.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n2));
  int next_a = 0, next_b = 0;
  for (int v = 0; v < n2; ++v) index[v] = cut.side[v] == 0 ? next_a++ : next_b++;
  BipartiteGraph out(n2 / 2, n2 / 2);
  for (const auto& e : g.edges()) {
    if (cut.side[e.u] == cut.side[e.v]) continue;
    const int a = cut.side[e.u] == 0 ? e.u : e.v;
    const int b = a == e.u ? e.v : e.u;
    out.add_edge(index[a], index[b]);
  }
  return out;
}

}  // namespace bturan
