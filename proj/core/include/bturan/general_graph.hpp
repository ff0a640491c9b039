#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "bturan/bipartite_graph.hpp"

namespace bturan {

/// Undirected edge {u, v} stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 vertices with bit-row adjacency.
/// Used for the classical Turán solver and the balanced cut switcher.
class GeneralGraph {
 public:
  GeneralGraph() = default;
  explicit GeneralGraph(int n);
  GeneralGraph(int n, std::span<const Edge> edges);
  GeneralGraph(int n, std::initializer_list<Edge> edges)
      : GeneralGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static GeneralGraph complete(int n);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept {
    int twice = 0;
    for (Row r : adj_) twice += std::popcount(r);
    return twice / 2;
  }

  bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Row neighbours(int u) const noexcept { return adj_[u]; }
  int degree(int u) const noexcept { return std::popcount(adj_[u]); }
  const std::vector<Row>& rows() const noexcept { return adj_; }

  /// Edges (u < v) sorted lexicographically.
  std::vector<Edge> edges() const;

  Row all_vertices() const noexcept { return n_ == 64 ? ~Row{0} : ((Row{1} << n_) - 1); }

  friend bool operator==(const GeneralGraph&, const GeneralGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Row> adj_;
};

bool is_connected(const GeneralGraph& g);

}  // namespace bturan
