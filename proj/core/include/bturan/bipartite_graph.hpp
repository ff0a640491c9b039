#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bturan {

/// Largest supported part size. Adjacency rows are single 64-bit words.
inline constexpr int kMaxPartSize = 64;

using Row = std::uint64_t;

/// An edge of a bipartite graph: (left index, right index).
struct BiEdge {
  int left = 0;
  int right = 0;

  friend auto operator<=>(const BiEdge&, const BiEdge&) = default;
};

/// Subgraph of K_{a,b} with labeled vertices. Left vertex i owns the bit row
/// rows()[i]; bit j of that row is set iff i ~ j. Both parts may contain
/// isolated vertices; part sizes are part of the graph's identity.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Edgeless graph on parts (a, b).
  BipartiteGraph(int a, int b);

  /// Graph with exactly the distinct listed edges. Throws InvalidArgument on
  /// an out-of-range endpoint, naming the offending pair.
  BipartiteGraph(int a, int b, std::span<const BiEdge> edges);
  BipartiteGraph(int a, int b, std::initializer_list<BiEdge> edges)
      : BipartiteGraph(a, b, std::span<const BiEdge>(edges.begin(), edges.size())) {}

  static BipartiteGraph complete(int a, int b);

  int left_size() const noexcept { return a_; }
  int right_size() const noexcept { return b_; }
  int vertex_count() const noexcept { return a_ + b_; }

  int edge_count() const noexcept {
    int total = 0;
    for (Row r : rows_) total += std::popcount(r);
    return total;
  }

  bool has_edge(int i, int j) const noexcept { return (rows_[i] >> j) & 1U; }

  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  Row row(int i) const noexcept { return rows_[i]; }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  /// Bitset of left neighbours of right vertex j.
  Row column(int j) const noexcept;

  int left_degree(int i) const noexcept { return std::popcount(rows_[i]); }
  int right_degree(int j) const noexcept { return std::popcount(column(j)); }

  /// Edges sorted lexicographically by (left, right).
  std::vector<BiEdge> edges() const;

  /// Part swap: left and right exchange roles.
  BipartiteGraph transposed() const;

  /// Same edges on larger parts; the new vertices are isolated.
  BipartiteGraph padded(int a, int b) const;

  /// Disjoint union placing `other` after this graph's vertices on both sides.
  BipartiteGraph disjoint_union(const BipartiteGraph& other) const;

  bool is_subgraph_of(const BipartiteGraph& other) const noexcept;

  Row full_right_mask() const noexcept { return b_ == 64 ? ~Row{0} : ((Row{1} << b_) - 1); }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int a_ = 0;
  int b_ = 0;
  std::vector<Row> rows_;
};

/// True iff all a+b vertices lie in a single component. Isolated vertices
/// disconnect; the graph on a single vertex is connected, the empty graph is not.
bool is_connected(const BipartiteGraph& g);

/// Number of connected components, counting isolated vertices.
int component_count(const BipartiteGraph& g);

}  // namespace bturan
