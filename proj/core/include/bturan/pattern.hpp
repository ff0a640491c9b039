#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bturan/general_graph.hpp"

namespace bturan {

/// A forbidden forest without isolated vertices. Vertices of each component
/// are consecutive; every component carries a BFS layout rooted at a
/// centroid, with parents before children, for the embedder.
class Pattern {
 public:
  struct Component {
    int first = 0;                  // first vertex index
    int size = 0;                   // vertex count
    std::vector<int> order;         // BFS order from the centroid root
    std::vector<int> parent;        // parent[v - first], -1 at the root
    std::array<int, 2> colour_counts{};  // vertices of colour 0 / 1
  };

  /// Builds a forest from an edge list over vertices 0..max index. Rejects
  /// cycles, loops, parallel edges and isolated vertices (labels with no edge).
  static Pattern from_edges(std::span<const Edge> edges, std::string name = {});

  static Pattern disjoint_union(std::span<const Pattern> parts, std::string name = {});

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  bool is_tree() const noexcept { return components_.size() == 1; }
  int max_degree() const noexcept { return max_degree_; }
  int degree(int v) const noexcept { return static_cast<int>(adj_[v].size()); }

  /// Part sizes (p, q), p <= q. For a forest the components' orientations
  /// are chosen to make the parts as balanced as possible.
  std::pair<int, int> part_sizes() const noexcept { return parts_; }

  /// Colour (0/1) of a vertex in its component's 2-colouring; roots have colour 0.
  int colour(int v) const noexcept { return colour_[v]; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbours(int v) const noexcept { return adj_[v]; }
  const std::vector<Component>& components() const noexcept { return components_; }

  /// Canonical string of the unlabelled forest (equal iff isomorphic).
  const std::string& canonical_form() const noexcept { return canon_; }

  /// Normalised literal when built from a named constructor, else empty.
  const std::string& name() const noexcept { return name_; }
  std::string display_name() const;

  /// True iff the pattern has an orientation with p <= a and q <= b after
  /// normalising a <= b (each component oriented independently).
  bool fits(int a, int b) const;

  friend bool operator==(const Pattern& x, const Pattern& y) { return x.canon_ == y.canon_; }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::pair<int, int> parts_{0, 0};
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> colour_;
  std::vector<Component> components_;
  std::string canon_;
  std::string name_;
};

/// Path on k vertices (k >= 2).
Pattern make_path(int k);
/// Star K_{1,k} (k >= 1).
Pattern make_star(int k);
/// Spider with the given leg lengths: at least 3 legs, each of length >= 1.
Pattern make_spider(std::span<const int> legs);
/// Double star D_{s,t}: adjacent centres with s and t pendant leaves.
Pattern make_double_star(int s, int t);
/// Caterpillar P_{r,s,t}: spine u-v-w carrying r, s, t pendant leaves.
Pattern make_caterpillar(int r, int s, int t);
Pattern make_union(std::span<const Pattern> parts);

/// Shapes used by the registry recogniser. They accept degenerate parameters
/// that make_spider rejects (two-legged "spiders" are paths).
Pattern spider_long_leg(int long_leg, int short_legs);

/// False exactly for K2, 2K2, P3, P3 u K2 and P4.
bool exbc_defined(const Pattern& p);

/// Trees with bipartition part sizes k and l, or a single pattern.
struct TreesKL {
  int k = 1;
  int l = 1;
  friend bool operator==(const TreesKL&, const TreesKL&) = default;
};

class PatternFamily {
 public:
  explicit PatternFamily(Pattern single) : value_(std::move(single)) {}
  explicit PatternFamily(TreesKL trees);

  bool is_single() const noexcept { return std::holds_alternative<Pattern>(value_); }
  const Pattern& single() const { return std::get<Pattern>(value_); }
  const TreesKL& trees() const { return std::get<TreesKL>(value_); }

  /// All members; for T_{k,l} this enumerates and throws ResourceError past `cap`.
  std::vector<Pattern> members(int cap = 12) const;

  std::string display_name() const;

  /// Part sizes shared by all members (for T_{k,l}: (k, l)).
  std::pair<int, int> part_sizes() const;
  int vertex_count() const;
  bool fits(int a, int b) const;

 private:
  std::variant<Pattern, TreesKL> value_;
};

}  // namespace bturan
