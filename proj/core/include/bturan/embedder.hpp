#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bturan/bipartite_graph.hpp"
#include "bturan/general_graph.hpp"
#include "bturan/pattern.hpp"

namespace bturan {

enum class Side : std::uint8_t { Left = 0, Right = 1 };

struct HostVertex {
  Side side = Side::Left;
  int index = 0;

  friend bool operator==(const HostVertex&, const HostVertex&) = default;
};

/// Injective map pattern vertex -> host vertex carrying every pattern edge
/// onto a host edge.
struct Embedding {
  std::vector<HostVertex> map;
};

/// A witness copy of `p` in `g`, or nullopt when `g` is p-free. Components are
/// placed largest first sharing one used-vertex set; each component is tried
/// with its colour-0 class on the left, then on the right.
std::optional<Embedding> find_embedding(const BipartiteGraph& g, const Pattern& p);

inline bool contains(const BipartiteGraph& g, const Pattern& p) { return find_embedding(g, p).has_value(); }

/// Host edges covered by an embedding, sorted lexicographically.
std::vector<BiEdge> edge_image(const Pattern& p, const Embedding& e);

/// Checks injectivity, edge preservation and colour-class placement.
bool is_valid_embedding(const BipartiteGraph& g, const Pattern& p, const Embedding& e);

/// True iff no member embeds. For T_{k,l} members are enumerated (cap applies).
bool is_family_free(const BipartiteGraph& g, const PatternFamily& f, int cap = 12);
bool is_family_free(const BipartiteGraph& g, std::span<const Pattern> members);

/// First member (in order) with a copy in `g` and that copy.
std::optional<std::pair<std::size_t, Embedding>> find_family_embedding(const BipartiteGraph& g,
                                                                       std::span<const Pattern> members);

/// Copy of `p` in a general graph: image vertex per pattern vertex.
std::optional<std::vector<int>> find_embedding(const GeneralGraph& g, const Pattern& p);
inline bool contains(const GeneralGraph& g, const Pattern& p) { return find_embedding(g, p).has_value(); }

}  // namespace bturan
