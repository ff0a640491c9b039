#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bturan/bipartite_graph.hpp"
#include "bturan/embedder.hpp"
#include "bturan/pattern.hpp"

namespace bturan {

enum class ConstructionKind {
  DisjointDoubleBiclique,   // (s, a, b)
  BlocksUnion,              // (n, L)
  HalvedBlocks,             // (n, v)
  Circulant,                // (n, k)
  Matching,                 // (n)
  TwoStars,                 // (n)
  SpanningDoubleStar,       // (n)
  Theta,                    // (n)
  TwoBicliques2,            // (n)
  ConnectedD22,             // (n)
  SpiderBlocks,             // (n, d)
  BridgedDoubleBiclique,    // (s, a, b)
  StarPlus,                 // (a, b, d)
  SpanningSpider,           // (n)
};

struct ConstructionSpec {
  ConstructionKind kind;
  std::vector<int> params;

  friend bool operator==(const ConstructionSpec&, const ConstructionSpec&) = default;
};

/// Every kind, in declaration order.
std::span<const ConstructionKind> all_construction_kinds();

std::string_view kind_name(ConstructionKind kind);
std::optional<ConstructionKind> kind_from_name(std::string_view name);

/// Parameter names in positional order, e.g. {"s", "a", "b"}.
std::span<const std::string_view> parameter_names(ConstructionKind kind);

/// "theta(5)" style text; keywords are accepted too: "circulant(n=6,k=3)".
ConstructionSpec parse_construction(std::string_view text);
std::string to_string(const ConstructionSpec& spec);

/// Throws InvalidArgument naming the violated bound.
void validate(const ConstructionSpec& spec);

/// Part sizes (a, b) of the built graph.
std::pair<int, int> host_parts(const ConstructionSpec& spec);

BipartiteGraph build_construction(const ConstructionSpec& spec);
long long claimed_edge_count(const ConstructionSpec& spec);

/// The pattern (or family) the construction is built to avoid.
PatternFamily declared_target(const ConstructionSpec& spec);

/// True for kinds whose graphs are spanning-connected.
bool is_connected_kind(ConstructionKind kind);

struct ConstructionVerdict {
  long long edges = 0;
  long long claimed = 0;
  bool free = false;
  bool count_ok = false;
  bool connected = false;
  std::optional<std::pair<std::size_t, Embedding>> witness;  // member index and copy

  bool ok() const noexcept { return free && count_ok; }
};

ConstructionVerdict verify_construction(const ConstructionSpec& spec, const PatternFamily& target, int cap = 12);
inline ConstructionVerdict verify_construction(const ConstructionSpec& spec) {
  return verify_construction(spec, declared_target(spec));
}

}  // namespace bturan
