#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bturan/constructions.hpp"
#include "bturan/pattern.hpp"

namespace bturan {

enum class Variant { B, BC };

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

/// Exact(v) is stored as lo = hi = v.
struct ValueOrBounds {
  enum class Tag { Exact, Range, Unknown };

  Tag tag = Tag::Unknown;
  long long lo = 0;
  long long hi = 0;
  std::vector<std::string> citations;  // every contributing entry
  std::string notes;
  std::optional<ConstructionSpec> witness;  // builds a graph with exactly `lo` edges

  bool is_exact() const noexcept { return tag == Tag::Exact; }
  bool is_unknown() const noexcept { return tag == Tag::Unknown; }
  bool admits(long long v) const noexcept { return tag == Tag::Unknown || (lo <= v && v <= hi); }
  std::string citation() const;
  std::string describe() const;  // "Exact(9)", "Range(10,11)", "Unknown"

  static ValueOrBounds exact(long long v, std::string citation);
  static ValueOrBounds range(long long lo, long long hi, std::string citation);
  static ValueOrBounds unknown(std::string citation);
};

/// Named forms a single pattern is isomorphic to. Empty / nullopt when absent.
struct PatternShapes {
  std::optional<int> path;                 // P_k
  std::optional<int> star;                 // K_{1,k}
  std::optional<int> spider_two;           // S_{2,d*1}, d >= 1 (d = 1 is P_4)
  std::optional<int> spider_three;         // S_{3,d*1}, d >= 1 (d = 1 is P_5)
  std::optional<int> long_spider;          // S_{2l,(l+1)*1}, l >= 2
  std::vector<std::pair<int, int>> double_stars;          // (s, t), s <= t
  std::vector<std::array<int, 3>> caterpillars;           // (r, s, t), r <= t
  bool s221 = false;
};

PatternShapes recognise_shapes(const Pattern& p);

/// One piece of evidence. Bounds are absent when the entry only supplies
/// the other side.
struct Contribution {
  std::optional<long long> lo;
  std::optional<long long> hi;
  std::optional<ConstructionSpec> witness;  // attains `lo`
};

struct FormulaEntry {
  std::string id;
  std::string citation;
  Variant variant;
  /// nullopt when the entry does not apply to (F, a, b) with a <= b.
  std::function<std::optional<Contribution>(const PatternFamily&, const PatternShapes&, int a, int b)> evaluate;
};

const std::vector<FormulaEntry>& registry_entries();

/// Shapes for a family: the single member's shapes, or empty for T_{k,l}.
PatternShapes family_shapes(const PatternFamily& f);

/// Tightest supported statement. Throws InfeasibleQuery when no orientation
/// of F fits K_{a,b}, or for BC when the connected variant is undefined.
ValueOrBounds lookup(const PatternFamily& f, int a, int b, Variant variant);

/// Sandwich bounds from general Turan numbers ex(n,F) and ex(2n,F).
ValueOrBounds generic_bounds(int n, std::optional<long long> ex_n, std::optional<long long> ex_2n);

}  // namespace bturan
