#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "bturan/bipartite_graph.hpp"
#include "bturan/general_graph.hpp"

namespace bturan {

/// Opaque, totally ordered isomorphism invariant. Equal codes iff isomorphic.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

/// Code invariant under permutations within each part, and under the part
/// swap when a == b. Computed as the lexicographically least adjacency matrix
/// over vertex orders compatible with iterated degree refinement.
CanonicalCode canonical_code(const BipartiteGraph& g);

/// Code invariant under all vertex permutations.
CanonicalCode canonical_code(const GeneralGraph& g);

/// The relabelled graph whose adjacency matrix defines the code.
BipartiteGraph canonical_form(const BipartiteGraph& g);

}  // namespace bturan

template <>
struct std::hash<bturan::CanonicalCode> {
  std::size_t operator()(const bturan::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};
