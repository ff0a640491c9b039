#pragma once

#include <vector>

#include "bturan/pattern.hpp"

namespace bturan {

/// Default bound on k + l for T_{k,l} enumeration.
inline constexpr int kDefaultTreeCap = 12;

/// Canonical level sequences (root at level 1) of all rooted trees on m
/// vertices, in Beyer-Hedetniemi successor order.
std::vector<std::vector<int>> rooted_level_sequences(int m);

/// Every free tree on m >= 2 vertices exactly once up to isomorphism.
/// Throws ResourceError when m > cap.
std::vector<Pattern> free_trees(int m, int cap = kDefaultTreeCap);

/// Members of T_{k,l}: free trees on k + l vertices whose colour classes
/// have sizes {k, l}. Requires 1 <= k <= l; throws ResourceError past cap.
std::vector<Pattern> enumerate_T_kl(int k, int l, int cap = kDefaultTreeCap);

/// The tree renamed with a pattern literal when it is a path, star, spider,
/// double star or caterpillar; otherwise returned unchanged.
Pattern with_literal_name(const Pattern& t);

}  // namespace bturan
