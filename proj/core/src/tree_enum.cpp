#include "bturan/tree_enum.hpp"

#include <algorithm>
#include <set>
#include <optional>
#include <string>

#include "bturan/error.hpp"

namespace bturan {

std::vector<std::vector<int>> rooted_level_sequences(int m) {
  if (m < 1) throw InvalidArgument("rooted trees need m >= 1 vertices");
  std::vector<std::vector<int>> out;
  std::vector<int> level(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) level[i] = i + 1;
  while (true) {
    out.push_back(level);
    int p = -1;
    for (int i = m - 1; i >= 0; --i) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < m; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

namespace {

std::vector<Edge> edges_from_levels(const std::vector<int>& level) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < level.size(); ++i) {
    int j = static_cast<int>(i) - 1;
    while (level[j] != level[i] - 1) --j;
    e.push_back({j, static_cast<int>(i)});
  }
  return e;
}

}  // namespace

std::vector<Pattern> free_trees(int m, int cap) {
  if (m < 2) throw InvalidArgument("free trees need m >= 2 vertices");
  if (m > cap) {
    throw ResourceError("tree enumeration on " + std::to_string(m) + " vertices exceeds cap " + std::to_string(cap));
  }
  std::set<std::string> seen;
  std::vector<Pattern> out;
  for (const auto& level : rooted_level_sequences(m)) {
    auto p = Pattern::from_edges(edges_from_levels(level));
    if (seen.insert(p.canonical_form()).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pattern> enumerate_T_kl(int k, int l, int cap) {
  if (k < 1 || k > l) throw InvalidArgument("T_{k,l} needs 1 <= k <= l");
  if (k + l > cap) {
    throw ResourceError("T_{" + std::to_string(k) + "," + std::to_string(l) + "} exceeds vertex cap " +
                        std::to_string(cap));
  }
  std::vector<Pattern> out;
  for (auto& t : free_trees(k + l, cap)) {
    if (t.part_sizes() == std::pair{k, l}) out.push_back(std::move(t));
  }
  return out;
}

namespace {

std::optional<Pattern> shape_of(const Pattern& t) {
  const int n = t.vertex_count();
  if (t.component_count() != 1 || n < 2) return std::nullopt;
  if (t.max_degree() <= 2) return make_path(n);
  std::vector<int> inner;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) > 1) inner.push_back(v);
  std::vector<int> branch;
  for (int v : inner)
    if (t.degree(v) >= 3) branch.push_back(v);
  if (branch.size() == 1) {
    const int c = branch[0];
    if (t.degree(c) == n - 1) return make_star(n - 1);
    std::vector<int> legs;
    for (int first : t.neighbours(c)) {
      int prev = c, cur = first, len = 1;
      while (t.degree(cur) == 2) {
        const int next = t.neighbours(cur)[0] == prev ? t.neighbours(cur)[1] : t.neighbours(cur)[0];
        prev = cur;
        cur = next;
        ++len;
      }
      legs.push_back(len);
    }
    return make_spider(legs);
  }
  if (inner.size() == 2) return make_double_star(t.degree(inner[0]) - 1, t.degree(inner[1]) - 1);
  if (inner.size() == 3) {
    // The middle spine vertex is the inner vertex adjacent to both others.
    auto adjacent = [&](int u, int v) {
      const auto& nb = t.neighbours(u);
      return std::find(nb.begin(), nb.end(), v) != nb.end();
    };
    for (int m = 0; m < 3; ++m) {
      const int u = inner[(m + 1) % 3], v = inner[m], w = inner[(m + 2) % 3];
      if (adjacent(u, v) && adjacent(v, w)) return make_caterpillar(t.degree(u) - 1, t.degree(v) - 2, t.degree(w) - 1);
    }
  }
  return std::nullopt;
}

}  // namespace

Pattern with_literal_name(const Pattern& t) {
  auto named = shape_of(t);
  if (named && named->canonical_form() == t.canonical_form()) return *named;
  return t;
}

}  // namespace bturan
