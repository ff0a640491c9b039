#include "bturan/pattern.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "bturan/error.hpp"
#include "bturan/tree_enum.hpp"

namespace bturan {

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[root]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ")";
  return out;
}

// Centres of the tree spanned by `vertices` (one or two), by leaf stripping.
std::vector<int> tree_centres(const std::vector<std::vector<int>>& adj, const std::vector<int>& vertices) {
  if (vertices.size() <= 2) return vertices;
  std::vector<int> deg(adj.size(), 0);
  std::vector<int> layer;
  for (int v : vertices) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = vertices.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_code(const std::vector<std::vector<int>>& adj, const std::vector<int>& vertices) {
  const auto centres = tree_centres(adj, vertices);
  std::string best;
  for (int c : centres) {
    auto code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

// Centroid with the smallest label among minimisers of the largest branch.
int centroid(const std::vector<std::vector<int>>& adj, const std::vector<int>& vertices) {
  const int size = static_cast<int>(vertices.size());
  const int root = vertices.front();
  std::vector<int> parent(adj.size(), -1);
  std::vector<int> sub(adj.size(), 1);
  std::vector<int> order;
  order.push_back(root);
  parent[root] = root;
  for (std::size_t t = 0; t < order.size(); ++t) {
    for (int w : adj[order[t]]) {
      if (parent[w] == -1) {
        parent[w] = order[t];
        order.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != root) sub[parent[*it]] += sub[*it];
  }
  int best = -1;
  int best_branch = size + 1;
  for (int v : vertices) {
    int branch = size - sub[v];
    for (int w : adj[v]) {
      if (w != root && parent[w] == v) branch = std::max(branch, sub[w]);
    }
    if (branch < best_branch || (branch == best_branch && v < best)) {
      best_branch = branch;
      best = v;
    }
  }
  return best;
}

}  // namespace

Pattern Pattern::from_edges(std::span<const Edge> edges, std::string name) {
  if (edges.empty()) throw InvalidArgument("pattern needs at least one edge");
  int n = 0;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0) throw InvalidArgument("negative vertex label in pattern");
    if (e.u == e.v) throw InvalidArgument("pattern has a loop at " + std::to_string(e.u));
    n = std::max({n, e.u + 1, e.v + 1});
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<int> uf(static_cast<std::size_t>(n));
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (const auto& e : edges) {
    if (std::find(adj[e.u].begin(), adj[e.u].end(), e.v) != adj[e.u].end()) {
      throw InvalidArgument("pattern has a parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    int ru = find(e.u);
    int rv = find(e.v);
    if (ru == rv) throw InvalidArgument("pattern is not a forest: edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} closes a cycle");
    uf[ru] = rv;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) throw InvalidArgument("pattern has an isolated vertex " + std::to_string(v));
    std::sort(adj[v].begin(), adj[v].end());
  }

  // Components in order of their smallest label.
  std::vector<std::vector<int>> comps;
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> members{s};
    seen[s] = 1;
    for (std::size_t t = 0; t < members.size(); ++t) {
      for (int w : adj[members[t]]) {
        if (!seen[w]) {
          seen[w] = 1;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(std::move(members));
  }

  Pattern p;
  p.n_ = n;
  p.name_ = std::move(name);
  std::vector<int> relabel(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  int next = 0;
  std::vector<std::string> codes;
  for (const auto& members : comps) {
    codes.push_back(tree_code(adj, members));
    Component c;
    c.first = next;
    c.size = static_cast<int>(members.size());
    const int root = centroid(adj, members);
    std::vector<int> bfs{root};
    std::vector<int> par_old(static_cast<std::size_t>(n), -2);
    par_old[root] = -1;
    for (std::size_t t = 0; t < bfs.size(); ++t) {
      for (int w : adj[bfs[t]]) {
        if (par_old[w] == -2) {
          par_old[w] = bfs[t];
          depth[w] = depth[bfs[t]] + 1;
          bfs.push_back(w);
        }
      }
    }
    for (int v : bfs) relabel[v] = next++;
    for (int v : bfs) {
      c.order.push_back(relabel[v]);
      c.parent.push_back(par_old[v] < 0 ? -1 : relabel[par_old[v]]);
      c.colour_counts[depth[v] % 2]++;
    }
    p.components_.push_back(std::move(c));
  }

  p.adj_.assign(static_cast<std::size_t>(n), {});
  p.colour_.assign(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    p.colour_[relabel[v]] = depth[v] % 2;
    for (int w : adj[v]) p.adj_[relabel[v]].push_back(relabel[w]);
  }
  for (auto& row : p.adj_) std::sort(row.begin(), row.end());
  for (int v = 0; v < n; ++v) {
    p.max_degree_ = std::max(p.max_degree_, static_cast<int>(p.adj_[v].size()));
    for (int w : p.adj_[v]) {
      if (v < w) p.edges_.push_back({v, w});
    }
  }
  std::sort(p.edges_.begin(), p.edges_.end());

  std::sort(codes.begin(), codes.end());
  for (auto& code : codes) p.canon_ += code;

  // Most balanced orientation of the components.
  std::vector<char> reach(static_cast<std::size_t>(n + 1), 0);
  reach[0] = 1;
  for (const auto& c : p.components_) {
    std::vector<char> nxt(reach.size(), 0);
    for (int s = 0; s <= n; ++s) {
      if (!reach[s]) continue;
      nxt[s + c.colour_counts[0]] = 1;
      nxt[s + c.colour_counts[1]] = 1;
    }
    reach = std::move(nxt);
  }
  int best_small = 0;
  for (int s = 0; s <= n / 2; ++s) {
    if (reach[s]) best_small = s;
  }
  p.parts_ = {best_small, n - best_small};
  return p;
}

Pattern Pattern::disjoint_union(std::span<const Pattern> parts, std::string name) {
  std::vector<Edge> all;
  int offset = 0;
  for (const auto& part : parts) {
    for (const auto& e : part.edges()) all.push_back({e.u + offset, e.v + offset});
    offset += part.vertex_count();
  }
  return from_edges(all, std::move(name));
}

std::string Pattern::display_name() const {
  if (!name_.empty()) return name_;
  std::string out = "E[";
  for (std::size_t t = 0; t < edges_.size(); ++t) {
    if (t > 0) out += ",";
    out += std::to_string(edges_[t].u) + "-" + std::to_string(edges_[t].v);
  }
  return out + "]";
}

bool Pattern::fits(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (n_ > a + b) return false;
  std::vector<char> reach(static_cast<std::size_t>(n_ + 1), 0);
  reach[0] = 1;
  for (const auto& c : components_) {
    std::vector<char> nxt(reach.size(), 0);
    for (int s = 0; s <= n_; ++s) {
      if (!reach[s]) continue;
      nxt[s + c.colour_counts[0]] = 1;
      nxt[s + c.colour_counts[1]] = 1;
    }
    reach = std::move(nxt);
  }
  for (int left = 0; left <= std::min(a, n_); ++left) {
    if (reach[left] && n_ - left <= b) return true;
  }
  return false;
}

Pattern make_path(int k) {
  if (k < 2) throw InvalidArgument("path needs k >= 2 vertices, got " + std::to_string(k));
  std::vector<Edge> e;
  for (int v = 0; v + 1 < k; ++v) e.push_back({v, v + 1});
  return Pattern::from_edges(e, "P" + std::to_string(k));
}

Pattern make_star(int k) {
  if (k < 1) throw InvalidArgument("star K1,k needs k >= 1, got " + std::to_string(k));
  std::vector<Edge> e;
  for (int v = 1; v <= k; ++v) e.push_back({0, v});
  return Pattern::from_edges(e, "K1," + std::to_string(k));
}

namespace {

std::vector<Edge> spider_edges(std::span<const int> legs) {
  std::vector<Edge> e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int t = 0; t < len; ++t) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return e;
}

}  // namespace

Pattern make_spider(std::span<const int> legs) {
  if (legs.size() < 3) throw InvalidArgument("spider needs at least 3 legs");
  for (int len : legs) {
    if (len < 1) throw InvalidArgument("spider legs must have length >= 1");
  }
  std::vector<int> sorted(legs.begin(), legs.end());
  std::sort(sorted.rbegin(), sorted.rend());
  std::string name = "S";
  for (std::size_t t = 0; t < sorted.size(); ++t) name += (t ? "," : "") + std::to_string(sorted[t]);
  return Pattern::from_edges(spider_edges(sorted), name);
}

Pattern spider_long_leg(int long_leg, int short_legs) {
  std::vector<int> legs{long_leg};
  legs.insert(legs.end(), static_cast<std::size_t>(short_legs), 1);
  if (legs.size() >= 3) return make_spider(legs);
  return Pattern::from_edges(spider_edges(legs));
}

Pattern make_double_star(int s, int t) {
  if (s < 1 || t < 1) throw InvalidArgument("double star D_{s,t} needs s, t >= 1");
  if (s > t) std::swap(s, t);
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < s; ++i) e.push_back({0, next++});
  for (int i = 0; i < t; ++i) e.push_back({1, next++});
  return Pattern::from_edges(e, "D" + std::to_string(s) + "," + std::to_string(t));
}

Pattern make_caterpillar(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw InvalidArgument("caterpillar P_{r,s,t} needs r, s, t >= 0");
  if (r > t) std::swap(r, t);
  std::vector<Edge> e{{0, 1}, {1, 2}};
  int next = 3;
  for (int i = 0; i < r; ++i) e.push_back({0, next++});
  for (int i = 0; i < s; ++i) e.push_back({1, next++});
  for (int i = 0; i < t; ++i) e.push_back({2, next++});
  return Pattern::from_edges(e, "Prst:" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t));
}

Pattern make_union(std::span<const Pattern> parts) {
  if (parts.size() < 2) throw InvalidArgument("union needs at least two parts");
  std::vector<std::string> names;
  for (const auto& p : parts) names.push_back(p.display_name());
  std::sort(names.begin(), names.end());
  std::string name = "U(";
  for (std::size_t t = 0; t < names.size(); ++t) name += (t ? "," : "") + names[t];
  return Pattern::disjoint_union(parts, name + ")");
}

bool exbc_defined(const Pattern& p) {
  static const std::vector<std::string> excluded = [] {
    const Pattern k2 = make_path(2);
    const Pattern p3 = make_path(3);
    const std::vector<Pattern> two_k2{k2, k2};
    const std::vector<Pattern> p3_k2{p3, k2};
    return std::vector<std::string>{k2.canonical_form(), Pattern::disjoint_union(two_k2).canonical_form(),
                                    p3.canonical_form(), Pattern::disjoint_union(p3_k2).canonical_form(),
                                    make_path(4).canonical_form()};
  }();
  return std::find(excluded.begin(), excluded.end(), p.canonical_form()) == excluded.end();
}

PatternFamily::PatternFamily(TreesKL trees) : value_(trees) {
  if (trees.k < 1 || trees.k > trees.l) {
    throw InvalidArgument("T_{k,l} needs 1 <= k <= l, got (" + std::to_string(trees.k) + "," +
                          std::to_string(trees.l) + ")");
  }
}

std::vector<Pattern> PatternFamily::members(int cap) const {
  if (is_single()) return {single()};
  return enumerate_T_kl(trees().k, trees().l, cap);
}

std::string PatternFamily::display_name() const {
  if (is_single()) return single().display_name();
  return "T" + std::to_string(trees().k) + "," + std::to_string(trees().l);
}

std::pair<int, int> PatternFamily::part_sizes() const {
  if (is_single()) return single().part_sizes();
  return {trees().k, trees().l};
}

int PatternFamily::vertex_count() const {
  if (is_single()) return single().vertex_count();
  return trees().k + trees().l;
}

bool PatternFamily::fits(int a, int b) const {
  if (is_single()) return single().fits(a, b);
  if (a > b) std::swap(a, b);
  return trees().k <= a && trees().l <= b;
}

}  // namespace bturan
