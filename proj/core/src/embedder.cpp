#include "bturan/embedder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

namespace bturan {

namespace {

// Uniform view of a host: `sides` is 2 for a bipartite graph and 1 for a
// general graph, where every neighbour lives on side 0.
struct Host {
  int sides = 2;
  std::array<int, 2> size{};
  std::array<std::array<Row, kMaxPartSize>, 2> nbr{};
  std::array<std::array<int, kMaxPartSize>, 2> deg{};
  std::array<std::array<int, kMaxPartSize>, 2> comp{};
  std::vector<std::array<int, 2>> comp_count;

  int other(int s) const noexcept { return sides == 2 ? 1 - s : 0; }

  void label_components() {
    for (int s = 0; s < sides; ++s) comp[s].fill(-1);
    for (int s0 = 0; s0 < sides; ++s0) {
      for (int v0 = 0; v0 < size[s0]; ++v0) {
        if (comp[s0][v0] >= 0) continue;
        int id = static_cast<int>(comp_count.size());
        comp_count.push_back({0, 0});
        std::vector<std::pair<int, int>> stack{{s0, v0}};
        comp[s0][v0] = id;
        while (!stack.empty()) {
          auto [s, v] = stack.back();
          stack.pop_back();
          ++comp_count[id][s];
          int t = other(s);
          for (Row m = nbr[s][v]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (comp[t][w] < 0) {
              comp[t][w] = id;
              stack.emplace_back(t, w);
            }
          }
        }
      }
    }
  }
};

Host make_host(const BipartiteGraph& g) {
  Host h;
  h.sides = 2;
  h.size = {g.left_size(), g.right_size()};
  for (int i = 0; i < g.left_size(); ++i) {
    h.nbr[0][i] = g.row(i);
    h.deg[0][i] = std::popcount(g.row(i));
  }
  for (int j = 0; j < g.right_size(); ++j) {
    h.nbr[1][j] = g.column(j);
    h.deg[1][j] = std::popcount(h.nbr[1][j]);
  }
  h.label_components();
  return h;
}

Host make_host(const GeneralGraph& g) {
  Host h;
  h.sides = 1;
  h.size = {g.vertex_count(), 0};
  for (int v = 0; v < g.vertex_count(); ++v) {
    h.nbr[0][v] = g.neighbours(v);
    h.deg[0][v] = std::popcount(h.nbr[0][v]);
  }
  h.label_components();
  return h;
}

struct Step {
  int v;
  int parent;  // pattern vertex, -1 for a component root
  int comp;
};

class Search {
 public:
  Search(const Host& h, const Pattern& p) : h_(h), p_(p) {
    const auto& comps = p.components();
    std::vector<int> idx(comps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return comps[x].size > comps[y].size; });
    for (int c : idx) {
      const auto& comp = comps[c];
      for (int v : comp.order) steps_.push_back({v, comp.parent[v - comp.first] < 0 ? -1 : comp.parent[v - comp.first], c});
    }
    side_.assign(p.vertex_count(), 0);
    image_.assign(p.vertex_count(), -1);
  }

  bool run() { return place(0); }

  int side(int v) const { return side_[v]; }
  int image(int v) const { return image_[v]; }

 private:
  const Host& h_;
  const Pattern& p_;
  std::vector<Step> steps_;
  std::vector<int> side_;
  std::vector<int> image_;
  std::array<Row, 2> used_{};

  bool try_vertex(std::size_t k, int v, int s, int w) {
    side_[v] = s;
    image_[v] = w;
    used_[s] |= Row{1} << w;
    if (place(k + 1)) return true;
    used_[s] &= ~(Row{1} << w);
    return false;
  }

  bool place(std::size_t k) {
    if (k == steps_.size()) return true;
    const Step& st = steps_[k];
    int need = p_.degree(st.v);
    if (st.parent < 0) {
      const auto& cc = p_.components()[st.comp].colour_counts;
      for (int s = 0; s < h_.sides; ++s) {
        int t = h_.other(s);
        for (int w = 0; w < h_.size[s]; ++w) {
          if ((used_[s] >> w) & 1U) continue;
          if (h_.deg[s][w] < need) continue;
          const auto& have = h_.comp_count[h_.comp[s][w]];
          if (h_.sides == 2) {
            if (have[s] < cc[0] || have[t] < cc[1]) continue;
          } else if (have[0] < cc[0] + cc[1]) {
            continue;
          }
          if (try_vertex(k, st.v, s, w)) return true;
        }
      }
      return false;
    }
    int ps = side_[st.parent];
    int s = h_.other(ps);
    for (Row m = h_.nbr[ps][image_[st.parent]] & ~used_[s]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (h_.deg[s][w] < need) continue;
      if (try_vertex(k, st.v, s, w)) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> find_embedding(const BipartiteGraph& g, const Pattern& p) {
  if (p.edge_count() > g.edge_count()) return std::nullopt;
  if (!p.fits(g.left_size(), g.right_size())) return std::nullopt;
  Host h = make_host(g);
  Search search(h, p);
  if (!search.run()) return std::nullopt;
  Embedding e;
  e.map.resize(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) {
    e.map[v] = {search.side(v) == 0 ? Side::Left : Side::Right, search.image(v)};
  }
  return e;
}

std::vector<BiEdge> edge_image(const Pattern& p, const Embedding& e) {
  std::vector<BiEdge> out;
  out.reserve(p.edges().size());
  for (auto [u, v] : p.edges()) {
    const auto& x = e.map[u];
    const auto& y = e.map[v];
    if (x.side == Side::Left) {
      out.push_back({x.index, y.index});
    } else {
      out.push_back({y.index, x.index});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid_embedding(const BipartiteGraph& g, const Pattern& p, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != p.vertex_count()) return false;
  std::set<std::pair<int, int>> seen;
  for (const auto& hv : e.map) {
    int s = hv.side == Side::Left ? 0 : 1;
    int limit = s == 0 ? g.left_size() : g.right_size();
    if (hv.index < 0 || hv.index >= limit) return false;
    if (!seen.insert({s, hv.index}).second) return false;
  }
  for (auto [u, v] : p.edges()) {
    const auto& x = e.map[u];
    const auto& y = e.map[v];
    if (x.side == y.side) return false;
    int i = x.side == Side::Left ? x.index : y.index;
    int j = x.side == Side::Left ? y.index : x.index;
    if (!g.has_edge(i, j)) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, Embedding>> find_family_embedding(const BipartiteGraph& g,
                                                                       std::span<const Pattern> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (auto e = find_embedding(g, members[i])) return std::pair{i, std::move(*e)};
  }
  return std::nullopt;
}

bool is_family_free(const BipartiteGraph& g, std::span<const Pattern> members) {
  return !find_family_embedding(g, members).has_value();
}

bool is_family_free(const BipartiteGraph& g, const PatternFamily& f, int cap) {
  auto members = f.members(cap);
  return is_family_free(g, members);
}

std::optional<std::vector<int>> find_embedding(const GeneralGraph& g, const Pattern& p) {
  if (p.edge_count() > g.edge_count() || p.vertex_count() > g.vertex_count()) return std::nullopt;
  Host h = make_host(g);
  Search search(h, p);
  if (!search.run()) return std::nullopt;
  std::vector<int> out(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) out[v] = search.image(v);
  return out;
}

}  // namespace bturan
