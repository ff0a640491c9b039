#include "bturan/general_graph.hpp"

#include <string>

#include "bturan/error.hpp"

namespace bturan {

GeneralGraph::GeneralGraph(int n) : n_(n) {
  if (n < 0 || n > 64) throw InvalidArgument("vertex count must lie in [0, 64], got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), Row{0});
}

GeneralGraph::GeneralGraph(int n, std::span<const Edge> edges) : GeneralGraph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

GeneralGraph GeneralGraph::complete(int n) {
  GeneralGraph g(n);
  for (int u = 0; u < n; ++u) g.adj_[u] = g.all_vertices() & ~(Row{1} << u);
  return g;
}

void GeneralGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} invalid for " + std::to_string(n_) + " vertices");
  }
  adj_[u] |= Row{1} << v;
  adj_[v] |= Row{1} << u;
}

void GeneralGraph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
  adj_[u] &= ~(Row{1} << v);
  adj_[v] &= ~(Row{1} << u);
}

std::vector<Edge> GeneralGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Row r = adj_[u] & ~((Row{2} << u) - 1); r != 0; r &= r - 1) out.push_back({u, std::countr_zero(r)});
  }
  return out;
}

bool is_connected(const GeneralGraph& g) {
  if (g.vertex_count() == 0) return false;
  Row seen = 1;
  Row frontier = 1;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == g.all_vertices();
}

}  // namespace bturan
