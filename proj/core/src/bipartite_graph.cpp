#include "bturan/bipartite_graph.hpp"

#include <algorithm>
#include <numeric>

#include "bturan/error.hpp"

namespace bturan {

namespace {

void check_parts(int a, int b) {
  if (a < 0 || b < 0 || a > kMaxPartSize || b > kMaxPartSize) {
    throw InvalidArgument("part sizes must lie in [0, " + std::to_string(kMaxPartSize) +
                          "], got (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(int a, int b) : a_(a), b_(b) {
  check_parts(a, b);
  rows_.assign(static_cast<std::size_t>(a), Row{0});
}

BipartiteGraph::BipartiteGraph(int a, int b, std::span<const BiEdge> edges) : BipartiteGraph(a, b) {
  for (const auto& e : edges) add_edge(e.left, e.right);
}

BipartiteGraph BipartiteGraph::complete(int a, int b) {
  BipartiteGraph g(a, b);
  for (auto& r : g.rows_) r = g.full_right_mask();
  return g;
}

void BipartiteGraph::add_edge(int i, int j) {
  if (i < 0 || i >= a_ || j < 0 || j >= b_) {
    throw InvalidArgument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range for parts (" + std::to_string(a_) + "," +
                          std::to_string(b_) + ")");
  }
  rows_[i] |= Row{1} << j;
}

void BipartiteGraph::remove_edge(int i, int j) {
  if (i < 0 || i >= a_ || j < 0 || j >= b_) {
    throw InvalidArgument("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  rows_[i] &= ~(Row{1} << j);
}

Row BipartiteGraph::column(int j) const noexcept {
  Row c = 0;
  for (int i = 0; i < a_; ++i) c |= ((rows_[i] >> j) & 1U) << i;
  return c;
}

std::vector<BiEdge> BipartiteGraph::edges() const {
  std::vector<BiEdge> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int i = 0; i < a_; ++i) {
    for (Row r = rows_[i]; r != 0; r &= r - 1) out.push_back({i, std::countr_zero(r)});
  }
  return out;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph t(b_, a_);
  for (int j = 0; j < b_; ++j) t.rows_[j] = column(j);
  return t;
}

BipartiteGraph BipartiteGraph::padded(int a, int b) const {
  if (a < a_ || b < b_) throw InvalidArgument("padded() cannot shrink a graph");
  BipartiteGraph g(a, b);
  std::copy(rows_.begin(), rows_.end(), g.rows_.begin());
  return g;
}

BipartiteGraph BipartiteGraph::disjoint_union(const BipartiteGraph& other) const {
  BipartiteGraph g(a_ + other.a_, b_ + other.b_);
  std::copy(rows_.begin(), rows_.end(), g.rows_.begin());
  for (int i = 0; i < other.a_; ++i) g.rows_[a_ + i] = other.rows_[i] << b_;
  return g;
}

bool BipartiteGraph::is_subgraph_of(const BipartiteGraph& other) const noexcept {
  if (a_ != other.a_ || b_ != other.b_) return false;
  for (int i = 0; i < a_; ++i) {
    if ((rows_[i] & ~other.rows_[i]) != 0) return false;
  }
  return true;
}

namespace {

// Flood fill from left vertex `start_left` (or right vertex when start_left < 0).
// Returns the visited masks.
std::pair<Row, Row> flood(const BipartiteGraph& g, int start_left, int start_right) {
  Row seen_l = 0;
  Row seen_r = 0;
  Row frontier_l = start_left >= 0 ? (Row{1} << start_left) : 0;
  Row frontier_r = start_right >= 0 ? (Row{1} << start_right) : 0;
  while (frontier_l != 0 || frontier_r != 0) {
    seen_l |= frontier_l;
    seen_r |= frontier_r;
    Row next_r = 0;
    for (Row f = frontier_l; f != 0; f &= f - 1) next_r |= g.row(std::countr_zero(f));
    Row next_l = 0;
    for (int i = 0; i < g.left_size(); ++i) {
      if ((seen_l >> i) & 1U) continue;
      if (g.row(i) & frontier_r) next_l |= Row{1} << i;
    }
    frontier_l = next_l & ~seen_l;
    frontier_r = next_r & ~seen_r;
  }
  return {seen_l, seen_r};
}

Row low_mask(int n) { return n == 64 ? ~Row{0} : ((Row{1} << n) - 1); }

}  // namespace

bool is_connected(const BipartiteGraph& g) {
  if (g.vertex_count() == 0) return false;
  auto [l, r] = g.left_size() > 0 ? flood(g, 0, -1) : flood(g, -1, 0);
  return l == low_mask(g.left_size()) && r == low_mask(g.right_size());
}

int component_count(const BipartiteGraph& g) {
  Row left_open = low_mask(g.left_size());
  Row right_open = low_mask(g.right_size());
  int count = 0;
  while (left_open != 0 || right_open != 0) {
    auto [l, r] = left_open != 0 ? flood(g, std::countr_zero(left_open), -1)
                                 : flood(g, -1, std::countr_zero(right_open));
    left_open &= ~l;
    right_open &= ~r;
    ++count;
  }
  return count;
}

}  // namespace bturan
