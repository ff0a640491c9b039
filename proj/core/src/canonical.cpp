#include "bturan/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

namespace bturan {

namespace {

constexpr Row kTop = Row{1} << 63;

Row bit_at(int pos) { return kTop >> pos; }

// Iterated colour refinement. `adj[v]` lists neighbours of v; `colour` holds
// the initial colouring and is refined in place. Final colours are ranks of
// signatures, hence canonical.
void refine(const std::vector<std::vector<int>>& adj, std::vector<int>& colour) {
  const int n = static_cast<int>(colour.size());
  int classes = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  std::vector<int> idx(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colour[v]);
      for (int w : adj[v]) s.push_back(colour[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> next(static_cast<std::size_t>(n));
    int rank = 0;
    for (int t = 0; t < n; ++t) {
      if (t > 0 && sig[idx[t]] != sig[idx[t - 1]]) ++rank;
      next[idx[t]] = rank;
    }
    int next_classes = n == 0 ? 0 : rank + 1;
    colour = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
}

// Groups the vertices [0, count) into cells by ascending colour.
// Returns (cell id per position, members per cell).
std::pair<std::vector<int>, std::vector<std::vector<int>>> cells_from_colours(
    const std::vector<int>& colour, int count) {
  std::vector<int> order(static_cast<std::size_t>(count));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return colour[x] < colour[y]; });
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of_pos;
  for (int t = 0; t < count; ++t) {
    if (t == 0 || colour[order[t]] != colour[order[t - 1]]) cells.emplace_back();
    cells.back().push_back(order[t]);
    cell_of_pos.push_back(static_cast<int>(cells.size()) - 1);
  }
  return {cell_of_pos, cells};
}

int compare_prefix(const std::vector<Row>& cur, const std::vector<Row>& best, int depth) {
  for (int t = 0; t < depth; ++t) {
    if (cur[t] != best[t]) return cur[t] < best[t] ? -1 : 1;
  }
  return 0;
}

// Lexicographically least matrix of a row-permutable, column-permutable 0/1
// matrix. Rows are permuted by backtracking inside refinement cells; for a
// fixed row order the optimal column order is the ascending sort of columns
// read top to bottom.
struct MatrixCanonizer {
  const std::vector<Row>& rows;
  int r;
  int w;
  std::vector<int> cell_of_pos;
  std::vector<std::vector<int>> cells;

  std::vector<Row> keys;
  std::vector<Row> cur;
  std::vector<Row> best;
  std::vector<int> order;
  std::vector<int> best_order;
  bool have_best = false;
  Row used = 0;

  MatrixCanonizer(const std::vector<Row>& rows_in, int width) : rows(rows_in), r(static_cast<int>(rows_in.size())), w(width) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(r + w));
    std::vector<int> colour(static_cast<std::size_t>(r + w));
    for (int x = 0; x < r; ++x) {
      for (Row m = rows[x]; m != 0; m &= m - 1) {
        int j = std::countr_zero(m);
        adj[x].push_back(r + j);
        adj[r + j].push_back(x);
      }
    }
    for (int v = 0; v < r + w; ++v) colour[v] = 2 * static_cast<int>(adj[v].size()) + (v >= r ? 1 : 0);
    refine(adj, colour);
    std::tie(cell_of_pos, cells) = cells_from_colours(colour, r);
    keys.assign(static_cast<std::size_t>(w), Row{0});
    cur.assign(static_cast<std::size_t>(r), Row{0});
    order.assign(static_cast<std::size_t>(r), -1);
  }

  void run() {
    if (r == 0) {
      have_best = true;
      return;
    }
    search(0);
  }

  void search(int depth) {
    if (depth == r) {
      if (!have_best || compare_prefix(cur, best, r) < 0) {
        best = cur;
        best_order = order;
        have_best = true;
      }
      return;
    }
    const auto& cell = cells[cell_of_pos[depth]];
    std::vector<Row> tried;
    std::vector<Row> sorted(static_cast<std::size_t>(w));
    for (int x : cell) {
      if ((used >> x) & 1U) continue;
      if (std::find(tried.begin(), tried.end(), rows[x]) != tried.end()) continue;
      tried.push_back(rows[x]);

      const auto saved = keys;
      for (Row m = rows[x]; m != 0; m &= m - 1) keys[std::countr_zero(m)] |= bit_at(depth);
      std::copy(keys.begin(), keys.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.end());
      Row code = 0;
      for (int pos = 0; pos < w; ++pos) {
        if (sorted[pos] & bit_at(depth)) code |= bit_at(pos);
      }
      bool keep = true;
      if (have_best && compare_prefix(cur, best, depth) == 0 && code > best[depth]) keep = false;
      if (keep) {
        cur[depth] = code;
        order[depth] = x;
        used |= Row{1} << x;
        search(depth + 1);
        used &= ~(Row{1} << x);
      }
      keys = saved;
    }
  }
};

std::string pack_rows(int a, int b, const std::vector<Row>& rows, int width) {
  std::string out;
  out.push_back(static_cast<char>(a));
  out.push_back(static_cast<char>(b));
  const int bytes = (width + 7) / 8;
  for (Row row : rows) {
    for (int t = 0; t < bytes; ++t) out.push_back(static_cast<char>((row >> (56 - 8 * t)) & 0xFFU));
  }
  return out;
}

struct BipartiteCanon {
  std::vector<Row> code_rows;  // rows of the canonical matrix, MSB-first
  bool transposed = false;
};

BipartiteCanon canonize(const BipartiteGraph& g) {
  const int a = g.left_size();
  const int b = g.right_size();
  auto run = [](const std::vector<Row>& rows, int width) {
    MatrixCanonizer mc(rows, width);
    mc.run();
    return mc.best;
  };
  if (a < b) return {run(g.rows(), b), false};
  const auto t = g.transposed();
  if (a > b) return {run(t.rows(), a), true};
  auto direct = run(g.rows(), b);
  auto swapped = run(t.rows(), a);
  if (swapped < direct) return {std::move(swapped), true};
  return {std::move(direct), false};
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr std::array<char, 16> digits{'0', '1', '2', '3', '4', '5', '6', '7',
                                               '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xFU]);
  }
  return out;
}

CanonicalCode canonical_code(const BipartiteGraph& g) {
  const auto canon = canonize(g);
  const int width = canon.transposed ? g.left_size() : g.right_size();
  return CanonicalCode(pack_rows(g.left_size(), g.right_size(), canon.code_rows, width));
}

BipartiteGraph canonical_form(const BipartiteGraph& g) {
  const auto canon = canonize(g);
  const int rows = canon.transposed ? g.right_size() : g.left_size();
  const int width = canon.transposed ? g.left_size() : g.right_size();
  BipartiteGraph out(rows, width);
  for (int i = 0; i < rows; ++i) {
    for (int pos = 0; pos < width; ++pos) {
      if (canon.code_rows[i] & bit_at(pos)) out.add_edge(i, pos);
    }
  }
  return canon.transposed ? out.transposed() : out;
}

namespace {

struct GraphCanonizer {
  const GeneralGraph& g;
  int n;
  std::vector<int> cell_of_pos;
  std::vector<std::vector<int>> cells;
  std::vector<Row> cur;
  std::vector<Row> best;
  std::vector<int> order;
  bool have_best = false;
  Row used = 0;

  explicit GraphCanonizer(const GeneralGraph& graph) : g(graph), n(graph.vertex_count()) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (Row m = g.neighbours(v); m != 0; m &= m - 1) adj[v].push_back(std::countr_zero(m));
      colour[v] = static_cast<int>(adj[v].size());
    }
    refine(adj, colour);
    std::tie(cell_of_pos, cells) = cells_from_colours(colour, n);
    cur.assign(static_cast<std::size_t>(n), Row{0});
    order.assign(static_cast<std::size_t>(n), -1);
  }

  void search(int depth) {
    if (depth == n) {
      if (!have_best || compare_prefix(cur, best, n) < 0) {
        best = cur;
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int x : cells[cell_of_pos[depth]]) {
      if ((used >> x) & 1U) continue;
      bool twin = false;
      for (int y : tried) {
        Row bx = Row{1} << x;
        Row by = Row{1} << y;
        if ((g.neighbours(x) & ~by) == (g.neighbours(y) & ~bx)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(x);
      Row code = 0;
      for (int t = 0; t < depth; ++t) {
        if (g.has_edge(x, order[t])) code |= bit_at(t);
      }
      if (have_best && compare_prefix(cur, best, depth) == 0 && code > best[depth]) continue;
      cur[depth] = code;
      order[depth] = x;
      used |= Row{1} << x;
      search(depth + 1);
      used &= ~(Row{1} << x);
    }
  }
};

}  // namespace

CanonicalCode canonical_code(const GeneralGraph& g) {
  GraphCanonizer gc(g);
  if (g.vertex_count() > 0) gc.search(0);
  return CanonicalCode(pack_rows(g.vertex_count(), 0, gc.best, g.vertex_count()));
}

}  // namespace bturan
