#include "bturan/ratio.hpp"

#include <cmath>

#include "bturan/constructions.hpp"
#include "bturan/error.hpp"
#include "bturan/solver.hpp"

namespace bturan {

namespace {

// Guards floor() against representation error in products like 0.75 * 8.
int floor_size(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

void check_params(const RatioParams& q) {
  if (!(q.c >= 2.0 / 3.0 - 1e-12 && q.c < 1.0)) throw InvalidArgument("ratio construction needs 2/3 <= c < 1");
  if (!(q.p > 0.0 && q.p <= q.c)) throw InvalidArgument("ratio construction needs 0 < p <= c");
  if (q.k < 1) throw InvalidArgument("ratio construction needs k >= 1");
  if (q.n < 1 || q.n > kMaxPartSize) throw InvalidArgument("ratio construction needs 1 <= n <= 64");
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument("ratio construction: " + what);
}

double quadratic(double x) { return 14 * x * x - 14 * x + 3; }

}  // namespace

double x0() { return (7.0 + std::sqrt(7.0)) / 14.0; }

double x0_bisection(double tol) {
  double lo = 0.5, hi = 1.0;  // q(0.5) < 0 < q(1)
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (quadratic(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RatioBlocks ratio_blocks(int kind, const RatioParams& q) {
  check_params(q);
  RatioBlocks r;
  switch (kind) {
    case 1:
      r.biclique = floor_size((2 * q.c - 1) * q.k);
      r.path = floor_size((1 - q.c) * q.k);
      if (r.biclique + r.path > 0) r.periods = q.n / (r.biclique + r.path);
      break;
    case 2:
      r.universal = floor_size(q.p * q.k / 2);
      break;
    case 3:
      r.ell = 2 * floor_size(q.p * q.k / 2) + 2;
      r.alpha = floor_size((1 - q.c - q.p / 2) * q.k - 2);
      break;
    default:
      throw InvalidArgument("ratio construction kind must be 1, 2 or 3");
  }
  return r;
}

BipartiteGraph build_ratio_construction(int kind, const RatioParams& q) {
  const auto blk = ratio_blocks(kind, q);
  const int n = q.n;
  BipartiteGraph g(n, n);
  if (kind == 1) {
    require(blk.biclique >= 1, "biclique block (2c-1)k is empty");
    require(blk.path >= 1, "path block (1-c)k is empty");
    require(blk.periods >= 1, "n is smaller than one biclique + path period");
    const int s = blk.biclique;
    int at = 0;
    for (int i = 0; i < blk.periods; ++i) {
      for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y) g.add_edge(at + x, at + y);
      if (i > 0) g.add_edge(at + s - 1, at - 1);  // previous path end (in B) to K^i in A
      const int start = at + s;
      const int len = i + 1 == blk.periods ? n - start : blk.path;
      for (int j = 0; j < len; ++j) {
        g.add_edge(start + j, start + j);
        if (j + 1 < len) g.add_edge(start + j + 1, start + j);
      }
      g.add_edge(start, at + s - 1);  // K^i in B to the path start in A
      at = start + len;
    }
    return g;
  }
  if (kind == 2) {
    const int h = blk.universal;
    require(h >= 2, "floor(pk/2) must be at least 2");
    require(h - 1 <= n, "more universal vertices than n");
    for (int j = 0; j < n; ++j) g.add_edge(0, j);
    for (int j = 0; j < h - 1; ++j)
      for (int i = 0; i < n; ++i) g.add_edge(i, j);
    return g;
  }
  const int half = blk.ell / 2;
  const int alpha = blk.alpha;
  require(alpha >= 1, "block alpha = (1-c-p/2)k - 2 is empty");
  require(half + alpha < n, "blocks A3 and B3 are empty");
  // Path a0 b0 a1 b1 ... on A1 u B1, from u = a0 to v = b_{half-1}.
  for (int j = 0; j < half; ++j) {
    g.add_edge(j, j);
    if (j + 1 < half) g.add_edge(j + 1, j);
  }
  const int u = 0, v = half - 1;
  for (int i = half; i < half + alpha; ++i) {
    g.add_edge(i, v);
    for (int j = half + alpha; j < n; ++j) g.add_edge(i, j);
  }
  for (int j = half; j < half + alpha; ++j) {
    g.add_edge(u, j);
    for (int i = half + alpha; i < n; ++i) g.add_edge(i, j);
  }
  return g;
}

BipartiteGraph gamma_b_witness(const Pattern& t, int n) {
  if (!t.is_tree()) throw InvalidArgument("gamma_b witness needs a tree");
  if (n < t.vertex_count()) throw InvalidArgument("gamma_b witness needs n >= |V(T)|");
  auto [k, l] = t.part_sizes();
  if (k > l) std::swap(k, l);
  if (l < 2 * k) return build_construction({ConstructionKind::DisjointDoubleBiclique, {k - 1, n, n}});
  return build_construction({ConstructionKind::BlocksUnion, {n, l}});
}

double gamma_b_guarantee(const Pattern& t, int n) {
  auto [k, l] = t.part_sizes();
  if (k > l) std::swap(k, l);
  const double size = t.vertex_count();
  const double slope = l < 2 * k ? 2.0 / 3.0 : 2.0 / 3.0 - 1.0 / l;
  return slope * (size - 2) * n - size * size;
}

std::string_view source_name(RatioSource s) {
  switch (s) {
    case RatioSource::Solver: return "solver";
    case RatioSource::Registry: return "registry";
    case RatioSource::Witness: break;
  }
  return "witness";
}

std::optional<RatioSource> source_from_name(std::string_view name) {
  if (name == "solver") return RatioSource::Solver;
  if (name == "registry") return RatioSource::Registry;
  if (name == "witness") return RatioSource::Witness;
  return std::nullopt;
}

RatioReport finite_ratio(const Pattern& t, int n, Variant variant, RatioSource source) {
  if (t.vertex_count() < 3) throw InvalidArgument("ratio needs |T| >= 3");
  if (n < 1) throw InvalidArgument("ratio needs n >= 1");
  RatioReport r;
  r.tree = t.display_name();
  r.n = n;
  r.variant = variant;
  r.source = source;
  const PatternFamily f(t);
  switch (source) {
    case RatioSource::Solver: {
      SolverConfig cfg;
      cfg.variant = variant;
      const auto s = solve(n, n, f, cfg);
      if (s.status == SolveStatus::NoConnectedHost) throw InfeasibleQuery("no spanning-connected " + r.tree + "-free host");
      r.edges = s.value;
      r.exact = s.is_exact();
      break;
    }
    case RatioSource::Registry: {
      const auto v = lookup(f, n, n, variant);
      if (v.is_unknown()) throw InfeasibleQuery("registry has no statement for " + r.tree);
      r.edges = v.lo;
      r.exact = v.is_exact();
      if (!r.exact) r.upper_edges = v.hi;
      break;
    }
    case RatioSource::Witness: {
      if (variant == Variant::B) {
        r.edges = gamma_b_witness(t, n).edge_count();
      } else {
        const auto v = lookup(f, n, n, variant);
        if (!v.witness) throw InfeasibleQuery("no connected witness construction for " + r.tree);
        r.edges = build_construction(*v.witness).edge_count();
      }
      break;
    }
  }
  const double den = static_cast<double>(t.vertex_count() - 2) * n;
  r.ratio = r.edges / den;
  if (r.upper_edges) r.upper_ratio = *r.upper_edges / den;
  return r;
}

}  // namespace bturan
