#include "bturan/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "bturan/error.hpp"
#include "bturan/tree_enum.hpp"

namespace bturan {

std::string_view variant_name(Variant v) { return v == Variant::B ? "b" : "bc"; }

std::optional<Variant> variant_from_name(std::string_view name) {
  if (name == "b") return Variant::B;
  if (name == "bc") return Variant::BC;
  return std::nullopt;
}

std::string ValueOrBounds::citation() const {
  std::string out;
  for (const auto& c : citations) {
    if (!out.empty()) out += "; ";
    out += c;
  }
  return out;
}

std::string ValueOrBounds::describe() const {
  switch (tag) {
    case Tag::Exact: return "Exact(" + std::to_string(lo) + ")";
    case Tag::Range: return "Range(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
    case Tag::Unknown: break;
  }
  return "Unknown";
}

ValueOrBounds ValueOrBounds::exact(long long v, std::string citation) {
  ValueOrBounds r;
  r.tag = Tag::Exact;
  r.lo = r.hi = v;
  r.citations.push_back(std::move(citation));
  return r;
}

ValueOrBounds ValueOrBounds::range(long long lo, long long hi, std::string citation) {
  if (lo > hi) throw InvalidArgument("range needs lo <= hi");
  ValueOrBounds r;
  r.tag = lo == hi ? Tag::Exact : Tag::Range;
  r.lo = lo;
  r.hi = hi;
  r.citations.push_back(std::move(citation));
  return r;
}

ValueOrBounds ValueOrBounds::unknown(std::string citation) {
  ValueOrBounds r;
  r.citations.push_back(std::move(citation));
  return r;
}

PatternShapes recognise_shapes(const Pattern& p) {
  PatternShapes s;
  if (!p.is_tree()) return s;
  const int n = p.vertex_count();
  if (n >= 2 && p == make_path(n)) s.path = n;
  if (n >= 2 && p == make_star(n - 1)) s.star = n - 1;
  if (n >= 4 && p == spider_long_leg(2, n - 3)) s.spider_two = n - 3;
  if (n >= 5 && p == spider_long_leg(3, n - 4)) s.spider_three = n - 4;
  if (n >= 8 && (n - 2) % 3 == 0) {
    const int l = (n - 2) / 3;
    if (p == spider_long_leg(2 * l, l + 1)) s.long_spider = l;
  }
  if (n == 6) {
    const int legs[] = {2, 2, 1};
    s.s221 = p == make_spider(legs);
  }
  // A caterpillar on n vertices has a spine vertex of degree at least n/3.
  if (p.max_degree() + 1 < n / 3) return s;
  for (int a = 1; 2 * a <= n - 2; ++a)
    if (p == make_double_star(a, n - 2 - a)) s.double_stars.emplace_back(a, n - 2 - a);
  for (int mid = 0; mid <= n - 3; ++mid)
    for (int r = 0; 2 * r <= n - 3 - mid; ++r) {
      const int t = n - 3 - mid - r;
      if (p == make_caterpillar(r, mid, t)) s.caterpillars.push_back({r, mid, t});
    }
  return s;
}

PatternShapes family_shapes(const PatternFamily& f) {
  return f.is_single() ? recognise_shapes(f.single()) : PatternShapes{};
}

namespace {

using Spec = ConstructionSpec;
using K = ConstructionKind;

Contribution exact_at(long long v, std::optional<Spec> w = std::nullopt) { return {v, v, std::move(w)}; }
Contribution lower(long long v, std::optional<Spec> w = std::nullopt) { return {v, std::nullopt, std::move(w)}; }
Contribution upper(long long v) { return {std::nullopt, v, std::nullopt}; }

long long blocks_count(int n, int width) {
  const long long x = n / width, y = n % width;
  return x * width * width + y * y;
}

std::optional<Spec> degree_witness(int n, int d) {
  if (d == 1) return Spec{K::Matching, {n}};
  if (d >= 2 && d <= n) return Spec{K::Circulant, {n, d}};
  return std::nullopt;
}

std::pair<int, int> sorted_parts(const PatternFamily& f) {
  auto [k, l] = f.part_sizes();
  if (k > l) std::swap(k, l);
  return {k, l};
}

bool connected_family(const PatternFamily& f) { return !f.is_single() || f.single().is_tree(); }

std::vector<FormulaEntry> build_entries() {
  std::vector<FormulaEntry> e;
  const auto add = [&](std::string id, std::string citation, Variant v, auto fn) {
    e.push_back({std::move(id), std::move(citation), v, fn});
  };
  using Opt = std::optional<Contribution>;
  using F = const PatternFamily&;
  using S = const PatternShapes&;

  add("single-edge", "K2 forbids every edge", Variant::B, [](F f, S, int, int) -> Opt {
    if (f.is_single() && f.single().edge_count() == 1) return exact_at(0, Spec{K::DisjointDoubleBiclique, {0, 1, 1}});
    return std::nullopt;
  });

  add("degree-lower", "max-degree lower bound (Delta-1)n", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (!f.is_single() || a != b) return std::nullopt;
    const int d = f.single().max_degree();
    if (d < 2) return std::nullopt;
    return lower(static_cast<long long>(d - 1) * a, degree_witness(a, d - 1));
  });

  add("matching-lower", "max-degree-one lower bound n", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (!f.is_single() || a != b) return std::nullopt;
    const auto& p = f.single();
    if (p.max_degree() != 1 || p.edge_count() < 2) return std::nullopt;
    return lower(a);
  });

  add("smaller-part-lower", "smaller-part double biclique lower bound", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (!connected_family(f)) return std::nullopt;
    const int s = sorted_parts(f).first;
    return lower(static_cast<long long>(s - 1) * (a - s + 1 + b - s + 1), Spec{K::DisjointDoubleBiclique, {s - 1, a, b}});
  });

  add("larger-part-lower", "larger-part blocks lower bound", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (!connected_family(f) || a != b) return std::nullopt;
    const int l = sorted_parts(f).second;
    if (l < 2) return std::nullopt;
    return lower(blocks_count(a, l - 1), Spec{K::BlocksUnion, {a, l}});
  });

  add("order-lower", "order halved-blocks lower bound", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (!connected_family(f) || a != b) return std::nullopt;
    const int v = f.vertex_count();
    if (v < 3) return std::nullopt;
    const Spec w{K::HalvedBlocks, {a, v}};
    return lower(claimed_edge_count(w), w);
  });

  add("stars", "stars and short spiders: dn", Variant::B, [](F f, S sh, int a, int b) -> Opt {
    if (!f.is_single() || a != b) return std::nullopt;
    const int n = a;
    if (sh.star && *sh.star >= 3 && n >= *sh.star + 1) return exact_at(static_cast<long long>(*sh.star - 1) * n, degree_witness(n, *sh.star - 1));
    if (sh.spider_two && *sh.spider_two >= 2 && n >= *sh.spider_two + 3)
      return exact_at(static_cast<long long>(*sh.spider_two) * n, degree_witness(n, *sh.spider_two));
    if (sh.star && *sh.star == 2) return exact_at(n, Spec{K::Matching, {n}});
    if (sh.path && *sh.path == 4) return exact_at(2LL * n - 2, Spec{K::TwoStars, {n}});
    return std::nullopt;
  });

  add("short-paths", "P5 and P6 values", Variant::B, [](F, S sh, int a, int b) -> Opt {
    if (a != b || !sh.path) return std::nullopt;
    const int n = a;
    if (*sh.path == 5 && n >= 3) return exact_at(2LL * n - n % 2, Spec{K::BlocksUnion, {n, 3}});
    if (*sh.path == 6 && n == 3) return exact_at(6, Spec{K::Theta, {3}});
    if (*sh.path == 6 && n >= 4) return exact_at(4LL * n - 8, Spec{K::DisjointDoubleBiclique, {2, n, n}});
    return std::nullopt;
  });

  add("s311", "S311 upper bound 3n, equality iff 3 | n", Variant::B, [](F, S sh, int a, int b) -> Opt {
    if (a != b || sh.spider_three != 2) return std::nullopt;
    if (a % 3 == 0) return exact_at(3LL * a, Spec{K::BlocksUnion, {a, 4}});
    return upper(3LL * a - 1);
  });

  add("d22", "D22 values 6, 9, 4n-8", Variant::B, [](F, S sh, int a, int b) -> Opt {
    const bool d22 = std::find(sh.double_stars.begin(), sh.double_stars.end(), std::pair{2, 2}) != sh.double_stars.end();
    if (a != b || !d22) return std::nullopt;
    if (a == 3) return exact_at(6, Spec{K::Theta, {3}});
    if (a == 4) return exact_at(9, Spec{K::Theta, {4}});
    return exact_at(4LL * a - 8, Spec{K::TwoBicliques2, {a}});
  });

  add("s221", "S221 values 6, 4n-8", Variant::B, [](F, S sh, int a, int b) -> Opt {
    if (a != b || !sh.s221) return std::nullopt;
    if (a == 3) return exact_at(6, Spec{K::Theta, {3}});
    return exact_at(4LL * a - 8, Spec{K::TwoBicliques2, {a}});
  });

  add("spider-two", "S_{2,d*1} unbalanced value", Variant::B, [](F, S sh, int a, int b) -> Opt {
    if (!sh.spider_two || *sh.spider_two < 2) return std::nullopt;
    const int d = *sh.spider_two;
    if (a < d + 1) return std::nullopt;
    const long long plus = static_cast<long long>(d) * (a - 1) + b - a + 1;
    const long long regular = static_cast<long long>(d) * a;
    if (plus >= regular) return exact_at(plus, Spec{K::StarPlus, {a, b, d}});
    if (a == b) return exact_at(regular, degree_witness(a, d));
    return exact_at(regular);
  });

  add("spider-three", "S_{3,d*1} value (d+1)n - c", Variant::B, [](F, S sh, int a, int b) -> Opt {
    if (a != b || !sh.spider_three) return std::nullopt;
    const int d = *sh.spider_three;
    const int n = a;
    const Spec w{K::BlocksUnion, {n, d + 2}};
    if (n % (d + 1) == 0) return exact_at(static_cast<long long>(d + 1) * n, w);
    return Contribution{blocks_count(n, d + 1), static_cast<long long>(d + 1) * n - 1, w};
  });

  add("double-star-large", "double star D_{s,t}, s <= t < 2s, large parts", Variant::B, [](F, S sh, int a, int b) -> Opt {
    for (auto [s, t] : sh.double_stars) {
      const long long th = 4LL * (s + 1) * (s + 1) * (s + 1);
      if (t < 2 * s && a >= th && b >= th)
        return exact_at(static_cast<long long>(s) * (a + b - 2 * s), Spec{K::DisjointDoubleBiclique, {s, a, b}});
    }
    return std::nullopt;
  });

  add("double-star-wide", "double star D_{s,t}, 2s <= t: t(a+b)/2", Variant::B, [](F, S sh, int a, int b) -> Opt {
    for (auto [s, t] : sh.double_stars) {
      if (2 * s > t) continue;
      if (a == b && a % t == 0) return exact_at(static_cast<long long>(t) * a, Spec{K::BlocksUnion, {a, t + 1}});
      return upper(static_cast<long long>(t) * (a + b) / 2);
    }
    return std::nullopt;
  });

  add("long-spider", "spider S_{2l,(l+1)*1}: l(a+b)", Variant::B, [](F, S sh, int a, int b) -> Opt {
    if (!sh.long_spider) return std::nullopt;
    const int l = *sh.long_spider;
    if (a == b && a % (2 * l) == 0) return exact_at(2LL * l * a, Spec{K::BlocksUnion, {a, 2 * l + 1}});
    return upper(static_cast<long long>(l) * (a + b));
  });

  add("caterpillar", "caterpillar P_{r,s,t}, s < max(r,t): m(a+b)", Variant::B, [](F, S sh, int a, int b) -> Opt {
    std::optional<long long> best;
    for (auto [r, s, t] : sh.caterpillars) {
      const int m = std::max(r, t);
      if (s >= m) continue;
      const long long v = static_cast<long long>(m) * (a + b);
      if (!best || v < *best) best = v;
    }
    if (!best) return std::nullopt;
    return upper(*best);
  });

  add("trees-kl-large", "trees T_{k,l}, l < 2k, large parts", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (f.is_single()) return std::nullopt;
    const auto [k, l] = f.trees();
    if (l > 2 * k - 1 || a < 4LL * k * k * k) return std::nullopt;
    return exact_at(static_cast<long long>(k - 1) * (a + b - 2 * (k - 1)), Spec{K::DisjointDoubleBiclique, {k - 1, a, b}});
  });

  add("trees-kl-wide", "trees T_{k,l}, 2k <= l: (l-1)(a+b)/2", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (f.is_single()) return std::nullopt;
    const auto [k, l] = f.trees();
    if (l < 2 * k) return std::nullopt;
    if (a == b && a % (l - 1) == 0) return exact_at(static_cast<long long>(l - 1) * a, Spec{K::BlocksUnion, {a, l}});
    return upper(static_cast<long long>(l - 1) * (a + b) / 2);
  });

  add("family-members", "a family is at most as dense as each member", Variant::B, [](F f, S, int a, int b) -> Opt {
    if (f.is_single() || f.vertex_count() > kDefaultTreeCap) return std::nullopt;
    std::optional<long long> best;
    for (const auto& m : f.members()) {
      const auto r = lookup(PatternFamily(m), a, b, Variant::B);
      if (r.is_unknown()) continue;
      if (!best || r.hi < *best) best = r.hi;
    }
    if (!best) return std::nullopt;
    return upper(*best);
  });

  // Connected variant.

  add("degree-lower-connected", "connected max-degree lower bound (Delta-1)n", Variant::BC, [](F f, S, int a, int b) -> Opt {
    if (!f.is_single() || a != b) return std::nullopt;
    const int d = f.single().max_degree();
    if (d < 3 || d - 1 > a) return std::nullopt;
    return lower(static_cast<long long>(d - 1) * a, Spec{K::Circulant, {a, d - 1}});
  });

  add("spanning-tree-lower", "connected lower bound 2n-1", Variant::BC, [](F f, S, int a, int b) -> Opt {
    if (!f.is_single() || a != b || a < 2) return std::nullopt;
    for (auto kind : {K::SpanningDoubleStar, K::SpanningSpider}) {
      const Spec w{kind, {a}};
      if (verify_construction(w, f).free) return lower(2LL * a - 1, w);
    }
    return std::nullopt;
  });

  add("stars-connected", "connected stars and short spiders: dn", Variant::BC, [](F f, S sh, int a, int b) -> Opt {
    if (!f.is_single() || a != b) return std::nullopt;
    const int n = a;
    if (sh.star && *sh.star >= 3 && n >= *sh.star + 1) return exact_at(static_cast<long long>(*sh.star - 1) * n, Spec{K::Circulant, {n, *sh.star - 1}});
    if (sh.spider_two && *sh.spider_two >= 2 && n >= *sh.spider_two + 3)
      return exact_at(static_cast<long long>(*sh.spider_two) * n, Spec{K::Circulant, {n, *sh.spider_two}});
    return std::nullopt;
  });

  add("short-paths-connected", "connected P5 and P6: 2n-1", Variant::BC, [](F, S sh, int a, int b) -> Opt {
    if (a != b || !sh.path || (*sh.path != 5 && *sh.path != 6)) return std::nullopt;
    return exact_at(2LL * a - 1, Spec{K::SpanningDoubleStar, {a}});
  });

  add("d22-connected", "connected D22: 4n-9, small n as unrestricted", Variant::BC, [](F, S sh, int a, int b) -> Opt {
    const bool d22 = std::find(sh.double_stars.begin(), sh.double_stars.end(), std::pair{2, 2}) != sh.double_stars.end();
    if (a != b || !d22) return std::nullopt;
    if (a >= 6) return exact_at(4LL * a - 9, Spec{K::ConnectedD22, {a}});
    return exact_at(3LL * a - 3, Spec{K::Theta, {a}});
  });

  add("s311-s221-connected", "connected S311 and S221: 2n", Variant::BC, [](F, S sh, int a, int b) -> Opt {
    if (a != b || !(sh.spider_three == 2 || sh.s221)) return std::nullopt;
    return exact_at(2LL * a, Spec{K::Circulant, {a, 2}});
  });

  add("spider-three-connected", "connected S_{3,d*1}: dn", Variant::BC, [](F, S sh, int a, int b) -> Opt {
    if (a != b || !sh.spider_three || *sh.spider_three < 2) return std::nullopt;
    return exact_at(static_cast<long long>(*sh.spider_three) * a, Spec{K::Circulant, {a, *sh.spider_three}});
  });

  add("double-star-large-connected", "connected double star D_{s,t}, s <= t < 2s, large parts", Variant::BC, [](F, S sh, int a, int b) -> Opt {
    for (auto [s, t] : sh.double_stars) {
      const long long th = 4LL * (s + 1) * (s + 1) * (s + 1);
      if (s >= 2 && t < 2 * s && a >= th && b >= th)
        return exact_at(static_cast<long long>(s) * (a + b - 2 * s) - 1, Spec{K::BridgedDoubleBiclique, {s, a, b}});
    }
    return std::nullopt;
  });

  add("double-star-bridged-lower", "connected double star bridged lower bound", Variant::BC, [](F, S sh, int a, int b) -> Opt {
    std::optional<Contribution> best;
    for (auto [s, t] : sh.double_stars) {
      if (s < 2 || a < s + 2 || b < s + 2) continue;
      const long long v = static_cast<long long>(s) * (a + b - 2 * s) - 1;
      if (!best || v > *best->lo) best = lower(v, Spec{K::BridgedDoubleBiclique, {s, a, b}});
    }
    return best;
  });

  return e;
}

struct Gathered {
  std::optional<long long> lo;
  std::optional<long long> hi;
  std::optional<ConstructionSpec> witness;
  std::vector<std::string> citations;
};

}  // namespace

const std::vector<FormulaEntry>& registry_entries() {
  static const std::vector<FormulaEntry> entries = build_entries();
  return entries;
}

ValueOrBounds lookup(const PatternFamily& f, int a, int b, Variant variant) {
  if (a < 1 || b < 1) throw InvalidArgument("host parts must be positive");
  if (a > b) std::swap(a, b);
  if (!f.fits(a, b))
    throw InfeasibleQuery(f.display_name() + " does not fit K_{" + std::to_string(a) + "," + std::to_string(b) + "}");
  if (variant == Variant::BC) {
    bool defined = true;
    if (f.is_single()) {
      defined = exbc_defined(f.single());
    } else if (f.vertex_count() <= kDefaultTreeCap) {
      const auto members = f.members();
      defined = std::all_of(members.begin(), members.end(), [](const Pattern& m) { return exbc_defined(m); });
    }
    if (!defined) throw InfeasibleQuery("connected variant undefined for " + f.display_name());
  }

  const auto shapes = family_shapes(f);
  Gathered g;
  for (const auto& entry : registry_entries()) {
    const bool own = entry.variant == variant;
    // ex_bc <= ex_b: connected lower bounds lift to b, unrestricted upper bounds pass to bc.
    const bool take_lo = own || variant == Variant::B;
    const bool take_hi = own || variant == Variant::BC;
    auto c = entry.evaluate(f, shapes, a, b);
    if (!c) continue;
    bool used = false;
    if (take_lo && c->lo) {
      const bool better = !g.lo || *c->lo > *g.lo || (*c->lo == *g.lo && !g.witness && c->witness);
      if (better) {
        g.lo = c->lo;
        g.witness = c->witness;
      }
      used = true;
    }
    if (take_hi && c->hi) {
      if (!g.hi || *c->hi < *g.hi) g.hi = c->hi;
      used = true;
    }
    if (used) g.citations.push_back(entry.citation);
  }

  if (g.citations.empty()) return ValueOrBounds::unknown("no applicable entry");
  if (variant == Variant::BC && !g.lo) {
    auto r = ValueOrBounds::unknown("no spanning-connected F-free graph certified");
    if (g.hi) r.notes = "if one exists it has at most " + std::to_string(*g.hi) + " edges";
    return r;
  }
  ValueOrBounds r;
  r.lo = g.lo.value_or(0);
  const long long trivial = static_cast<long long>(a) * b - 1;
  r.hi = std::min(g.hi.value_or(trivial), trivial);
  if (r.hi == trivial) r.notes = "upper bound: F fits K_{a,b}";
  if (r.lo > r.hi) throw std::logic_error("registry inconsistency for " + f.display_name());
  r.tag = r.lo == r.hi ? ValueOrBounds::Tag::Exact : ValueOrBounds::Tag::Range;
  r.citations = std::move(g.citations);
  r.witness = g.witness;
  return r;
}

ValueOrBounds generic_bounds(int n, std::optional<long long> ex_n, std::optional<long long> ex_2n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  long long lo = 0;
  long long hi = static_cast<long long>(n) * n;
  std::vector<std::string> cites;
  if (ex_n) {
    lo = std::max(lo, *ex_n + 1);
    cites.emplace_back("two copies of an extremal n-vertex graph");
  }
  if (ex_2n) {
    hi = std::min(hi, *ex_2n);
    const long long den = 2LL * n - 1;
    lo = std::max(lo, (static_cast<long long>(n) * *ex_2n + den - 1) / den);
    cites.emplace_back("bipartite subgraphs of a 2n-vertex extremal graph");
  }
  if (cites.empty()) return ValueOrBounds::unknown("no general Turan input");
  if (lo > hi) throw InvalidArgument("inconsistent Turan inputs");
  auto r = ValueOrBounds::range(lo, hi, cites.front());
  for (std::size_t i = 1; i < cites.size(); ++i) r.citations.push_back(cites[i]);
  return r;
}

}  // namespace bturan
