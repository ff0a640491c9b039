#include "bturan/constructions.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "bturan/error.hpp"

namespace bturan {

namespace {

struct KindInfo {
  ConstructionKind kind;
  std::string_view name;
  std::vector<std::string_view> params;
};

const std::vector<KindInfo>& kind_table() {
  static const std::vector<KindInfo> table{
      {ConstructionKind::DisjointDoubleBiclique, "disjoint_double_biclique", {"s", "a", "b"}},
      {ConstructionKind::BlocksUnion, "blocks_union", {"n", "L"}},
      {ConstructionKind::HalvedBlocks, "halved_blocks", {"n", "v"}},
      {ConstructionKind::Circulant, "circulant", {"n", "k"}},
      {ConstructionKind::Matching, "matching", {"n"}},
      {ConstructionKind::TwoStars, "two_stars", {"n"}},
      {ConstructionKind::SpanningDoubleStar, "spanning_double_star", {"n"}},
      {ConstructionKind::Theta, "theta", {"n"}},
      {ConstructionKind::TwoBicliques2, "two_bicliques_2", {"n"}},
      {ConstructionKind::ConnectedD22, "connected_D22", {"n"}},
      {ConstructionKind::SpiderBlocks, "spider_blocks", {"n", "d"}},
      {ConstructionKind::BridgedDoubleBiclique, "bridged_double_biclique", {"s", "a", "b"}},
      {ConstructionKind::StarPlus, "star_plus", {"a", "b", "d"}},
      {ConstructionKind::SpanningSpider, "spanning_spider", {"n"}},
  };
  return table;
}

const KindInfo& info(ConstructionKind kind) {
  for (const auto& k : kind_table())
    if (k.kind == kind) return k;
  throw InvalidArgument("unknown construction kind");
}

[[noreturn]] void bound_failure(const ConstructionSpec& spec, const std::string& bound) {
  throw InvalidArgument(to_string(spec) + ": requires " + bound);
}

void require(const ConstructionSpec& spec, bool ok, const std::string& bound) {
  if (!ok) bound_failure(spec, bound);
}

// Adds K over left [l0, l0 + p) x right [r0, r0 + q).
void add_biclique(BipartiteGraph& g, int l0, int p, int r0, int q) {
  for (int i = l0; i < l0 + p; ++i)
    for (int j = r0; j < r0 + q; ++j) g.add_edge(i, j);
}

// K_{s,a-s} u K_{s,b-s}: left i >= s sees right j < s; left i < s sees right j >= s.
BipartiteGraph disjoint_double_biclique(int s, int a, int b) {
  BipartiteGraph g(a, b);
  add_biclique(g, s, a - s, 0, s);
  add_biclique(g, 0, s, s, b - s);
  return g;
}

BipartiteGraph circulant(int n, int k) {
  BipartiteGraph g(n, n);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) g.add_edge(i, (i + t) % n);
  return g;
}

BipartiteGraph blocks_union(int n, int L) {
  BipartiteGraph g(n, n);
  const int w = L - 1;
  const int x = n / w;
  for (int t = 0; t < x; ++t) add_biclique(g, t * w, w, t * w, w);
  const int y = n - x * w;
  add_biclique(g, x * w, y, x * w, y);
  return g;
}

}  // namespace

std::span<const ConstructionKind> all_construction_kinds() {
  static const std::vector<ConstructionKind> kinds = [] {
    std::vector<ConstructionKind> out;
    for (const auto& k : kind_table()) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

std::string_view kind_name(ConstructionKind kind) { return info(kind).name; }

std::optional<ConstructionKind> kind_from_name(std::string_view name) {
  for (const auto& k : kind_table())
    if (k.name == name) return k.kind;
  return std::nullopt;
}

std::span<const std::string_view> parameter_names(ConstructionKind kind) { return info(kind).params; }

std::string to_string(const ConstructionSpec& spec) {
  std::string out(kind_name(spec.kind));
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out + ')';
}

ConstructionSpec parse_construction(std::string_view text) {
  auto fail = [&](const std::string& what) -> void {
    throw InvalidArgument("bad construction \"" + std::string(text) + "\": " + what);
  };
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') fail("expected name(params)");
  auto kind = kind_from_name(text.substr(0, open));
  if (!kind) fail("unknown kind \"" + std::string(text.substr(0, open)) + "\"");
  const auto& names = info(*kind).params;
  std::vector<std::optional<int>> values(names.size());
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::size_t position = 0;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (comma != std::string_view::npos && body.empty()) fail("trailing comma");
    std::size_t slot = position;
    if (auto eq = item.find('='); eq != std::string_view::npos) {
      auto key = item.substr(0, eq);
      slot = names.size();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == key) slot = i;
      if (slot == names.size()) fail("unknown parameter \"" + std::string(key) + "\"");
      item = item.substr(eq + 1);
    }
    if (slot >= names.size()) fail("too many parameters");
    if (values[slot]) fail("parameter " + std::string(names[slot]) + " given twice");
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      fail("parameter \"" + std::string(item) + "\" is not an integer");
    }
    values[slot] = v;
    ++position;
  }
  ConstructionSpec spec{*kind, {}};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!values[i]) fail("missing parameter " + std::string(names[i]));
    spec.params.push_back(*values[i]);
  }
  validate(spec);
  return spec;
}

void validate(const ConstructionSpec& spec) {
  const auto& names = info(spec.kind).params;
  if (spec.params.size() != names.size()) {
    throw InvalidArgument(std::string(kind_name(spec.kind)) + " takes " + std::to_string(names.size()) +
                          " parameters");
  }
  const auto& p = spec.params;
  auto part = [&](int v, const char* what) { require(spec, v >= 1 && v <= kMaxPartSize, std::string("1 <= ") + what + " <= 64"); };
  switch (spec.kind) {
    case ConstructionKind::DisjointDoubleBiclique:
      part(p[1], "a");
      part(p[2], "b");
      require(spec, p[0] >= 0 && p[0] <= p[1] && p[0] <= p[2], "0 <= s <= a, b");
      break;
    case ConstructionKind::BlocksUnion:
      part(p[0], "n");
      require(spec, p[1] >= 2, "L >= 2");
      break;
    case ConstructionKind::HalvedBlocks:
      part(p[0], "n");
      require(spec, p[1] >= 3, "v >= 3");
      break;
    case ConstructionKind::Circulant:
      part(p[0], "n");
      require(spec, p[1] >= 2 && p[1] <= p[0], "2 <= k <= n");
      break;
    case ConstructionKind::Matching:
      part(p[0], "n");
      break;
    case ConstructionKind::TwoStars:
    case ConstructionKind::SpanningDoubleStar:
    case ConstructionKind::SpanningSpider:
      part(p[0], "n");
      require(spec, p[0] >= 2, "n >= 2");
      break;
    case ConstructionKind::Theta:
    case ConstructionKind::TwoBicliques2:
      part(p[0], "n");
      require(spec, p[0] >= 3, "n >= 3");
      break;
    case ConstructionKind::ConnectedD22:
      part(p[0], "n");
      require(spec, p[0] >= 4, "n >= 4");
      break;
    case ConstructionKind::SpiderBlocks:
      part(p[0], "n");
      require(spec, p[1] >= 2, "d >= 2");
      break;
    case ConstructionKind::BridgedDoubleBiclique:
      part(p[1], "a");
      part(p[2], "b");
      require(spec, p[0] >= 2, "s >= 2");
      require(spec, p[1] >= p[0] + 2 && p[2] >= p[0] + 2, "a, b >= s + 2");
      break;
    case ConstructionKind::StarPlus:
      part(p[0], "a");
      part(p[1], "b");
      require(spec, p[2] >= 2, "d >= 2");
      require(spec, p[0] >= p[2] + 1, "a >= d + 1");
      require(spec, p[1] >= p[0], "b >= a");
      break;
  }
}

std::pair<int, int> host_parts(const ConstructionSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ConstructionKind::DisjointDoubleBiclique:
    case ConstructionKind::BridgedDoubleBiclique:
      return {spec.params[1], spec.params[2]};
    case ConstructionKind::StarPlus:
      return {spec.params[0], spec.params[1]};
    default:
      return {spec.params[0], spec.params[0]};
  }
}

BipartiteGraph build_construction(const ConstructionSpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case ConstructionKind::DisjointDoubleBiclique:
      return disjoint_double_biclique(p[0], p[1], p[2]);
    case ConstructionKind::BlocksUnion:
      return blocks_union(p[0], p[1]);
    case ConstructionKind::HalvedBlocks: {
      const int n = p[0], v = p[1];
      const int f = (v - 1) / 2, c = v - 1 - f;
      const int x = 2 * n / (v - 1);
      BipartiteGraph g(n, n);
      int l = 0, r = 0;
      for (int t = 0; t < x; ++t) {
        int lp = t % 2 == 0 ? f : c;
        int rq = t % 2 == 0 ? c : f;
        add_biclique(g, l, lp, r, rq);
        l += lp;
        r += rq;
      }
      return g;
    }
    case ConstructionKind::Circulant:
      return circulant(p[0], p[1]);
    case ConstructionKind::Matching: {
      BipartiteGraph g(p[0], p[0]);
      for (int i = 0; i < p[0]; ++i) g.add_edge(i, i);
      return g;
    }
    case ConstructionKind::TwoStars: {
      BipartiteGraph g(p[0], p[0]);
      for (int i = 1; i < p[0]; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, 0);
      }
      return g;
    }
    case ConstructionKind::SpanningDoubleStar: {
      BipartiteGraph g(p[0], p[0]);
      for (int i = 0; i < p[0]; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, 0);
      }
      return g;
    }
    case ConstructionKind::Theta: {
      // u = left 0 and v = right 0; x_i = left i, y_i = right i.
      BipartiteGraph g(p[0], p[0]);
      for (int i = 1; i < p[0]; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, 0);
        g.add_edge(i, i);
      }
      return g;
    }
    case ConstructionKind::TwoBicliques2:
      return disjoint_double_biclique(2, p[0], p[0]);
    case ConstructionKind::ConnectedD22: {
      // u_k = left k-1, v_k = right k-1.
      const int n = p[0];
      BipartiteGraph g(n, n);
      g.add_edge(0, 0);
      g.add_edge(0, 1);
      g.add_edge(1, 0);
      for (int j = 3; j < n; ++j) {
        g.add_edge(1, j);
        g.add_edge(2, j);
        g.add_edge(j, 1);
        g.add_edge(j, 2);
      }
      return g;
    }
    case ConstructionKind::SpiderBlocks:
      return blocks_union(p[0], p[1] + 2);
    case ConstructionKind::BridgedDoubleBiclique: {
      const int s = p[0];
      auto g = disjoint_double_biclique(s, p[1], p[2]);
      g.remove_edge(s, 0);
      g.remove_edge(0, s);
      g.add_edge(s, s);
      return g;
    }
    case ConstructionKind::StarPlus: {
      const int a = p[0], b = p[1], d = p[2];
      BipartiteGraph g(a, b);
      for (int i = 0; i < a - 1; ++i)
        for (int t = 0; t < d; ++t) g.add_edge(i, (i + t) % (a - 1));
      for (int j = a - 1; j < b; ++j) g.add_edge(a - 1, j);
      return g;
    }
    case ConstructionKind::SpanningSpider: {
      BipartiteGraph g(p[0], p[0]);
      g.add_edge(0, 0);
      for (int i = 1; i < p[0]; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i);
      }
      return g;
    }
  }
  throw InvalidArgument("unknown construction kind");
}

long long claimed_edge_count(const ConstructionSpec& spec) {
  validate(spec);
  const auto& q = spec.params;
  auto p = [&](std::size_t i) { return static_cast<long long>(q[i]); };
  switch (spec.kind) {
    case ConstructionKind::DisjointDoubleBiclique:
      return p(0) * (p(1) + p(2) - 2 * p(0));
    case ConstructionKind::BlocksUnion:
    case ConstructionKind::SpiderBlocks: {
      const long long w = spec.kind == ConstructionKind::BlocksUnion ? p(1) - 1 : p(1) + 1;
      const long long x = p(0) / w, y = p(0) - x * w;
      return x * w * w + y * y;
    }
    case ConstructionKind::HalvedBlocks: {
      const long long v = p(1);
      return (2 * p(0) / (v - 1)) * ((v - 1) / 2) * (v / 2);
    }
    case ConstructionKind::Circulant:
      return p(0) * p(1);
    case ConstructionKind::Matching:
      return p(0);
    case ConstructionKind::TwoStars:
      return 2 * p(0) - 2;
    case ConstructionKind::SpanningDoubleStar:
    case ConstructionKind::SpanningSpider:
      return 2 * p(0) - 1;
    case ConstructionKind::Theta:
      return 3 * p(0) - 3;
    case ConstructionKind::TwoBicliques2:
      return 4 * p(0) - 8;
    case ConstructionKind::ConnectedD22:
      return 4 * p(0) - 9;
    case ConstructionKind::BridgedDoubleBiclique:
      return p(0) * (p(1) + p(2) - 2 * p(0)) - 1;
    case ConstructionKind::StarPlus:
      return p(2) * (p(0) - 1) + p(1) - p(0) + 1;
  }
  throw InvalidArgument("unknown construction kind");
}

PatternFamily declared_target(const ConstructionSpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case ConstructionKind::DisjointDoubleBiclique:
      return PatternFamily(TreesKL{p[0] + 1, p[0] + 1});
    case ConstructionKind::BlocksUnion:
      return PatternFamily(make_star(p[1]));
    case ConstructionKind::HalvedBlocks:
      return PatternFamily(make_path(p[1]));
    case ConstructionKind::Circulant:
      return PatternFamily(make_star(p[1] + 1));
    case ConstructionKind::Matching:
      return PatternFamily(make_path(3));
    case ConstructionKind::TwoStars:
      return PatternFamily(make_path(4));
    case ConstructionKind::SpanningDoubleStar:
      return PatternFamily(make_path(5));
    case ConstructionKind::Theta:
    case ConstructionKind::TwoBicliques2:
    case ConstructionKind::ConnectedD22:
      return PatternFamily(make_double_star(2, 2));
    case ConstructionKind::SpiderBlocks: {
      std::vector<int> legs(static_cast<std::size_t>(p[1]), 1);
      legs.insert(legs.begin(), 3);
      return PatternFamily(make_spider(legs));
    }
    case ConstructionKind::BridgedDoubleBiclique:
      return PatternFamily(make_double_star(p[0], p[0]));
    case ConstructionKind::StarPlus: {
      std::vector<int> legs(static_cast<std::size_t>(p[2]), 1);
      legs.insert(legs.begin(), 2);
      return PatternFamily(make_spider(legs));
    }
    case ConstructionKind::SpanningSpider: {
      std::vector<Pattern> parts{make_path(3), make_path(3)};
      return PatternFamily(make_union(parts));
    }
  }
  throw InvalidArgument("unknown construction kind");
}

bool is_connected_kind(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Circulant:
    case ConstructionKind::SpanningDoubleStar:
    case ConstructionKind::Theta:
    case ConstructionKind::ConnectedD22:
    case ConstructionKind::BridgedDoubleBiclique:
    case ConstructionKind::SpanningSpider:
      return true;
    default:
      return false;
  }
}

ConstructionVerdict verify_construction(const ConstructionSpec& spec, const PatternFamily& target, int cap) {
  const auto g = build_construction(spec);
  ConstructionVerdict v;
  v.edges = g.edge_count();
  v.claimed = claimed_edge_count(spec);
  v.count_ok = v.edges == v.claimed;
  v.connected = is_connected(g);
  const auto members = target.members(cap);
  v.witness = find_family_embedding(g, members);
  v.free = !v.witness.has_value();
  return v;
}

}  // namespace bturan
