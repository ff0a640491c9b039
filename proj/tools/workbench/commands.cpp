#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bturan/bgf.hpp"
#include "bturan/constructions.hpp"
#include "bturan/cut.hpp"
#include "bturan/embedder.hpp"
#include "bturan/error.hpp"
#include "bturan/pattern_literal.hpp"
#include "bturan/ratio.hpp"
#include "bturan/registry.hpp"
#include "bturan/solver.hpp"
#include "bturan/tree_enum.hpp"
#include "bturan/version.hpp"
#include "cache.hpp"

namespace workbench {

using json = nlohmann::ordered_json;
using namespace bturan;

namespace {

std::pair<int, int> resolve_host(const HostArgs& h) {
  if (h.n && !h.a && !h.b) return {*h.n, *h.n};
  if (!h.n && h.a && h.b) return {*h.a, *h.b};
  throw InvalidArgument("give either --n or both --a and --b");
}

Variant parse_variant(const std::string& s) {
  const auto v = variant_from_name(s);
  if (!v) throw InvalidArgument("variant must be b or bc, got '" + s + "'");
  return *v;
}

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Exact:
      return "Exact";
    case SolveStatus::Inconclusive:
      return "Inconclusive";
    case SolveStatus::NoConnectedHost:
      return "NoConnectedHost";
  }
  return "Exact";
}

json embedding_json(const Embedding& e) {
  json map = json::array();
  for (const auto& v : e.map) map.push_back((v.side == Side::Left ? "L" : "R") + std::to_string(v.index));
  return map;
}

json value_json(const ValueOrBounds& r) {
  const bool known = !r.is_unknown();
  return json{{"result", r.describe()},
              {"tag", r.is_exact() ? "Exact" : known ? "Range" : "Unknown"},
              {"lo", known ? json(r.lo) : json()},
              {"hi", known ? json(r.hi) : json()},
              {"citation", r.citation()},
              {"citations", r.citations},
              {"notes", r.notes},
              {"witness", r.witness ? json(to_string(*r.witness)) : json()}};
}

// Exact results keyed by (a, b, literal, variant); only current-version
// records whose certificates re-verify are served.
class SolveCache {
 public:
  explicit SolveCache(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg_.use_cache) records_ = latest_records(read_cache(cfg_.cache_path));
  }

  std::optional<SolveResult> find(const CacheKey& key) const {
    if (!cfg_.use_cache) return std::nullopt;
    const auto it = records_.find(key);
    if (it == records_.end() || it->second.tool_version != kVersion || check_record(it->second)) return std::nullopt;
    SolveResult r;
    r.value = it->second.value;
    r.certificate = parse_bgf(it->second.certificate_bgf);
    const auto& s = it->second.stats;
    r.stats.nodes = s.value("nodes", std::uint64_t{0});
    r.stats.memo_hits = s.value("memo_hits", std::uint64_t{0});
    r.stats.wall_seconds = s.value("wall_seconds", 0.0);
    return r;
  }

  void add(const CacheKey& key, const SolveResult& r) {
    if (!cfg_.use_cache || !r.is_exact()) return;
    CacheRecord rec{key, r.value, serialize_bgf(r.certificate), stats_json(r), utc_timestamp(), std::string(kVersion)};
    append_record(cfg_.cache_path, rec);
    records_.insert_or_assign(key, std::move(rec));
  }

  json stats_json(const SolveResult& r) const {
    return json{{"nodes", r.stats.nodes},
                {"memo_hits", r.stats.memo_hits},
                {"wall_seconds", r.stats.wall_seconds},
                {"threads", cfg_.threads}};
  }

 private:
  const RunConfig& cfg_;
  std::map<CacheKey, CacheRecord> records_;
};

struct Outcome {
  SolveResult result;
  bool cached = false;
};

Outcome solve_through_cache(SolveCache& cache, int a, int b, const PatternFamily& f, Variant v, const RunConfig& cfg,
                            bool enumerate, bool seed) {
  const CacheKey key{a, b, f.display_name(), std::string(variant_name(v))};
  if (!enumerate) {
    if (auto hit = cache.find(key)) {
      hit->degenerate = !f.fits(a, b);
      hit->experimental = v == Variant::BC && a != b;
      return {std::move(*hit), true};
    }
  }
  SolverConfig sc;
  sc.variant = v;
  sc.threads = cfg.threads;
  sc.node_budget = cfg.node_budget;
  sc.memo_capacity = cfg.memo_capacity;
  sc.enumerate_extremal = enumerate;
  sc.seed_from_registry = seed;
  Outcome o{solve(a, b, f, sc), false};
  cache.add(key, o.result);
  return o;
}

const char* const kTableTrees[] = {"P4",     "K1,3", "P5",     "K1,4",   "S2,1,1",  "P6",
                                   "K1,5",   "S2,2,1", "S3,1,1", "D2,2", "S2,1,1,1"};

}  // namespace

int cmd_solve(const SolveArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto [a, b] = resolve_host(args.host);
  const auto f = parse_pattern_literal(args.pattern);
  const auto v = parse_variant(args.variant);
  SolveCache cache(cfg);
  const auto [r, cached] = solve_through_cache(cache, a, b, f, v, cfg, args.enumerate, args.seed);

  json report{{"command", "solve"},
              {"a", a},
              {"b", b},
              {"pattern", f.display_name()},
              {"variant", variant_name(v)},
              {"status", status_name(r.status)},
              {"value", r.value},
              {"certificate_bgf", r.value < 0 ? json() : json(serialize_bgf(r.certificate))},
              {"extremal_count", r.all_extremal ? json(r.all_extremal->size()) : json()},
              {"stats", cache.stats_json(r)},
              {"degenerate", r.degenerate},
              {"experimental", r.experimental},
              {"cached", cached}};
  if (r.all_extremal) {
    json list = json::array();
    for (const auto& [code, g] : *r.all_extremal) list.push_back(serialize_bgf(g));
    report["extremal_bgf"] = std::move(list);
  }
  emit(report, cfg.format, out);
  return r.status == SolveStatus::Inconclusive ? kExitBudget : kExitOk;
}

int cmd_lookup(const LookupArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto [a, b] = resolve_host(args.host);
  const auto f = parse_pattern_literal(args.pattern);
  const auto v = parse_variant(args.variant);
  json report{{"command", "lookup"}, {"a", a}, {"b", b}, {"pattern", f.display_name()}, {"variant", variant_name(v)}};
  report.update(value_json(lookup(f, a, b, v)));
  emit(report, cfg.format, out);
  return kExitOk;
}

int cmd_verify_construction(const VerifyArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto spec = parse_construction(args.spec);
  validate(spec);
  const auto target = args.target.empty() ? declared_target(spec) : parse_pattern_literal(args.target);
  const auto verdict = verify_construction(spec, target);
  const auto [a, b] = host_parts(spec);
  json report{{"command", "verify-construction"},
              {"spec", to_string(spec)},
              {"target", target.display_name()},
              {"a", a},
              {"b", b},
              {"edges", verdict.edges},
              {"claimed", verdict.claimed},
              {"free", verdict.free},
              {"count_ok", verdict.count_ok},
              {"connected", verdict.connected},
              {"ok", verdict.ok()},
              {"witness", json()}};
  if (verdict.witness) {
    const auto members = target.members();
    report["witness"] = json{{"member", members[verdict.witness->first].display_name()},
                             {"map", embedding_json(verdict.witness->second)}};
  }
  if (args.print_bgf) report["certificate_bgf"] = serialize_bgf(build_construction(spec));
  emit(report, cfg.format, out);
  return verdict.ok() ? kExitOk : kExitVerify;
}

int cmd_family(const FamilyArgs& args, const RunConfig& cfg, std::ostream& out) {
  std::vector<Pattern> trees;
  json report{{"command", "family"}};
  if (args.k && args.l && !args.order) {
    trees = enumerate_T_kl(*args.k, *args.l);
    report["k"] = *args.k;
    report["l"] = *args.l;
  } else if (args.order && !args.k && !args.l) {
    trees = free_trees(*args.order);
    report["order"] = *args.order;
  } else {
    throw InvalidArgument("give either --k and --l, or --order");
  }
  json rows = json::array();
  for (const auto& t : trees) {
    const auto named = with_literal_name(t);
    const auto [p, q] = t.part_sizes();
    json edges = json::array();
    for (const auto& e : t.edges()) edges.push_back({e.u, e.v});
    rows.push_back({{"name", named.display_name()},
                    {"k", p},
                    {"l", q},
                    {"max_degree", t.max_degree()},
                    {"exbc_defined", exbc_defined(t)},
                    {"edges", edges.dump()}});
  }
  report["count"] = trees.size();
  report["rows"] = std::move(rows);
  emit(report, cfg.format, out);
  return kExitOk;
}

int cmd_table(const TableArgs& args, const RunConfig& cfg, std::ostream& out) {
  if (args.min_n < 1 || args.max_n < args.min_n) throw InvalidArgument("table needs 1 <= min-n <= max-n");
  SolveCache cache(cfg);
  json rows = json::array();
  int mismatches = 0, inconclusive = 0;
  for (const char* literal : kTableTrees) {
    const auto f = parse_pattern_literal(literal);
    for (int n = args.min_n; n <= args.max_n; ++n) {
      if (!f.fits(n, n)) continue;
      for (auto v : {Variant::B, Variant::BC}) {
        if (v == Variant::BC && !exbc_defined(f.single())) continue;
        const auto known = lookup(f, n, n, v);
        const auto [r, cached] = solve_through_cache(cache, n, n, f, v, cfg, false, true);
        std::string verdict;
        if (r.status == SolveStatus::Inconclusive) {
          verdict = "INCONCLUSIVE";
          ++inconclusive;
        } else if (r.status == SolveStatus::NoConnectedHost) {
          verdict = known.is_unknown() ? "BOUNDS-CONSISTENT" : "MISMATCH";
        } else if (known.is_exact()) {
          verdict = known.lo == r.value ? "MATCH" : "MISMATCH";
        } else {
          verdict = known.admits(r.value) ? "BOUNDS-CONSISTENT" : "MISMATCH";
        }
        if (verdict == "MISMATCH") ++mismatches;
        rows.push_back({{"tree", f.display_name()},
                        {"n", n},
                        {"variant", variant_name(v)},
                        {"registry", known.describe()},
                        {"solver", r.status == SolveStatus::NoConnectedHost ? json() : json(r.value)},
                        {"status", status_name(r.status)},
                        {"verdict", verdict},
                        {"cached", cached},
                        {"seconds", std::round(r.stats.wall_seconds * 1000) / 1000}});
      }
    }
  }
  json report{{"command", "table"},
              {"min_n", args.min_n},
              {"max_n", args.max_n},
              {"mismatches", mismatches},
              {"inconclusive", inconclusive},
              {"rows", std::move(rows)}};
  emit(report, cfg.format, out);
  if (mismatches > 0) return kExitVerify;
  return inconclusive > 0 ? kExitBudget : kExitOk;
}

int cmd_cut(const CutArgs& args, const RunConfig& cfg, std::ostream& out) {
  std::string text;
  if (args.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(args.input);
    if (!in) throw IoError("cannot read " + args.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto g = parse_graph(text);
  const auto cut = switch_to_large_cut(g);
  const auto guarantee = switching_guarantee(g);
  json side = json::array();
  for (auto s : cut.side) side.push_back(s);
  std::optional<long long> max_cut;
  if (args.exhaustive) max_cut = max_balanced_cut(g).cut_size;
  const bool ok = cut.cut_size >= guarantee && (!max_cut || cut.cut_size <= *max_cut);
  json report{{"command", "cut"},
              {"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"cut_size", cut.cut_size},
              {"guarantee", guarantee},
              {"meets_guarantee", cut.cut_size >= guarantee},
              {"switch_optimal", is_pair_swap_optimal(g, cut)},
              {"max_cut", max_cut ? json(*max_cut) : json()},
              {"side", side},
              {"bipartite_bgf", serialize_bgf(bipartite_subgraph_from_cut(g, cut))}};
  emit(report, cfg.format, out);
  return ok ? kExitOk : kExitVerify;
}

int cmd_ratio(const RatioArgs& args, const RunConfig& cfg, std::ostream& out) {
  const int modes = (args.x0 ? 1 : 0) + (args.kind != 0 ? 1 : 0) + (!args.tree.empty() ? 1 : 0);
  if (modes != 1) throw InvalidArgument("ratio needs exactly one of --x0, --construction, --tree");
  json report{{"command", "ratio"}};
  if (args.x0) {
    const double x = x0();
    report["mode"] = "x0";
    report["x0"] = x;
    report["x0_bisection"] = x0_bisection();
    report["residual"] = std::abs(14 * x * x - 14 * x + 3);
    report["gamma_bc_lower"] = (2 - 2 * x) / 3;
    report["gamma_b_to_c_lower"] = (1 - x) / 3;
  } else if (args.kind != 0) {
    const RatioParams params{args.c, args.p, args.k, args.host_n};
    const auto blocks = ratio_blocks(args.kind, params);
    const auto g = build_ratio_construction(args.kind, params);
    report["mode"] = "construction";
    report["kind"] = args.kind;
    report["params"] = {{"c", params.c}, {"p", params.p}, {"k", params.k}, {"n", params.n}};
    report["blocks"] = {{"biclique", blocks.biclique}, {"path", blocks.path},   {"periods", blocks.periods},
                        {"universal", blocks.universal}, {"ell", blocks.ell}, {"alpha", blocks.alpha}};
    report["edges"] = g.edge_count();
    report["connected"] = is_connected(g);
    report["ratio"] = args.k > 2 ? json(static_cast<double>(g.edge_count()) / ((args.k - 2.0) * args.host_n)) : json();
  } else {
    const auto f = parse_pattern_literal(args.tree);
    if (!f.is_single() || f.single().component_count() != 1) throw InvalidArgument("ratio needs a tree literal");
    const auto v = parse_variant(args.variant);
    const auto source = source_from_name(args.source);
    if (!source) throw InvalidArgument("source must be solver, registry or witness");
    const int hi = args.n_max == 0 ? args.n_min : args.n_max;
    if (args.n_min < 1 || hi < args.n_min) throw InvalidArgument("ratio needs 1 <= n <= n-max");
    report["mode"] = "tree";
    json rows = json::array();
    for (int n = args.n_min; n <= hi; ++n) {
      const auto r = finite_ratio(f.single(), n, v, *source);
      rows.push_back({{"tree", r.tree},
                      {"n", r.n},
                      {"variant", variant_name(r.variant)},
                      {"source", source_name(r.source)},
                      {"edges", r.edges},
                      {"ratio", r.ratio},
                      {"exact", r.exact},
                      {"upper_edges", r.upper_edges ? json(*r.upper_edges) : json()},
                      {"upper_ratio", r.upper_ratio ? json(*r.upper_ratio) : json()}});
    }
    report["rows"] = std::move(rows);
  }
  emit(report, cfg.format, out);
  return kExitOk;
}

int cmd_cache(const CacheArgs& args, const RunConfig& cfg, std::ostream& out) {
  const auto lines = read_cache(cfg.cache_path, true);
  json report{{"command", "cache"}, {"action", args.action}, {"path", cfg.cache_path}, {"lines", lines.size()}};
  int rc = kExitOk;
  if (args.action == "list") {
    json rows = json::array();
    for (const auto& [key, r] : latest_records(lines))
      rows.push_back({{"a", key.a},
                      {"b", key.b},
                      {"pattern", key.pattern},
                      {"variant", key.variant},
                      {"value", r.value},
                      {"timestamp", r.timestamp},
                      {"tool_version", r.tool_version}});
    report["records"] = rows.size();
    report["rows"] = std::move(rows);
  } else if (args.action == "verify") {
    json rows = json::array();
    std::size_t checked = 0;
    for (const auto& l : lines) {
      std::optional<std::string> err;
      if (!l.record) {
        err = l.error;
      } else {
        ++checked;
        err = check_record(*l.record);
      }
      if (err) rows.push_back({{"line", l.line}, {"error", *err}});
    }
    report["checked"] = checked;
    report["failures"] = rows.size();
    if (!rows.empty()) rc = kExitVerify;
    report["rows"] = std::move(rows);
  } else if (args.action == "prune") {
    std::size_t old_version = 0, unreadable = 0, parsed = 0;
    for (const auto& l : lines) {
      if (!l.record) ++unreadable;
      else if (l.record->tool_version != kVersion) ++old_version;
      else ++parsed;
    }
    std::vector<CacheLine> current;
    for (const auto& l : lines)
      if (l.record && l.record->tool_version == kVersion) current.push_back(l);
    std::vector<CacheRecord> keep;
    for (auto& [key, r] : latest_records(current)) keep.push_back(std::move(r));
    rewrite_cache(cfg.cache_path, keep);
    report["removed_old_version"] = old_version;
    report["removed_superseded"] = parsed - keep.size();
    report["removed_unreadable"] = unreadable;
    report["kept"] = keep.size();
  } else {
    throw InvalidArgument("cache action must be list, verify or prune");
  }
  emit(report, cfg.format, out);
  return rc;
}

}  // namespace workbench
