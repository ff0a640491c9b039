#include <charconv>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bturan/error.hpp"
#include "bturan/version.hpp"
#include "cache.hpp"
#include "commands.hpp"

using namespace workbench;

namespace {

void add_host(CLI::App* cmd, HostArgs& h) {
  cmd->add_option("--n", h.n, "Balanced host K_{n,n}")->check(CLI::PositiveNumber);
  cmd->add_option("--a", h.a, "Left part size")->check(CLI::PositiveNumber);
  cmd->add_option("--b", h.b, "Right part size")->check(CLI::PositiveNumber);
}

CLI::Option* add_variant(CLI::App* cmd, std::string& v) {
  return cmd->add_option("--variant", v, "b (all subgraphs) or bc (spanning connected)")
      ->check(CLI::IsMember({"b", "bc"}))
      ->capture_default_str();
}

// Environment values become defaults that flags then override.
bool apply_environment(RunConfig& cfg) {
  if (const char* path = std::getenv("WORKBENCH_CACHE"); path && *path) cfg.cache_path = path;
  if (const char* t = std::getenv("WORKBENCH_THREADS"); t && *t) {
    int value = 0;
    const auto [end, ec] = std::from_chars(t, t + std::strlen(t), value);
    if (ec != std::errc() || *end != '\0' || value < 1) {
      std::cerr << "workbench: WORKBENCH_THREADS must be a positive integer, got '" << t << "'\n";
      return false;
    }
    cfg.threads = value;
  }
  return true;
}

int fail(int code, const std::string& what) {
  std::cerr << "workbench: " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bipartite Turan numbers of trees"};
  app.set_version_flag("--version", std::string(bturan::kVersion));
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();

  RunConfig cfg;
  if (!apply_environment(cfg)) return kExitUsage;
  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
  app.add_option("--format", cfg.format, "Output format: json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  app.add_option("--cache", cfg.cache_path, "JSON-lines cache of solved instances (env WORKBENCH_CACHE)")
      ->capture_default_str();
  app.add_flag("--no-cache{false}", cfg.use_cache, "Neither read nor write the cache");
  app.add_option("--threads", cfg.threads, "Solver threads (env WORKBENCH_THREADS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--node-budget", cfg.node_budget, "Solver node budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--memo-capacity", cfg.memo_capacity, "Solver memo entries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Exact value with a certificate");
  add_host(s, solve.host);
  s->add_option("--pattern", solve.pattern, "Pattern literal, e.g. D2,2 or T3,3")->required();
  add_variant(s, solve.variant);
  s->add_flag("--enumerate", solve.enumerate, "List every extremal graph up to isomorphism");
  s->add_flag("--no-seed{false}", solve.seed, "Do not seed the search from the registry");

  LookupArgs look;
  auto* l = app.add_subcommand("lookup", "Closed-form value or bounds from the registry");
  add_host(l, look.host);
  l->add_option("--pattern", look.pattern, "Pattern literal")->required();
  add_variant(l, look.variant);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-construction", "Build a construction and check it against its target");
  v->add_option("spec", verify.spec, "Construction, e.g. theta(7) or circulant(n=6,k=3)")->required();
  v->add_option("--target", verify.target, "Pattern literal (default: the declared target)");
  v->add_flag("--bgf", verify.print_bgf, "Include the built graph in BGF");

  FamilyArgs family;
  auto* fam = app.add_subcommand("family", "Enumerate T_{k,l} or all trees of an order");
  fam->add_option("--k", family.k, "Smaller part size")->check(CLI::PositiveNumber);
  fam->add_option("--l", family.l, "Larger part size")->check(CLI::PositiveNumber);
  fam->add_option("--order", family.order, "Number of vertices")->check(CLI::PositiveNumber);

  TableArgs table;
  auto* t = app.add_subcommand("table", "Registry against solver for the trees of order 4 to 6");
  t->add_option("--min-n", table.min_n, "Smallest n")->capture_default_str();
  t->add_option("--max-n", table.max_n, "Largest n")->capture_default_str();

  CutArgs cut;
  auto* c = app.add_subcommand("cut", "Balanced local-switching cut of a general graph");
  c->add_option("input", cut.input, "Graph file (\"2n\" header, \"u v\" lines); - for stdin")->capture_default_str();
  c->add_flag("--exhaustive", cut.exhaustive, "Also compute the maximum balanced cut (at most 20 vertices)");

  RatioArgs ratio;
  auto* r = app.add_subcommand("ratio", "Finite-n ratios and the ratio constructions");
  r->add_flag("--x0", ratio.x0, "Print the root x0 and the derived ratio bounds");
  r->add_option("--tree", ratio.tree, "Tree literal for finite ratios");
  r->add_option("--n", ratio.n_min, "Host size (or first size)")->check(CLI::PositiveNumber);
  r->add_option("--n-max", ratio.n_max, "Last host size")->check(CLI::PositiveNumber);
  add_variant(r, ratio.variant);
  r->add_option("--source", ratio.source, "solver, registry or witness")
      ->check(CLI::IsMember({"solver", "registry", "witness"}))
      ->capture_default_str();
  r->add_option("--construction", ratio.kind, "Ratio construction kind")->check(CLI::IsMember({1, 2, 3}));
  r->add_option("--c", ratio.c, "Construction parameter c")->capture_default_str();
  r->add_option("--p", ratio.p, "Construction parameter p")->capture_default_str();
  r->add_option("--k", ratio.k, "Tree size scale")->capture_default_str();
  r->add_option("--host-n", ratio.host_n, "Construction host half-size")->capture_default_str();

  CacheArgs cache;
  auto* ca = app.add_subcommand("cache", "Inspect the result cache");
  ca->add_option("action", cache.action, "list, verify or prune")
      ->required()
      ->check(CLI::IsMember({"list", "verify", "prune"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*s) return cmd_solve(solve, cfg, std::cout);
    if (*l) return cmd_lookup(look, cfg, std::cout);
    if (*v) return cmd_verify_construction(verify, cfg, std::cout);
    if (*fam) return cmd_family(family, cfg, std::cout);
    if (*t) return cmd_table(table, cfg, std::cout);
    if (*c) return cmd_cut(cut, cfg, std::cout);
    if (*r) return cmd_ratio(ratio, cfg, std::cout);
    if (*ca) return cmd_cache(cache, cfg, std::cout);
  } catch (const IoError& e) {
    return fail(kExitIo, e.what());
  } catch (const bturan::ResourceError& e) {
    return fail(kExitBudget, e.what());
  } catch (const bturan::InvalidArgument& e) {
    return fail(kExitUsage, e.what());
  } catch (const bturan::ParseError& e) {
    return fail(kExitUsage, e.what());
  } catch (const bturan::InfeasibleQuery& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
  return kExitUsage;
}
