#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "report.hpp"

namespace workbench {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitVerify = 4;
inline constexpr int kExitIo = 5;

struct RunConfig {
  std::string cache_path = "workbench-cache.jsonl";
  bool use_cache = true;
  int threads = 1;
  std::uint64_t node_budget = 200'000'000;
  std::size_t memo_capacity = std::size_t{1} << 21;
  Format format = Format::Json;
};

struct HostArgs {
  std::optional<int> n;
  std::optional<int> a;
  std::optional<int> b;
};

struct SolveArgs {
  HostArgs host;
  std::string pattern;
  std::string variant = "b";
  bool enumerate = false;
  bool seed = true;
};

struct LookupArgs {
  HostArgs host;
  std::string pattern;
  std::string variant = "b";
};

struct VerifyArgs {
  std::string spec;
  std::string target;  // empty: the construction's declared target
  bool print_bgf = false;
};

struct FamilyArgs {
  std::optional<int> k;
  std::optional<int> l;
  std::optional<int> order;
};

struct TableArgs {
  int min_n = 2;
  int max_n = 6;
};

struct CutArgs {
  std::string input = "-";
  bool exhaustive = false;
};

struct RatioArgs {
  std::string tree;
  int n_min = 0;
  int n_max = 0;
  std::string variant = "b";
  std::string source = "registry";
  int kind = 0;
  double c = 0.75;
  double p = 0.5;
  int k = 8;
  int host_n = 32;
  bool x0 = false;
};

struct CacheArgs {
  std::string action;  // list | verify | prune
};

// Each command writes its report to `out` and returns an exit code. Library
// exceptions propagate to main, which maps them to exit codes.
int cmd_solve(const SolveArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_lookup(const LookupArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_verify_construction(const VerifyArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_family(const FamilyArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_table(const TableArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_cut(const CutArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_ratio(const RatioArgs& args, const RunConfig& cfg, std::ostream& out);
int cmd_cache(const CacheArgs& args, const RunConfig& cfg, std::ostream& out);

}  // namespace workbench
