#include "bturan/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "bturan/embedder.hpp"
#include "bturan/error.hpp"

namespace bturan {

namespace {

struct BipartiteOps {
  using Graph = BipartiteGraph;
  using EdgeT = BiEdge;

  std::span<const Pattern> members;

  std::optional<std::vector<BiEdge>> find_copy(const Graph& g) const {
    auto hit = find_family_embedding(g, members);
    if (!hit) return std::nullopt;
    return edge_image(members[hit->first], hit->second);
  }
  static void remove(Graph& g, const BiEdge& e) { g.remove_edge(e.left, e.right); }
  static std::string code(const Graph& g) { return canonical_code(g).bytes(); }
  static bool connected(const Graph& g) { return is_connected(g); }
};

struct GeneralOps {
  using Graph = GeneralGraph;
  using EdgeT = Edge;

  const Pattern* pattern = nullptr;

  std::optional<std::vector<Edge>> find_copy(const Graph& g) const {
    auto hit = find_embedding(g, *pattern);
    if (!hit) return std::nullopt;
    std::vector<Edge> out;
    for (const auto& e : pattern->edges()) {
      int u = (*hit)[e.u], v = (*hit)[e.v];
      if (u > v) std::swap(u, v);
      out.push_back({u, v});
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  static void remove(Graph& g, const Edge& e) { g.remove_edge(e.u, e.v); }
  static std::string code(const Graph& g) { return canonical_code(g).bytes(); }
  static bool connected(const Graph& g) { return is_connected(g); }
};

struct Aborted {};

// f(G) = most edges of an F-free (spanning-connected when required) subgraph
// of G, or -1 when there is none. Every memo entry is a true statement about
// f, so entries are shared freely between threads and thresholds.
struct Outcome {
  long long value = -1;
  bool exact = false;
};

class Memo {
 public:
  explicit Memo(std::size_t capacity) : per_shard_(std::max<std::size_t>(16, capacity / kShards)) {}

  std::optional<Outcome> get(const std::string& key) {
    auto& s = shards_[std::hash<std::string>{}(key) % kShards];
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, Outcome o) {
    auto& s = shards_[std::hash<std::string>{}(key) % kShards];
    std::lock_guard lock(s.mu);
    auto [it, fresh] = s.map.try_emplace(key, o);
    if (!fresh) {
      auto& old = it->second;
      if (old.exact) return;
      if (o.exact || o.value < old.value) old = o;
      return;
    }
    if (s.map.size() > per_shard_) {
      s.map.clear();
      s.map.emplace(key, o);
    }
  }

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_map<std::string, Outcome> map;
  };
  std::size_t per_shard_;
  std::array<Shard, kShards> shards_;
};

template <class Ops>
class Engine {
 public:
  using Graph = typename Ops::Graph;

  Engine(Ops ops, bool connected_only, long long min_edges, const SolverConfig& cfg)
      : ops_(std::move(ops)), connected_only_(connected_only), min_edges_(min_edges), budget_(cfg.node_budget),
        memo_(cfg.memo_capacity) {}

  Outcome search(const Graph& g, long long t) {
    if (abort_.load(std::memory_order_relaxed)) throw Aborted{};
    const long long e = g.edge_count();
    if (e <= t || e < min_edges_) return {std::min<long long>(e, t), false};
    if (connected_only_ && !Ops::connected(g)) return {-1, true};
    const auto key = Ops::code(g);
    long long cap = e;
    if (auto m = memo_.get(key)) {
      if (m->exact || m->value <= t) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return *m;
      }
      cap = m->value;
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      abort_.store(true);
      throw Aborted{};
    }
    auto copy = ops_.find_copy(g);
    if (!copy) {
      record_leaf(g);
      const Outcome o{e, true};
      memo_.put(key, o);
      return o;
    }
    const long long ub = std::min(cap, e - packing(g, *copy));
    if (ub <= t || ub < min_edges_) {
      const Outcome o{ub < min_edges_ ? -1 : ub, ub < min_edges_};
      memo_.put(key, o);
      return o;
    }
    long long best_exact = -2, best_upper = -2;
    for (const auto& edge : *copy) {
      Graph h = g;
      Ops::remove(h, edge);
      const long long shared = use_global_ ? global_.load(std::memory_order_relaxed) : t;
      const long long bar = std::max({t, best_exact, shared});
      const auto r = search(h, bar);
      if (r.exact)
        best_exact = std::max(best_exact, r.value);
      else
        best_upper = std::max(best_upper, r.value);
    }
    Outcome o;
    if (best_exact >= best_upper) {
      o = {best_exact, true};
    } else {
      o = {std::min(best_upper, ub), false};
    }
    memo_.put(key, o);
    return o;
  }

  // Deterministic descent to the first extremal leaf in branching order.
  Graph certificate(Graph g, long long v) {
    use_global_ = false;
    while (true) {
      auto copy = ops_.find_copy(g);
      if (!copy) return g;
      bool moved = false;
      for (const auto& edge : *copy) {
        Graph h = g;
        Ops::remove(h, edge);
        const auto r = search(h, v - 1);
        if (r.exact && r.value == v) {
          g = std::move(h);
          moved = true;
          break;
        }
      }
      if (!moved) throw std::logic_error("certificate descent lost the optimum");
    }
  }

  void enumerate(const Graph& g, long long v, std::map<std::string, Graph>& out, std::unordered_set<std::string>& seen) {
    if (abort_.load(std::memory_order_relaxed)) throw Aborted{};
    const long long e = g.edge_count();
    if (e < v) return;
    if (connected_only_ && !Ops::connected(g)) return;
    auto key = Ops::code(g);
    if (!seen.insert(key).second) return;
    if (auto m = memo_.get(key); m && m->value < v) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      abort_.store(true);
      throw Aborted{};
    }
    auto copy = ops_.find_copy(g);
    if (!copy) {
      if (e == v) out.emplace(std::move(key), g);
      return;
    }
    if (e - packing(g, *copy) < v) return;
    for (const auto& edge : *copy) {
      Graph h = g;
      Ops::remove(h, edge);
      enumerate(h, v, out, seen);
    }
  }

  void raise_global(long long v) {
    long long cur = global_.load();
    while (v > cur && !global_.compare_exchange_weak(cur, v)) {
    }
  }
  long long global() const { return global_.load(); }

  std::optional<Graph> best_leaf() {
    std::lock_guard lock(leaf_mu_);
    return best_leaf_;
  }
  void offer_leaf(const Graph& g) { record_leaf(g); }

  const Ops& ops() const { return ops_; }
  std::uint64_t nodes() const { return nodes_.load(); }
  std::uint64_t hits() const { return hits_.load(); }

 private:
  // Edge-disjoint copies, found greedily starting with `first`: each needs its own deletion.
  long long packing(const Graph& g, const std::vector<typename Ops::EdgeT>& first) const {
    Graph h = g;
    long long count = 0;
    std::optional<std::vector<typename Ops::EdgeT>> copy = first;
    while (copy) {
      ++count;
      for (const auto& edge : *copy) Ops::remove(h, edge);
      copy = ops_.find_copy(h);
    }
    return count;
  }

  void record_leaf(const Graph& g) {
    const long long e = g.edge_count();
    if (connected_only_ && !Ops::connected(g)) return;
    std::lock_guard lock(leaf_mu_);
    if (!best_leaf_ || e > best_leaf_->edge_count()) best_leaf_ = g;
    raise_global(e);
  }

  Ops ops_;
  bool connected_only_;
  long long min_edges_;
  std::uint64_t budget_;
  Memo memo_;
  std::atomic<long long> global_{-1};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<bool> abort_{false};
  bool use_global_ = true;
  std::mutex leaf_mu_;
  std::optional<Graph> best_leaf_;
};

// Splits the root into independent subproblems; f(root) is the best of them.
template <class Ops>
std::vector<typename Ops::Graph> frontier(Engine<Ops>& engine, const typename Ops::Graph& root, std::size_t want,
                                          bool connected_only) {
  using Graph = typename Ops::Graph;
  std::vector<Graph> level{root};
  for (int depth = 0; depth < 6 && level.size() < want; ++depth) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    bool grew = false;
    for (const auto& g : level) {
      auto copy = engine.ops().find_copy(g);
      if (!copy) {
        engine.offer_leaf(g);
        continue;
      }
      grew = true;
      for (const auto& edge : *copy) {
        Graph h = g;
        Ops::remove(h, edge);
        if (connected_only && !Ops::connected(h)) continue;
        if (seen.insert(Ops::code(h)).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
    if (!grew) break;
  }
  return level;
}

// Runs the search from `root` with threshold `t`; returns the root outcome.
template <class Ops>
Outcome run_search(Engine<Ops>& engine, const typename Ops::Graph& root, long long t, int threads, bool connected_only) {
  engine.raise_global(t);
  if (threads <= 1) {
    // Children are cut at the running best, so a non-exact root bound never exceeds it.
    auto r = engine.search(root, t);
    if (r.exact) engine.raise_global(r.value);
    const long long g = engine.global();
    return {g, g > t};
  }
  const auto parts = frontier(engine, root, static_cast<std::size_t>(threads) * 8, connected_only);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  std::mutex err_mu;
  std::exception_ptr error;
  auto work = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < parts.size();) {
        auto r = engine.search(parts[i], engine.global());
        if (r.exact) engine.raise_global(r.value);
      }
    } catch (const Aborted&) {
      aborted = true;
    } catch (...) {
      std::lock_guard lock(err_mu);
      error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  if (aborted) throw Aborted{};
  const long long g = engine.global();
  return {g, g > t};
}

std::vector<Pattern> family_members(const PatternFamily& f) { return f.members(); }

}  // namespace

SolveResult solve(int a, int b, const PatternFamily& f, const SolverConfig& cfg) {
  if (a < 1 || b < 1 || a > kMaxPartSize || b > kMaxPartSize) throw InvalidArgument("host parts must be in [1, 64]");
  if (cfg.threads < 1 || cfg.node_budget == 0 || cfg.memo_capacity == 0) throw InvalidArgument("solver budgets must be positive");
  const bool bc = cfg.variant == Variant::BC;
  if (bc && f.is_single() && !exbc_defined(f.single()))
    throw InfeasibleQuery("connected variant undefined for " + f.display_name());

  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.experimental = bc && a != b;
  const auto members = family_members(f);
  const auto finish = [&](SolveResult& r) {
    r.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  const auto host = BipartiteGraph::complete(a, b);
  if (!f.fits(a, b)) {
    res.degenerate = true;
    res.value = static_cast<long long>(a) * b;
    res.certificate = host;
    if (cfg.enumerate_extremal) res.all_extremal.emplace().emplace_back(canonical_code(host), host);
    return finish(res);
  }

  const long long min_edges = bc ? a + b - 1 : 0;
  Engine<BipartiteOps> engine(BipartiteOps{members}, bc, min_edges, cfg);

  long long t = bc ? a + b - 2 : -1;
  std::optional<BipartiteGraph> seed;
  if (cfg.seed_from_registry) {
    try {
      const auto known = lookup(f, a, b, cfg.variant);
      if (known.witness) {
        auto g = build_construction(*known.witness);
        if (g.left_size() != a) g = g.transposed();
        if (g.left_size() == a && g.right_size() == b && is_family_free(g, members) && (!bc || is_connected(g))) {
          t = std::max<long long>(t, g.edge_count() - 1);
          seed = g;
          engine.offer_leaf(g);
        }
      }
    } catch (const InfeasibleQuery&) {
    }
  }

  try {
    const auto r = run_search(engine, host, t, cfg.threads, bc);
    if (!r.exact || r.value <= t) {
      res.status = SolveStatus::NoConnectedHost;
      res.value = -1;
      res.certificate = BipartiteGraph(a, b);
      return finish(res);
    }
    res.value = r.value;
    res.certificate = engine.certificate(host, r.value);
    if (res.certificate.edge_count() != r.value || !is_family_free(res.certificate, members) ||
        (bc && !is_connected(res.certificate)))
      throw std::logic_error("solver certificate failed re-verification");
    if (cfg.enumerate_extremal) {
      std::map<std::string, BipartiteGraph> found;
      std::unordered_set<std::string> seen;
      engine.enumerate(host, r.value, found, seen);
      auto& list = res.all_extremal.emplace();
      for (auto& [code, g] : found) list.emplace_back(CanonicalCode(code), std::move(g));
    }
  } catch (const Aborted&) {
    res.status = SolveStatus::Inconclusive;
    auto leaf = engine.best_leaf();
    if (leaf) {
      res.value = leaf->edge_count();
      res.certificate = *leaf;
    } else {
      res.value = -1;
      res.certificate = BipartiteGraph(a, b);
    }
  }
  res.stats.nodes = engine.nodes();
  res.stats.memo_hits = engine.hits();
  return finish(res);
}

SolveResult enumerate_extremal(int a, int b, const PatternFamily& f, Variant variant, SolverConfig cfg) {
  cfg.variant = variant;
  cfg.enumerate_extremal = true;
  return solve(a, b, f, cfg);
}

long long solve_general(int n, const Pattern& p, const SolverConfig& cfg) {
  if (n < 1 || n > kMaxGeneralOrder)
    throw InvalidArgument("general solver supports 1 <= n <= " + std::to_string(kMaxGeneralOrder));
  if (p.vertex_count() > n) return static_cast<long long>(n) * (n - 1) / 2;
  Engine<GeneralOps> engine(GeneralOps{&p}, false, 0, cfg);
  try {
    return run_search(engine, GeneralGraph::complete(n), -1, cfg.threads, false).value;
  } catch (const Aborted&) {
    throw ResourceError("general solver node budget exhausted at n = " + std::to_string(n));
  }
}

}  // namespace bturan
