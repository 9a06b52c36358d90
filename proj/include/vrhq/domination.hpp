#ifndef VRHQ_DOMINATION_HPP
#define VRHQ_DOMINATION_HPP

// Total domination: S is total dominating when every vertex (members of S
// included) has a neighbor in S. gamma_t is the least such |S|.
//
// The exact solver treats the problem as covering V by open neighborhoods
// N(x) and runs a depth-first branch and bound:
//   * branch on the undominated vertex with the fewest remaining dominators,
//     trying its dominators in decreasing order of residual coverage; each
//     tried dominator is excluded from later siblings;
//   * prune with the better of two residual bounds, both generalizing m/Delta:
//       - sum over undominated u of 1 / (best residual coverage among u's dominators),
//       - a greedy packing of undominated vertices with disjoint dominator sets.

#include "vrhq/bitset.hpp"
#include "vrhq/errors.hpp"
#include "vrhq/graph.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace vrhq {

/// Sorted vertex indices of an ambient graph.
using VertexSet = std::vector<Vertex>;

enum class SolverStatus { exact, bounds_only };

struct DominationResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> exact;
  VertexSet witness;  ///< achieves `upper`
  SolverStatus status = SolverStatus::bounds_only;
  bool time_limit_hit = false;
  std::uint64_t nodes = 0;
};

struct SolverOptions {
  std::optional<std::chrono::milliseconds> time_limit{};
  /// Caller asserts the graph is vertex-transitive, so vertex 0 may be forced into S.
  bool vertex_transitive = false;
  unsigned threads = 1;
};

namespace detail {

inline void require_total_domination_domain(const Graph& g) {
  if (g.order() == 0) throw InvalidVertex("graph has no vertices");
  if (g.has_isolated_vertex()) throw IsolatedVertex("total domination is undefined with isolated vertices");
}

} // namespace detail

inline bool is_total_dominating(const Graph& g, const VertexSet& s) {
  detail::require_total_domination_domain(g);
  DynamicBitset dominated(g.order());
  for (auto x : s) {
    if (x >= g.order()) throw InvalidVertex("vertex " + std::to_string(x) + " out of range");
    dominated |= g.neighbors(x);
  }
  return dominated.count() == g.order();
}

/// ceil(m / Delta), a lower bound on gamma_t.
inline std::size_t trivial_lower_bound(const Graph& g) {
  detail::require_total_domination_domain(g);
  return (g.order() + g.max_degree() - 1) / g.max_degree();
}

/// Greedy max-coverage total dominating set.
inline VertexSet greedy_upper_bound(const Graph& g) {
  detail::require_total_domination_domain(g);
  const auto m = g.order();
  DynamicBitset dominated(m);
  DynamicBitset chosen(m);
  while (dominated.count() < m) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex x = 0; x < m; ++x) {
      if (chosen.test(x)) continue;
      auto gain = g.degree(x) - intersection_count(g.neighbors(x), dominated);
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    chosen.set(best);
    dominated |= g.neighbors(best);
  }
  // Repair pass: a chosen vertex without a chosen neighbor gets its
  // highest-degree neighbor. Coverage above already rules this out, but the
  // pass keeps the result valid if the selection rule ever changes.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto x : chosen.to_vector()) {
      if (intersects(g.neighbors(x), chosen)) continue;
      Vertex best = g.neighbors(x).find_first();
      g.neighbors(x).for_each([&](Vertex y) {
        if (g.degree(y) > g.degree(best)) best = y;
      });
      chosen.set(best);
      changed = true;
    }
  }
  return chosen.to_vector();
}

/// Exhaustive oracle: first total dominating subset by increasing cardinality. m <= 20.
inline std::size_t gamma_t_exhaustive(const Graph& g) {
  detail::require_total_domination_domain(g);
  const auto m = g.order();
  if (m > 20) throw TooLarge("exhaustive search is limited to 20 vertices");
  std::vector<std::uint32_t> nbr(m, 0);
  for (Vertex u = 0; u < m; ++u)
    g.neighbors(u).for_each([&](Vertex v) { nbr[u] |= std::uint32_t{1} << v; });
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  for (std::size_t k = 1; k <= m; ++k) {
    // Gosper's hack over all k-subsets of m bits.
    std::uint32_t s = (std::uint32_t{1} << k) - 1;
    while (s <= full) {
      std::uint32_t dom = 0;
      for (std::uint32_t t = s; t; t &= t - 1) dom |= nbr[static_cast<std::size_t>(std::countr_zero(t))];
      if (dom == full) return k;
      const std::uint32_t c = s & (~s + 1);
      const std::uint32_t r = s + c;
      if (r == 0 || r > full) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return m;  // unreachable: V itself dominates when there are no isolated vertices
}

/// Disjoint union of `pairs` components: two adjacent centers, each with
/// delta - 1 private leaves. Order pairs * 2 * delta, Delta = delta,
/// gamma_t = 2 * pairs = m / Delta.
inline Graph tight_example_graph(std::size_t delta, std::size_t pairs) {
  if (delta < 2 || pairs < 1) throw InvalidVertex("tight example needs delta >= 2 and pairs >= 1");
  GraphBuilder b(pairs * 2 * delta);
  for (std::size_t p = 0; p < pairs; ++p) {
    const Vertex base = p * 2 * delta;
    const Vertex a = base, c = base + 1;
    b.add_edge(a, c);
    for (std::size_t l = 0; l + 1 < delta; ++l) {
      b.add_edge(a, base + 2 + l);
      b.add_edge(c, base + 2 + (delta - 1) + l);
    }
  }
  return std::move(b).build();
}

namespace detail {

struct SharedSearchState {
  std::atomic<std::size_t> incumbent;
  std::mutex witness_mutex;
  VertexSet witness;
  std::atomic<bool> aborted{false};
  std::atomic<std::uint64_t> nodes{0};
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void offer(const std::vector<Vertex>& chosen) {
    std::lock_guard lock(witness_mutex);
    if (chosen.size() < incumbent.load()) {
      witness.assign(chosen.begin(), chosen.end());
      std::sort(witness.begin(), witness.end());
      incumbent.store(chosen.size());
    }
  }
};

struct NodeEvaluation {
  std::size_t lower = 0;        ///< additional vertices still needed
  Vertex branch_vertex = 0;
  bool complete = false;        ///< everything dominated
  bool infeasible = false;      ///< some undominated vertex has no allowed dominator
};

template <class Set>
class TotalDominationSearch {
public:
  TotalDominationSearch(const Graph& g, SharedSearchState& shared)
      : m_(g.order()), shared_(shared), all_(DynamicBitset::full(g.order())), coverage_(g.order(), 0) {
    neighbors_.reserve(m_);
    for (Vertex x = 0; x < m_; ++x) neighbors_.emplace_back(g.neighbors(x));
  }

  Set empty_set() const { return Set(DynamicBitset(m_)); }
  Set full_set() const { return all_; }
  const Set& neighbors(Vertex x) const { return neighbors_[x]; }

  NodeEvaluation evaluate(const Set& dominated, const Set& allowed) {
    NodeEvaluation ev;
    Set undominated = all_;
    undominated.subtract(dominated);
    if (undominated.none()) {
      ev.complete = true;
      return ev;
    }
    allowed.for_each([&](Vertex x) { coverage_[x] = static_cast<std::uint32_t>(intersection_count(neighbors_[x], undominated)); });

    double fractional = 0.0;
    std::size_t fewest = static_cast<std::size_t>(-1);
    packing_order_.clear();
    undominated.for_each([&](Vertex u) {
      Set dominators = neighbors_[u] & allowed;
      std::size_t count = 0;
      std::uint32_t best = 0;
      dominators.for_each([&](Vertex x) {
        ++count;
        best = std::max(best, coverage_[x]);
      });
      if (count == 0) {
        ev.infeasible = true;
        return;
      }
      fractional += 1.0 / best;
      packing_order_.emplace_back(count, u);
      if (count < fewest) {
        fewest = count;
        ev.branch_vertex = u;
      }
    });
    if (ev.infeasible) return ev;

    const auto fractional_bound = static_cast<std::size_t>(std::ceil(fractional - 1e-9));

    std::sort(packing_order_.begin(), packing_order_.end());
    Set used = empty_set();
    std::size_t packing_bound = 0;
    for (auto [count, u] : packing_order_) {
      Set dominators = neighbors_[u] & allowed;
      if (intersects(dominators, used)) continue;
      used |= dominators;
      ++packing_bound;
    }
    ev.lower = std::max(fractional_bound, packing_bound);
    return ev;
  }

  /// Dominators of `u` in `allowed`, best residual coverage first. Valid right after evaluate().
  std::vector<Vertex> branch_candidates(Vertex u, const Set& allowed) const {
    std::vector<Vertex> cand;
    (neighbors_[u] & allowed).for_each([&](Vertex x) { cand.push_back(x); });
    std::stable_sort(cand.begin(), cand.end(),
                     [&](Vertex a, Vertex b) { return coverage_[a] > coverage_[b]; });
    return cand;
  }

  void search(const Set& dominated, Set& allowed, std::vector<Vertex>& chosen) {
    if (shared_.aborted.load(std::memory_order_relaxed)) return;
    if ((++local_nodes_ & 1023u) == 0) flush_and_check_time();

    auto ev = evaluate(dominated, allowed);
    if (ev.complete) {
      shared_.offer(chosen);
      return;
    }
    if (ev.infeasible || chosen.size() + ev.lower >= shared_.incumbent.load(std::memory_order_relaxed)) return;

    const auto candidates = branch_candidates(ev.branch_vertex, allowed);
    for (auto x : candidates) {
      if (chosen.size() + 1 >= shared_.incumbent.load(std::memory_order_relaxed)) break;
      allowed.reset(x);
      chosen.push_back(x);
      search(dominated | neighbors_[x], allowed, chosen);
      chosen.pop_back();
    }
    for (auto x : candidates) allowed.set(x);
  }

  void flush_nodes() {
    shared_.nodes.fetch_add(local_nodes_ & 1023u, std::memory_order_relaxed);
    local_nodes_ &= ~std::uint64_t{1023};
  }

private:
  void flush_and_check_time() {
    shared_.nodes.fetch_add(1024, std::memory_order_relaxed);
    if (shared_.deadline && std::chrono::steady_clock::now() >= *shared_.deadline)
      shared_.aborted.store(true, std::memory_order_relaxed);
  }

  std::size_t m_;
  SharedSearchState& shared_;
  std::vector<Set> neighbors_;
  Set all_;
  std::vector<std::uint32_t> coverage_;
  std::vector<std::pair<std::size_t, Vertex>> packing_order_;
  std::uint64_t local_nodes_ = 0;
};

template <class Set>
DominationResult solve_total_domination(const Graph& g, const SolverOptions& options) {
  DominationResult result;

  SharedSearchState shared;
  auto greedy = greedy_upper_bound(g);
  shared.incumbent.store(greedy.size());
  shared.witness = greedy;
  if (options.time_limit) shared.deadline = std::chrono::steady_clock::now() + *options.time_limit;

  TotalDominationSearch<Set> root(g, shared);
  Set dominated = root.empty_set();
  Set allowed = root.full_set();
  std::vector<Vertex> chosen;
  if (options.vertex_transitive) {
    // Translating an optimal set by an automorphism keeps it optimal, so one contains vertex 0.
    chosen.push_back(0);
    dominated |= root.neighbors(0);
    allowed.reset(0);
  }

  auto ev = root.evaluate(dominated, allowed);
  std::size_t proven_lower = std::max(trivial_lower_bound(g), chosen.size() + ev.lower);

  // Root children become independent tasks: task i takes candidate i and
  // excludes candidates 0..i-1. Threads pull tasks in order.
  std::vector<Vertex> candidates;
  if (ev.complete) {
    shared.offer(chosen);
  } else if (!ev.infeasible && proven_lower < shared.incumbent.load()) {
    candidates = root.branch_candidates(ev.branch_vertex, allowed);
  }

  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    TotalDominationSearch<Set> search(g, shared);
    while (true) {
      const auto i = next_task.fetch_add(1);
      if (i >= candidates.size() || shared.aborted.load()) break;
      if (chosen.size() + 1 >= shared.incumbent.load()) break;
      Set task_allowed = allowed;
      for (std::size_t j = 0; j <= i; ++j) task_allowed.reset(candidates[j]);
      auto task_chosen = chosen;
      task_chosen.push_back(candidates[i]);
      search.search(dominated | search.neighbors(candidates[i]), task_allowed, task_chosen);
    }
    search.flush_nodes();
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || candidates.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  result.nodes = shared.nodes.load() + 1;
  result.witness = shared.witness;
  result.upper = shared.incumbent.load();
  result.time_limit_hit = shared.aborted.load();
  if (result.time_limit_hit) {
    result.status = SolverStatus::bounds_only;
    result.lower = std::min(proven_lower, result.upper);
    if (result.lower == result.upper) {
      result.status = SolverStatus::exact;
      result.exact = result.upper;
    }
  } else {
    result.status = SolverStatus::exact;
    result.exact = result.upper;
    result.lower = result.upper;
  }
  return result;
}

} // namespace detail

/// Branch-and-bound gamma_t. Without a time limit the result is always Exact.
inline DominationResult exact_gamma_t(const Graph& g, const SolverOptions& options = {}) {
  detail::require_total_domination_domain(g);
  const auto m = g.order();
  if (m <= 64) return detail::solve_total_domination<FixedBitset<1>>(g, options);
  if (m <= 128) return detail::solve_total_domination<FixedBitset<2>>(g, options);
  if (m <= 256) return detail::solve_total_domination<FixedBitset<4>>(g, options);
  return detail::solve_total_domination<DynamicBitset>(g, options);
}

} // namespace vrhq

#endif // VRHQ_DOMINATION_HPP
