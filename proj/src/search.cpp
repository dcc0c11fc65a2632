#include "apmono/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>

#include <omp.h>

namespace apmono {
namespace {

constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

struct WeightedMask {
  std::uint64_t mask;
  std::uint64_t weight;
};

// Lowers `target` to `value` if smaller; other threads only ever lower it too.
void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Depth-first prefix extension over colorings of Z_n, positions assigned in
// increasing order. A progression is scored when its largest position is
// assigned. Prefixes that are visibly not lexicographically least in their
// orbit are dropped, so each orbit is reached through its canonical form only.
class CyclicSearcher {
 public:
  CyclicSearcher(std::size_t n, std::size_t k, MonoFilter filter, const SymmetryGroup& sym)
      : n_(n), completes_at_(n) {
    std::vector<std::map<std::uint64_t, std::uint64_t>> grouped(n);
    for (std::size_t d = 0; d < n; ++d) {
      if (filter == MonoFilter::NonDegenerateOnly && is_degenerate_difference(d, n, k)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        std::uint64_t mask = 0;
        std::size_t top = 0;
        for (std::size_t j = 0; j < k; ++j) {
          std::size_t v = (a + j * d) % n;
          mask |= std::uint64_t{1} << v;
          top = std::max(top, v);
        }
        ++grouped[top][mask];
      }
    }
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& [mask, w] : grouped[v]) completes_at_[v].push_back({mask, w});

    for (const auto& g : group_elements(n, sym)) {
      if (g.m == 1 % n && g.s == 0 && !g.flip) continue;  // identity
      Perm p;
      p.flip = g.flip;
      p.target.resize(n);
      for (std::size_t v = 0; v < n; ++v) p.target[v] = static_cast<std::uint8_t>(g.point(v, n));
      perms_.push_back(std::move(p));
    }
  }

  struct Result {
    std::uint64_t best = kUnbounded;
    std::vector<std::uint64_t> leaves;  // colorings with count <= best at the time they were found
    std::vector<std::uint64_t> leaf_counts;
    std::uint64_t nodes = 0;
  };

  // Count added by assigning position v given bits 0..v of `colors`.
  std::uint64_t delta(std::uint64_t colors, std::size_t v) const {
    std::uint64_t add = 0;
    for (const auto& wm : completes_at_[v]) {
      std::uint64_t hit = colors & wm.mask;
      if (hit == 0 || hit == wm.mask) add += wm.weight;
    }
    return add;
  }

  // False when some group element maps the known prefix 0..v to something
  // lexicographically smaller.
  bool prefix_may_be_canonical(std::uint64_t colors, std::size_t v) const {
    for (const auto& p : perms_) {
      for (std::size_t j = 0; j <= v; ++j) {
        std::size_t src = p.target[j];
        if (src > v) break;
        std::uint64_t img = ((colors >> src) & 1U) ^ static_cast<std::uint64_t>(p.flip);
        std::uint64_t own = (colors >> j) & 1U;
        if (img < own) return false;
        if (img > own) break;
      }
    }
    return true;
  }

  // Extends a prefix of length `len` with partial count `partial`. `bound`
  // is shared; branches whose partial count exceeds it are cut, ties kept.
  void extend(std::uint64_t colors, std::size_t len, std::uint64_t partial, std::atomic<std::uint64_t>& bound,
              Result& out) const {
    ++out.nodes;
    if (len == n_) {
      if (partial <= bound.load(std::memory_order_relaxed)) {
        atomic_min(bound, partial);
        out.leaves.push_back(colors);
        out.leaf_counts.push_back(partial);
        out.best = std::min(out.best, partial);
      }
      return;
    }
    for (std::uint64_t bit : {0, 1}) {
      std::uint64_t next = colors | (bit << len);
      if (!prefix_may_be_canonical(next, len)) continue;
      std::uint64_t p = partial + delta(next, len);
      if (p > bound.load(std::memory_order_relaxed)) continue;
      extend(next, len + 1, p, bound, out);
    }
  }

  // Prefixes of length `depth` that survive the canonical filter.
  void frontier(std::uint64_t colors, std::size_t len, std::uint64_t partial, std::size_t depth,
                std::vector<std::pair<std::uint64_t, std::uint64_t>>& out, std::uint64_t& nodes) const {
    ++nodes;
    if (len == depth) {
      out.emplace_back(colors, partial);
      return;
    }
    for (std::uint64_t bit : {0, 1}) {
      std::uint64_t next = colors | (bit << len);
      if (!prefix_may_be_canonical(next, len)) continue;
      frontier(next, len + 1, partial + delta(next, len), depth, out, nodes);
    }
  }

  std::size_t n() const { return n_; }

 private:
  struct Perm {
    std::vector<std::uint8_t> target;
    bool flip = false;
  };

  std::size_t n_;
  std::vector<std::vector<WeightedMask>> completes_at_;
  std::vector<Perm> perms_;
};

Coloring from_word(std::uint64_t colors, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t v = 0; v < n; ++v) bits[v] = (colors >> v) & 1U;
  return Coloring(GroupKind::Cyclic, std::move(bits));
}

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Runs the pruned search with an initial bound. Leaves above the final
// minimum are discarded.
SearchReport run_pruned(std::size_t n, std::size_t k, MonoFilter filter, const SymmetryGroup& sym, int workers,
                        std::uint64_t initial_bound) {
  CyclicSearcher searcher(n, k, filter, sym);
  std::atomic<std::uint64_t> bound{initial_bound};

  std::vector<std::pair<std::uint64_t, std::uint64_t>> tasks;
  std::uint64_t nodes = 0;
  const std::size_t depth = std::min<std::size_t>(n, 12);
  searcher.frontier(0, 0, 0, depth, tasks, nodes);

  std::vector<CyclicSearcher::Result> per_task(tasks.size());
  const auto ntasks = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
  for (std::int64_t t = 0; t < ntasks; ++t) {
    const auto& [colors, partial] = tasks[static_cast<std::size_t>(t)];
    if (partial > bound.load(std::memory_order_relaxed)) continue;
    // extend() counts the task root again; the frontier already did.
    searcher.extend(colors, depth, partial, bound, per_task[static_cast<std::size_t>(t)]);
    --per_task[static_cast<std::size_t>(t)].nodes;
  }

  SearchReport report;
  report.n = n;
  report.k = k;
  report.symmetry = sym;
  report.filter = filter;
  report.exhaustive = true;
  report.nodes_explored = nodes;
  report.minimum_count = bound.load();
  std::set<Coloring> witnesses;
  for (const auto& r : per_task) {
    report.nodes_explored += r.nodes;
    for (std::size_t i = 0; i < r.leaves.size(); ++i)
      if (r.leaf_counts[i] == report.minimum_count) witnesses.insert(from_word(r.leaves[i], n));
  }
  report.witnesses.assign(witnesses.begin(), witnesses.end());
  return report;
}

SearchReport run_naive(std::size_t n, std::size_t k, MonoFilter filter, const SymmetryGroup& sym) {
  const auto elements = group_elements(n, sym);
  SearchReport report;
  report.n = n;
  report.k = k;
  report.symmetry = sym;
  report.filter = filter;
  report.minimum_count = kUnbounded;
  std::set<Coloring> witnesses;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t word = 0; word < total; ++word) {
    Coloring c = from_word(word, n);
    std::uint64_t count = count_mono_cyclic(c, k, filter);
    ++report.nodes_explored;
    if (count > report.minimum_count) continue;
    if (count < report.minimum_count) {
      report.minimum_count = count;
      witnesses.clear();
    }
    witnesses.insert(canonical_form(c, elements));
  }
  report.witnesses.assign(witnesses.begin(), witnesses.end());
  report.exhaustive = true;
  return report;
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > 64) throw CapExceeded("searches over Z_n support n <= 64");
  if (n > cap)
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds the feasibility cap " +
                      std::to_string(cap));
}

}  // namespace

SearchReport exhaustive_min_cyclic(std::size_t n, std::size_t k, const CyclicSearchOptions& opts) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (opts.mode == SearchMode::Naive) {
    check_cap(n, opts.cap ? opts.cap : kDefaultNaiveCap, "naive search");
    return run_naive(n, k, opts.filter, opts.sym);
  }
  check_cap(n, opts.cap ? opts.cap : kDefaultPrunedCap, "pruned search");
  return run_pruned(n, k, opts.filter, opts.sym, opts.workers, kUnbounded);
}

std::vector<Coloring> zero_mono_colorings(std::size_t n, std::size_t k, const SymmetryGroup& sym, int workers,
                                          std::size_t cap) {
  check_cap(n, cap ? cap : kDefaultPrunedCap, "zero-monochromatic search");
  SearchReport r = run_pruned(n, k, MonoFilter::NonDegenerateOnly, sym, workers, 0);
  if (r.minimum_count != 0) return {};
  return r.witnesses;
}

}  // namespace apmono
