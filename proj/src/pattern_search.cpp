#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <memory>

#include <omp.h>

#include "apmono/checkpoint.hpp"
#include "apmono/search.hpp"

namespace apmono {
namespace {

using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();
// Extra levels below the split that are checkpointed, so a task larger than
// one run's budget still makes progress across runs.
constexpr std::size_t kFineLevels = 12;
constexpr std::uint64_t kFineMinNodes = 4096;

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load(std::memory_order_relaxed);
  while (value < cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// Scores the increasing progressions whose last term is the newest position.
class PatternChecker {
 public:
  explicit PatternChecker(const PatternSet& p) : p_(p), k_(p.k()) {
    if (k_ < 2) throw std::invalid_argument("pattern length must be at least 2");
    const std::uint32_t full = (std::uint32_t{1} << k_) - 1;
    complement_closed_ = true;
    for (std::uint32_t code = 0; code <= full; ++code)
      if (p_.contains(code) && !p_.contains(~code & full)) complement_closed_ = false;
  }

  std::uint64_t delta(const std::uint8_t* bits, std::size_t v) const {
    std::uint64_t hits = 0;
    for (std::size_t d = 1; (k_ - 1) * d <= v; ++d) hits += p_.contains(code(bits, v, d));
    return hits;
  }

  bool completes_any(const std::uint8_t* bits, std::size_t v) const {
    for (std::size_t d = 1; (k_ - 1) * d <= v; ++d)
      if (p_.contains(code(bits, v, d))) return true;
    return false;
  }

  // With a complement-closed set the first position can be fixed to 0.
  std::uint8_t first_bit_limit() const { return complement_closed_ ? 0 : 1; }

 private:
  std::uint32_t code(const std::uint8_t* bits, std::size_t v, std::size_t d) const {
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < k_; ++j) c = (c << 1) | bits[v - (k_ - 1 - j) * d];
    return c;
  }

  const PatternSet& p_;
  std::size_t k_;
  bool complement_closed_ = false;
};

std::string to_string(const std::uint8_t* bits, std::size_t len) {
  std::string s(len, '0');
  for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<char>('0' + bits[i]);
  return s;
}

std::string joined_patterns(const PatternSet& p) {
  std::string s;
  for (const auto& pat : p.patterns()) s += (s.empty() ? "" : ",") + pat;
  return s;
}

Coloring interval_coloring(const std::string& s) { return parse_coloring(s, GroupKind::Interval, s.size()); }

// ---- pattern-free search -------------------------------------------------

struct FreeTask {
  std::vector<std::uint8_t> bits;
  std::vector<std::string> first_at;  // index = length; empty string = not reached
  std::uint64_t nodes = 0;
};

void free_dfs(const PatternChecker& pc, std::size_t len, std::size_t limit, FreeTask& task) {
  ++task.nodes;
  if (len > 0 && task.first_at[len].empty()) task.first_at[len] = to_string(task.bits.data(), len);
  if (len == limit) return;
  const std::uint8_t hi = len == 0 ? pc.first_bit_limit() : 1;
  for (std::uint8_t bit = 0; bit <= hi; ++bit) {
    task.bits[len] = bit;
    if (pc.completes_any(task.bits.data(), len)) continue;
    free_dfs(pc, len + 1, limit, task);
    if (!task.first_at[limit].empty()) return;  // every depth already has its first visit
  }
}

void free_frontier(const PatternChecker& pc, std::vector<std::uint8_t>& bits, std::size_t len, std::size_t depth,
                   std::vector<std::string>& first_at, std::vector<std::vector<std::uint8_t>>& tasks,
                   std::uint64_t& nodes) {
  ++nodes;
  if (len > 0 && first_at[len].empty()) first_at[len] = to_string(bits.data(), len);
  if (len == depth) {
    tasks.emplace_back(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(len));
    return;
  }
  const std::uint8_t hi = len == 0 ? pc.first_bit_limit() : 1;
  for (std::uint8_t bit = 0; bit <= hi; ++bit) {
    bits[len] = bit;
    if (pc.completes_any(bits.data(), len)) continue;
    free_frontier(pc, bits, len + 1, depth, first_at, tasks, nodes);
  }
}

// ---- minimum-count search ------------------------------------------------

struct SharedBudget {
  SearchBudget limits;
  Clock::time_point start = Clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  // Called every few thousand local nodes.
  bool exhausted(std::uint64_t add) {
    std::uint64_t total = nodes.fetch_add(add, std::memory_order_relaxed) + add;
    if (limits.max_nodes != 0 && total >= limits.max_nodes) stop = true;
    if (limits.max_time.count() != 0 && Clock::now() - start >= limits.max_time) stop = true;
    return stop.load(std::memory_order_relaxed);
  }
};

struct MinSearch {
  const PatternChecker& pc;
  std::size_t m;
  const std::vector<std::uint64_t>& minima;  // minima[len] proven for len < m
  std::atomic<std::uint64_t>& bound;
  SharedBudget& budget;
  CheckpointWriter* checkpoint;
  const std::map<std::string, std::uint64_t>* done = nullptr;  // snapshot from earlier runs
  std::size_t fine_depth = 0;  // subtrees down to this prefix length get their own done records

  struct Local {
    std::vector<std::uint8_t> bits;
    std::uint64_t nodes = 0;
    std::uint64_t pending = 0;
    bool aborted = false;
    std::uint64_t found = kUnbounded;
    std::string witness;
  };

  void dfs(std::size_t len, std::uint64_t partial, Local& loc) const {
    ++loc.nodes;
    if (++loc.pending == 4096) {
      if (budget.exhausted(loc.pending)) loc.aborted = true;
      loc.pending = 0;
    }
    if (loc.aborted || budget.stop.load(std::memory_order_relaxed)) {
      loc.aborted = true;
      return;
    }
    if (len == m) {
      if (partial < bound.load(std::memory_order_relaxed)) {
        atomic_min(bound, partial);
        if (partial < loc.found) {
          loc.found = partial;
          loc.witness = to_string(loc.bits.data(), m);
          if (checkpoint) checkpoint->record_found(m, partial, loc.witness);
        }
      }
      return;
    }
    const std::uint8_t hi = len == 0 ? pc.first_bit_limit() : 1;
    for (std::uint8_t bit = 0; bit <= hi; ++bit) {
      loc.bits[len] = bit;
      std::uint64_t p = partial + pc.delta(loc.bits.data(), len);
      if (p + minima[m - len - 1] >= bound.load(std::memory_order_relaxed)) continue;
      const bool fine = checkpoint && len + 1 <= fine_depth;
      if (fine && !done->empty() && done->count(to_string(loc.bits.data(), len + 1))) continue;
      const std::uint64_t before = loc.nodes;
      dfs(len + 1, p, loc);
      if (loc.aborted) return;
      if (fine && loc.nodes - before >= kFineMinNodes)
        checkpoint->record_done(m, to_string(loc.bits.data(), len + 1), bound.load());
    }
  }
};

struct Prefix {
  std::vector<std::uint8_t> bits;
  std::uint64_t partial = 0;
};

void min_frontier(const PatternChecker& pc, std::size_t m, const std::vector<std::uint64_t>& minima,
                  std::uint64_t bound, std::vector<std::uint8_t>& bits, std::size_t len, std::uint64_t partial,
                  std::size_t depth, std::vector<Prefix>& out, std::uint64_t& nodes) {
  ++nodes;
  if (len == depth) {
    out.push_back({std::vector<std::uint8_t>(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(len)), partial});
    return;
  }
  const std::uint8_t hi = len == 0 ? pc.first_bit_limit() : 1;
  for (std::uint8_t bit = 0; bit <= hi; ++bit) {
    bits[len] = bit;
    std::uint64_t p = partial + pc.delta(bits.data(), len);
    if (p + minima[m - len - 1] >= bound) continue;
    min_frontier(pc, m, minima, bound, bits, len + 1, p, depth, out, nodes);
  }
}

// Lexicographically first coloring of [m] with count == target, or empty if
// the node limit is hit first.
bool lex_first(const PatternChecker& pc, std::size_t m, const std::vector<std::uint64_t>& minima,
               std::uint64_t target, std::vector<std::uint8_t>& bits, std::size_t len, std::uint64_t partial,
               std::uint64_t& nodes_left) {
  if (nodes_left == 0) return false;
  --nodes_left;
  if (len == m) return partial == target;
  const std::uint8_t hi = len == 0 ? pc.first_bit_limit() : 1;
  for (std::uint8_t bit = 0; bit <= hi; ++bit) {
    bits[len] = bit;
    std::uint64_t p = partial + pc.delta(bits.data(), len);
    if (p + minima[m - len - 1] > target) continue;
    if (lex_first(pc, m, minima, target, bits, len + 1, p, nodes_left)) return true;
  }
  return false;
}

std::uint64_t count_string(const PatternSet& p, const std::string& s) {
  return count_frame_patterns(interval_coloring(s), p);
}

}  // namespace

std::vector<PatternSearchReport> pattern_free_max_interval(const PatternSet& p, std::size_t n_limit, int workers) {
  PatternChecker pc(p);
  std::vector<PatternSearchReport> reports;
  if (n_limit == 0) return reports;

  const std::size_t depth = std::min<std::size_t>(n_limit, 16);
  std::vector<std::string> first_at(n_limit + 1);
  std::vector<std::vector<std::uint8_t>> prefixes;
  std::vector<std::uint8_t> scratch(n_limit);
  std::uint64_t nodes = 0;
  free_frontier(pc, scratch, 0, depth, first_at, prefixes, nodes);

  std::vector<FreeTask> tasks(prefixes.size());
  const auto ntasks = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
  for (std::int64_t t = 0; t < ntasks; ++t) {
    auto& task = tasks[static_cast<std::size_t>(t)];
    task.bits.assign(n_limit, 0);
    std::copy(prefixes[static_cast<std::size_t>(t)].begin(), prefixes[static_cast<std::size_t>(t)].end(),
              task.bits.begin());
    task.first_at.assign(n_limit + 1, std::string());
    free_dfs(pc, depth, n_limit, task);
    --task.nodes;  // root already counted by the frontier
  }
  // Tasks are in lexicographic order of their prefixes, so the first task
  // reaching a length holds the lexicographically first coloring of it.
  for (const auto& task : tasks) {
    nodes += task.nodes;
    for (std::size_t len = depth + 1; len <= n_limit; ++len)
      if (first_at[len].empty() && !task.first_at[len].empty()) first_at[len] = task.first_at[len];
  }

  for (std::size_t len = 1; len <= n_limit; ++len) {
    PatternSearchReport r;
    r.n = len;
    r.nodes_explored = nodes;
    if (!first_at[len].empty()) {
      r.outcome = PatternOutcome::FreeColoringFound;
      r.witness = interval_coloring(first_at[len]);
      r.min_count = 0;
      r.lower_bound_proved = 0;
    } else {
      r.outcome = PatternOutcome::NoneExists;
      r.lower_bound_proved = 1;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

PatternMinResult min_pattern_count_interval(std::size_t n, const PatternSet& p, const PatternMinOptions& opts) {
  PatternChecker pc(p);
  PatternMinResult result;
  if (n == 0) return result;

  std::unique_ptr<CheckpointWriter> checkpoint;
  if (!opts.checkpoint_path.empty())
    checkpoint = std::make_unique<CheckpointWriter>(opts.checkpoint_path, joined_patterns(p), opts.split_depth);

  SharedBudget budget;
  budget.limits = opts.budget;
  std::vector<std::uint64_t> minima{0};
  std::string prev_witness;

  for (std::size_t m = 1; m <= n; ++m) {
    PatternSearchReport report;
    report.n = m;

    if (checkpoint && checkpoint->state().minima.count(m)) {
      const auto& rec = checkpoint->state().minima.at(m);
      if (count_string(p, rec.witness) != rec.value)
        throw std::runtime_error("checkpoint witness for [" + std::to_string(m) + "] does not match its count");
      minima.push_back(rec.value);
      prev_witness = rec.witness;
      report.min_count = report.lower_bound_proved = rec.value;
      report.witness = interval_coloring(rec.witness);
      report.outcome = rec.value == 0 ? PatternOutcome::FreeColoringFound : PatternOutcome::NoneExists;
      result.reports.push_back(std::move(report));
      continue;
    }

    // Upper bound: extend the previous witness by one position.
    std::string best_witness;
    std::uint64_t best = kUnbounded;
    for (char ch : {'0', '1'}) {
      std::string cand = prev_witness + ch;
      if (m == 1 && pc.first_bit_limit() == 0 && ch == '1') continue;
      std::uint64_t c = count_string(p, cand);
      if (c < best) {
        best = c;
        best_witness = cand;
      }
    }
    if (checkpoint && checkpoint->state().found.count(m))
      for (const auto& rec : checkpoint->state().found.at(m))
        if (rec.value < best && count_string(p, rec.witness) == rec.value) {
          best = rec.value;
          best_witness = rec.witness;
        }

    std::atomic<std::uint64_t> bound{best};
    const std::size_t depth = std::min(m, std::max<std::size_t>(opts.split_depth, 1));
    std::vector<Prefix> prefixes;
    std::vector<std::uint8_t> scratch(m);
    std::uint64_t nodes = 0;
    min_frontier(pc, m, minima, best, scratch, 0, 0, depth, prefixes, nodes);

    std::map<std::string, std::uint64_t> done_snapshot;
    if (checkpoint && checkpoint->state().done.count(m)) done_snapshot = checkpoint->state().done.at(m);
    const auto* done = &done_snapshot;

    MinSearch search{pc, m, minima, bound, budget, checkpoint.get(), done, std::min(m, depth + kFineLevels)};
    std::vector<MinSearch::Local> locals(prefixes.size());
    std::vector<std::uint8_t> completed(prefixes.size(), 0);
    const auto ntasks = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(opts.workers))
    for (std::int64_t t = 0; t < ntasks; ++t) {
      const auto ti = static_cast<std::size_t>(t);
      const Prefix& pre = prefixes[ti];
      const std::string key = to_string(pre.bits.data(), pre.bits.size());
      if (done->count(key)) {
        completed[ti] = 1;
        continue;
      }
      if (budget.stop.load()) continue;
      auto& loc = locals[ti];
      loc.bits.assign(m, 0);
      std::copy(pre.bits.begin(), pre.bits.end(), loc.bits.begin());
      if (pre.partial + minima[m - depth] < bound.load()) search.dfs(depth, pre.partial, loc);
      budget.exhausted(loc.pending);
      loc.pending = 0;
      if (!loc.aborted) {
        completed[ti] = 1;
        if (checkpoint) checkpoint->record_done(m, key, bound.load());
      }
    }

    for (const auto& loc : locals) {
      nodes += loc.nodes;
      if (loc.found < best) {
        best = loc.found;
        best_witness = loc.witness;
      }
    }
    // Other tasks may have recorded a smaller count than any local copy kept.
    best = std::min(best, bound.load());
    report.nodes_explored = nodes;

    bool all_done = std::all_of(completed.begin(), completed.end(), [](std::uint8_t c) { return c != 0; });
    if (!all_done) {
      std::uint64_t lower = best;
      for (std::size_t t = 0; t < prefixes.size(); ++t)
        if (!completed[t]) lower = std::min(lower, prefixes[t].partial + minima[m - depth]);
      lower = std::max(lower, minima.back());
      report.budget_exhausted = true;
      report.lower_bound_proved = lower;
      report.witness = interval_coloring(best_witness);
      if (lower > 0)
        report.outcome = PatternOutcome::NoneExists;
      else if (best == 0)
        report.outcome = PatternOutcome::FreeColoringFound;
      result.reports.push_back(std::move(report));
      break;
    }

    // The found witness may come from a checkpoint record of another run.
    if (checkpoint && checkpoint->state().found.count(m))
      for (const auto& rec : checkpoint->state().found.at(m))
        if (rec.value == best && count_string(p, rec.witness) == best) best_witness = rec.witness;
    if (count_string(p, best_witness) != best) {
      for (const auto& loc : locals)
        if (loc.found == best) best_witness = loc.witness;
    }

    std::vector<std::uint8_t> lex(m);
    std::uint64_t budget_nodes = 50'000'000;
    if (lex_first(pc, m, minima, best, lex, 0, 0, budget_nodes)) best_witness = to_string(lex.data(), m);

    minima.push_back(best);
    prev_witness = best_witness;
    if (checkpoint) checkpoint->record_minimum(m, best, best_witness);
    report.min_count = best;
    report.lower_bound_proved = best;
    report.witness = interval_coloring(best_witness);
    report.outcome = best == 0 ? PatternOutcome::FreeColoringFound : PatternOutcome::NoneExists;
    result.reports.push_back(std::move(report));
  }
  return result;
}

}  // namespace apmono
