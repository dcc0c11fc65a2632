#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apmono/apcount.hpp"
#include "apmono/coloring.hpp"
#include "apmono/symmetry.hpp"

namespace apmono {

/// Thrown when a request exceeds the configured feasibility cap.
class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchMode { Naive, CanonicalPruned };

inline constexpr std::size_t kDefaultPrunedCap = 24;
inline constexpr std::size_t kDefaultNaiveCap = 16;

struct CyclicSearchOptions {
  SymmetryGroup sym = SymmetryGroup::affine_with_conjugation();
  SearchMode mode = SearchMode::CanonicalPruned;
  MonoFilter filter = MonoFilter::All;
  int workers = 0;
  /// 0 selects the default cap for the mode.
  std::size_t cap = 0;
};

struct SearchReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t minimum_count = 0;
  /// Canonical representatives of every orbit attaining the minimum, sorted.
  std::vector<Coloring> witnesses;
  SymmetryGroup symmetry;
  MonoFilter filter = MonoFilter::All;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

/// Exact minimum of count_mono_cyclic over all 2^n colorings of Z_n.
SearchReport exhaustive_min_cyclic(std::size_t n, std::size_t k, const CyclicSearchOptions& opts = {});

/// One canonical representative per orbit of colorings of Z_n without
/// non-degenerate monochromatic k-APs.
std::vector<Coloring> zero_mono_colorings(std::size_t n, std::size_t k, const SymmetryGroup& sym,
                                          int workers = 0, std::size_t cap = 0);

// ---------------------------------------------------------------------------
// Pattern searches over [n]

struct SearchBudget {
  /// 0 means unlimited.
  std::uint64_t max_nodes = 0;
  std::chrono::milliseconds max_time{0};
};

enum class PatternOutcome { FreeColoringFound, NoneExists, Unknown };

struct PatternSearchReport {
  std::size_t n = 0;
  PatternOutcome outcome = PatternOutcome::Unknown;
  /// Lexicographically first coloring achieving the reported value.
  std::optional<Coloring> witness;
  std::optional<std::uint64_t> min_count;
  std::optional<std::uint64_t> lower_bound_proved;
  bool budget_exhausted = false;
  std::uint64_t nodes_explored = 0;
};

/// For each n in 1..n_limit: whether [n] has a coloring with no increasing
/// AP whose color tuple lies in P, with the lexicographically first one.
std::vector<PatternSearchReport> pattern_free_max_interval(const PatternSet& p, std::size_t n_limit,
                                                          int workers = 0);

struct PatternMinOptions {
  SearchBudget budget;
  int workers = 0;
  /// Resumable progress file; empty disables checkpointing.
  std::string checkpoint_path;
  /// Prefix length at which the tree is split into independent tasks.
  std::size_t split_depth = 14;
};

struct PatternMinResult {
  /// reports[m-1] describes [m] for m = 1..n (or up to where the budget ran out).
  std::vector<PatternSearchReport> reports;
  const PatternSearchReport& final_report() const { return reports.back(); }
};

/// Branch-and-bound minimum of count_frame_patterns over all colorings of [m],
/// for every m up to n. Each length uses the minima of shorter lengths to
/// bound the unassigned suffix.
PatternMinResult min_pattern_count_interval(std::size_t n, const PatternSet& p, const PatternMinOptions& opts = {});

}  // namespace apmono
