#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apmono/coloring.hpp"

namespace apmono {

/// The progression (a, a+d, ..., a+(k-1)d).
struct APParam {
  std::int64_t a = 0;
  std::int64_t d = 0;
  std::size_t k = 3;
};

enum class MonoFilter { All, NonDegenerateOnly };

/// Terms of the progression. Cyclic terms are reduced into [0, n); interval
/// terms are the 1-based elements of [n] and must stay inside it with d >= 1.
std::vector<std::int64_t> kap_terms(const APParam& p, GroupKind kind, std::size_t n);

/// True when j*d == 0 mod n for some 1 <= j <= k-1, i.e. the terms repeat.
bool is_degenerate_difference(std::size_t d, std::size_t n, std::size_t k);

/// Number of (a, d) in Z_n^2 whose k terms share a color.
std::uint64_t count_mono_cyclic(const Coloring& c, std::size_t k, MonoFilter filter = MonoFilter::All);
/// Same, split by d (index d in [0, n)).
std::vector<std::uint64_t> count_mono_cyclic_by_difference(const Coloring& c, std::size_t k);

/// Number of increasing (d >= 1) monochromatic k-APs in [n].
std::uint64_t count_mono_interval(const Coloring& c, std::size_t k);
/// sum over d >= 1 of max(0, n - (k-1)d).
std::uint64_t total_increasing_aps(std::size_t n, std::size_t k);

/// u[i] = number of k-APs over Z_n^2 with exactly i red terms.
struct UVector {
  std::vector<std::uint64_t> u;
  std::uint64_t sum() const;
};
UVector u_vector(const Coloring& c, std::size_t k);

/// Per-residue color counts modulo r.
struct ColorProfile {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> residues;
};
ColorProfile color_profile(const Coloring& c, std::size_t modulus, Color color);

enum class IntersectMode { BruteForce, Formula };

/// Number of k-AP parameters whose i-th and j-th terms (1-based, i < j) both
/// have `color`. The formula route is r * sum(rho_l^2) with r = gcd(j-i, n).
std::uint64_t pair_intersection(const Coloring& c, std::size_t k, std::size_t i, std::size_t j, Color color,
                                IntersectMode mode);

/// A set of color tuples of length k. Tuple (t_0, ..., t_{k-1}) has code
/// sum t_j << (k-1-j), so the string "10000" is code 16.
class PatternSet {
 public:
  PatternSet(std::size_t k, const std::vector<std::string>& patterns);
  std::size_t k() const { return k_; }
  bool contains(std::uint32_t code) const { return table_[code] != 0; }
  std::size_t size() const;
  std::vector<std::string> patterns() const;

 private:
  std::size_t k_;
  std::vector<std::uint8_t> table_;
};

/// The eight 5-term patterns (S with its frame pair) for which the
/// even-colored extensions of the middle 3-AP outnumber the odd ones.
const PatternSet& frame_pattern_set();

/// Number of increasing P.k()-APs in [n] whose color tuple is in P.
std::uint64_t count_frame_patterns(const Coloring& c, const PatternSet& p);

}  // namespace apmono
