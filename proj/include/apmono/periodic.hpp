#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "apmono/coloring.hpp"
#include "apmono/ratio.hpp"

namespace apmono {

/// Which of the k-1 steps of a progression over Z_n cross a multiple of n.
/// bits[j-1] = 1 iff floor((a+jd)/n) > floor((a+(j-1)d)/n); the class index
/// reads the bits as a binary number with bits[0] most significant.
struct WrapClass {
  std::vector<std::uint8_t> bits;

  unsigned index() const;
  std::string str() const;
  static WrapClass from_index(unsigned index, std::size_t k);
};

/// Requires 0 <= a, d < n.
WrapClass wrap_class(std::size_t a, std::size_t d, std::size_t n, std::size_t k);

/// Normalized areas of the parameter regions, keyed by class index. Only the
/// classes that can occur are present. Supports k = 4 and k = 5.
std::map<unsigned, Ratio> region_area_table(std::size_t k);

/// Number of (a, d) in Z_b^2 such that a + jd - r*(x_1 + ... + x_j) mod b,
/// j = 0..k-1, all share a color, where x = pattern.bits.
std::uint64_t generalized_mono_count(const Coloring& block, std::size_t k, const WrapClass& pattern, std::size_t r);
/// Direct-enumeration reference for generalized_mono_count.
std::uint64_t generalized_mono_count_serial(const Coloring& block, std::size_t k, const WrapClass& pattern,
                                            std::size_t r);

/// c_i for every feasible class i.
std::map<unsigned, std::uint64_t> class_counts(const Coloring& block, std::size_t k, std::size_t r);

/// Asymptotic monochromatic density of the periodic coloring BB...BR of Z_n
/// with n = bt + r: count(B)/b^2 when r = 0, otherwise sum a_i c_i / b^2.
Ratio density_upper_bound(const Coloring& block, std::size_t k, std::size_t r);

/// floor(n/b) copies of the block followed by the tail (length n mod b).
Coloring assemble_periodic(const Coloring& block, std::size_t n, const Coloring* tail, GroupKind kind);
Coloring assemble_periodic(const Coloring& block, std::size_t n, const std::vector<std::uint8_t>& tail,
                           GroupKind kind);

}  // namespace apmono
