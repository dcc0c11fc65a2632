#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apmono/coloring.hpp"
#include "apmono/ratio.hpp"

namespace apmono {

struct IdentityReport {
  std::string name;
  std::int64_t left = 0;
  std::int64_t right = 0;
  bool holds() const { return left == right; }
};

/// 4u_0 + u_1 + u_3 + 4u_4 against -2n^2 + sum_{i<j} (|A_i∩A_j| + |B_i∩B_j|)
/// for 4-APs, both sides by enumeration.
IdentityReport verify_mix_identity(const Coloring& c);

/// For n = 2 mod 4: |A_1∩A_3| = |A_2∩A_4| = 2(rho_0+rho_2)^2 + 2(rho_1+rho_3)^2
/// (rho = red counts by residue mod 4) and the blue analogue. One report per
/// intersection. Throws std::invalid_argument for other n.
std::vector<IdentityReport> verify_case2_formula(const Coloring& c);

/// 3(u_0 + u_4) - u_2 >= 3(n - 2*red)^2 and its consequence u_0 + u_4 >= u_2/3.
struct EvenColoredBound {
  bool corrected_form_holds = false;
  bool weak_form_holds = false;
};
EvenColoredBound check_even_colored_bound(const Coloring& c);

bool is_prime(std::uint64_t p);

/// p^2 - 3 red p + 3 red^2: the exact monochromatic 3-AP count of any coloring
/// of Z_p (p prime) with `red_count` red elements.
std::uint64_t m3_closed_form(std::uint64_t p, std::uint64_t red_count);

struct LowerBound {
  Ratio value;
  std::string note;
};

/// Asymptotic lower bound on the minimum monochromatic density over Z_n.
LowerBound lower_bound_for(std::uint64_t n, std::size_t k);

/// 2 * min / total: turns the minimum number of pattern progressions in a
/// window of length L (with `total` increasing 5-APs) into the density
/// constant for E(p_S - q_S | p_S > q_S).
Ratio frame_pattern_constant(std::uint64_t min_count, std::uint64_t total);

}  // namespace apmono
