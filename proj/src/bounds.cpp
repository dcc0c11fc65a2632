#include "apmono/bounds.hpp"

#include <stdexcept>

#include "apmono/apcount.hpp"

namespace apmono {
namespace {

std::int64_t sq(std::int64_t x) { return x * x; }

}  // namespace

IdentityReport verify_mix_identity(const Coloring& c) {
  const auto n = static_cast<std::int64_t>(c.size());
  const auto u = u_vector(c, 4).u;
  IdentityReport r{"mix"};
  r.left = 4 * static_cast<std::int64_t>(u[0]) + static_cast<std::int64_t>(u[1]) + static_cast<std::int64_t>(u[3]) +
           4 * static_cast<std::int64_t>(u[4]);
  r.right = -2 * n * n;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j)
      for (Color color : {Color::Red, Color::Blue})
        r.right += static_cast<std::int64_t>(pair_intersection(c, 4, i, j, color, IntersectMode::BruteForce));
  return r;
}

std::vector<IdentityReport> verify_case2_formula(const Coloring& c) {
  if (c.size() % 4 != 2) throw std::invalid_argument("the case-2 formula requires n = 2 mod 4");
  std::vector<IdentityReport> out;
  for (Color color : {Color::Red, Color::Blue}) {
    const auto prof = color_profile(c, 4, color);
    const auto& rho = prof.residues;
    const std::int64_t predicted = 2 * sq(static_cast<std::int64_t>(rho[0] + rho[2])) +
                                   2 * sq(static_cast<std::int64_t>(rho[1] + rho[3]));
    const char* tag = color == Color::Red ? "A" : "B";
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 4}}) {
      IdentityReport r;
      r.name = std::string("|") + tag + std::to_string(i) + "∩" + tag + std::to_string(j) + "|";
      r.left = static_cast<std::int64_t>(pair_intersection(c, 4, i, j, color, IntersectMode::BruteForce));
      r.right = predicted;
      out.push_back(r);
    }
  }
  return out;
}

EvenColoredBound check_even_colored_bound(const Coloring& c) {
  const auto u = u_vector(c, 4).u;
  const auto n = static_cast<std::int64_t>(c.size());
  const auto red = static_cast<std::int64_t>(c.red_count());
  const std::int64_t lhs = 3 * static_cast<std::int64_t>(u[0] + u[4]) - static_cast<std::int64_t>(u[2]);
  return {lhs >= 3 * sq(n - 2 * red), lhs >= 0};
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::uint64_t m3_closed_form(std::uint64_t p, std::uint64_t red_count) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (red_count > p) throw std::invalid_argument("red count exceeds p");
  return p * p - 3 * red_count * p + 3 * red_count * red_count;
}

LowerBound lower_bound_for(std::uint64_t n, std::size_t k) {
  if (k == 3) return {Ratio(1, 4), "k=3: at least n^2/4 monochromatic 3-APs for every n (pair counts at alpha = 1/2)"};
  if (k != 4) throw std::invalid_argument("lower bounds are available for k = 3 and k = 4 only");
  switch (n % 4) {
    case 0:
      return {Ratio(2, 33), "k=4, 4 | n: u_0+u_4 >= u_2/3 combined with u_0+u_2+u_4 >= 8n^2/33"};
    case 2:
      return {Ratio(7, 96), "k=4, n = 2 mod 4: frame pairs counted through residues mod 4, minimum at alpha = 1/2"};
    default:
      return {Ratio(7, 96), "k=4, n odd: every frame pair lies on a unique 3-AP, minimum at alpha = 1/2"};
  }
}

Ratio frame_pattern_constant(std::uint64_t min_count, std::uint64_t total) {
  if (total == 0) throw std::invalid_argument("total must be positive");
  return Ratio(2 * static_cast<std::int64_t>(min_count), static_cast<std::int64_t>(total));
}

}  // namespace apmono
