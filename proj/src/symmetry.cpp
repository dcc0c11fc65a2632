#include "apmono/symmetry.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace apmono {
namespace {

std::size_t reduce(std::int64_t x, std::size_t n) {
  auto nn = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((x % nn) + nn) % nn);
}

void require_cyclic(const Coloring& c) {
  if (c.kind() != GroupKind::Cyclic) throw std::invalid_argument("operation requires a coloring of Z_n");
}

}  // namespace

std::string SymmetryGroup::name() const {
  std::string s;
  if (use_translations && use_unit_multiplications)
    s = "affine";
  else if (use_translations)
    s = "trans";
  else if (use_unit_multiplications)
    s = "mult";
  if (use_conjugation) s += s.empty() ? "conj" : "+conj";
  return s.empty() ? "none" : s;
}

SymmetryGroup SymmetryGroup::parse(const std::string& text) {
  for (bool t : {false, true})
    for (bool m : {false, true})
      for (bool c : {false, true}) {
        SymmetryGroup g{t, m, c};
        if (g.any() && g.name() == text) return g;
      }
  throw std::invalid_argument("unknown symmetry group '" + text + "'");
}

std::vector<std::size_t> units_mod(std::size_t n) {
  std::vector<std::size_t> out;
  if (n == 1) return {0};
  for (std::size_t m = 1; m < n; ++m)
    if (std::gcd(m, n) == 1) out.push_back(m);
  return out;
}

std::vector<AffineMap> group_elements(std::size_t n, const SymmetryGroup& sym) {
  if (!sym.any()) throw std::invalid_argument("symmetry group has no generators enabled");
  std::vector<std::size_t> ms = sym.use_unit_multiplications ? units_mod(n) : std::vector<std::size_t>{1 % n};
  std::size_t shifts = sym.use_translations ? n : 1;
  std::vector<AffineMap> out;
  for (bool flip : {false, true}) {
    if (flip && !sym.use_conjugation) break;
    for (std::size_t m : ms)
      for (std::size_t s = 0; s < shifts; ++s) out.push_back({m, s, flip});
  }
  // Identity first: m == 1 (or 0 when n == 1), s == 0, no flip is already out[0].
  return out;
}

Coloring apply_map(const Coloring& c, const AffineMap& g) {
  const std::size_t n = c.size();
  std::vector<std::uint8_t> bits(n);
  for (std::size_t v = 0; v < n; ++v) bits[v] = c[g.point(v, n)] ^ static_cast<std::uint8_t>(g.flip);
  return Coloring(c.kind(), std::move(bits));
}

Coloring apply_unit_map(const Coloring& c, std::int64_t m) {
  require_cyclic(c);
  const std::size_t n = c.size();
  std::size_t mm = reduce(m, n);
  if (std::gcd(mm, n) != 1 && n != 1)
    throw std::invalid_argument("unit map requires gcd(m, n) = 1, got m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
  return apply_map(c, {mm, 0, false});
}

Coloring translate(const Coloring& c, std::int64_t s) {
  require_cyclic(c);
  return apply_map(c, {1, reduce(s, c.size()), false});
}

Coloring conjugate(const Coloring& c) {
  std::vector<std::uint8_t> bits(c.bits().begin(), c.bits().end());
  for (auto& b : bits) b ^= 1;
  return Coloring(c.kind(), std::move(bits));
}

bool is_canonical(std::span<const std::uint8_t> bits, const std::vector<AffineMap>& elements) {
  const std::size_t n = bits.size();
  for (const auto& g : elements) {
    for (std::size_t v = 0; v < n; ++v) {
      std::uint8_t image = bits[g.point(v, n)] ^ static_cast<std::uint8_t>(g.flip);
      if (image < bits[v]) return false;
      if (image > bits[v]) break;
    }
  }
  return true;
}

Coloring canonical_form(const Coloring& c, const std::vector<AffineMap>& elements) {
  require_cyclic(c);
  Coloring best = c;
  for (const auto& g : elements) {
    Coloring img = apply_map(c, g);
    if (img < best) best = std::move(img);
  }
  return best;
}

Coloring canonical_form(const Coloring& c, const SymmetryGroup& sym) {
  return canonical_form(c, group_elements(c.size(), sym));
}

std::size_t orbit_size(const Coloring& c, const SymmetryGroup& sym) {
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& g : group_elements(c.size(), sym)) {
    auto img = apply_map(c, g);
    seen.emplace(img.bits().begin(), img.bits().end());
  }
  return seen.size();
}

}  // namespace apmono
