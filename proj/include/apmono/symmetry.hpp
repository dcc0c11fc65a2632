#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apmono/coloring.hpp"

namespace apmono {

/// Which count-preserving maps of Z_n are used to identify colorings.
struct SymmetryGroup {
  bool use_translations = true;
  bool use_unit_multiplications = true;
  bool use_conjugation = true;

  /// v -> m*v + s together with complementation. The default.
  static SymmetryGroup affine_with_conjugation() { return {true, true, true}; }
  static SymmetryGroup affine() { return {true, true, false}; }
  /// v -> m*v only: the narrow notion of isomorphic colorings.
  static SymmetryGroup multiplicative() { return {false, true, false}; }
  static SymmetryGroup multiplicative_with_conjugation() { return {false, true, true}; }

  bool any() const { return use_translations || use_unit_multiplications || use_conjugation; }
  std::string name() const;
  /// Accepts the names produced by name(): "affine+conj", "affine", "mult", "mult+conj",
  /// "trans", "trans+conj", "conj".
  static SymmetryGroup parse(const std::string& text);
};

/// One group element: c -> (v -> c(m*v + s) xor flip).
struct AffineMap {
  std::size_t m = 1;
  std::size_t s = 0;
  bool flip = false;

  std::size_t point(std::size_t v, std::size_t n) const { return (m * v + s) % n; }
};

/// Every element of the group generated by `sym` acting on Z_n, identity first.
/// Throws std::invalid_argument when no generator family is enabled.
std::vector<AffineMap> group_elements(std::size_t n, const SymmetryGroup& sym);

/// The multiplicative units of Z_n in increasing order.
std::vector<std::size_t> units_mod(std::size_t n);

Coloring apply_map(const Coloring& c, const AffineMap& g);

/// c'(v) = c(m*v mod n); requires gcd(m, n) = 1.
Coloring apply_unit_map(const Coloring& c, std::int64_t m);
/// c'(v) = c(v + s mod n).
Coloring translate(const Coloring& c, std::int64_t s);
Coloring conjugate(const Coloring& c);

/// Lexicographically least image of c under the group.
Coloring canonical_form(const Coloring& c, const SymmetryGroup& sym);
Coloring canonical_form(const Coloring& c, const std::vector<AffineMap>& elements);

bool is_canonical(std::span<const std::uint8_t> bits, const std::vector<AffineMap>& elements);

/// Number of distinct colorings in the orbit of c.
std::size_t orbit_size(const Coloring& c, const SymmetryGroup& sym);

}  // namespace apmono
