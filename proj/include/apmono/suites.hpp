#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apmono/coloring.hpp"
#include "apmono/lattice.hpp"

namespace apmono::suites {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Class-count tables for the built-in blocks and the density bounds derived from them.
std::vector<Check> tables();
/// Counting identities on random colorings.
std::vector<Check> identities(std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);
/// ⋉ recursion on random inner colorings and the Z_121 tower.
std::vector<Check> recursion(std::uint64_t seed = kDefaultSeed);
/// Per-progression equivalence of periodic colorings, r = 0 exactness, region areas.
std::vector<Check> periodic(std::uint64_t seed = kDefaultSeed);
/// Pick's identity and the scaled-polygon bound on random simple polygons.
std::vector<Check> pick(std::uint64_t seed = kDefaultSeed, std::size_t polygons = 500);

/// Suite names accepted by run(): tables, identities, recursion, periodic, pick, all.
std::vector<Check> run(const std::string& suite, std::uint64_t seed = kDefaultSeed);

Coloring random_coloring(std::mt19937_64& rng, GroupKind kind, std::size_t n);
/// Star-shaped simple polygon with integer vertices in [0, grid)^2.
Polygon random_simple_polygon(std::mt19937_64& rng, std::int64_t grid = 10);

}  // namespace apmono::suites
