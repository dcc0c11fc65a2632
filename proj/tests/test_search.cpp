#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "apmono/apcount.hpp"
#include "apmono/constructions.hpp"
#include "apmono/search.hpp"
#include "apmono/symmetry.hpp"
#include "oracles.hpp"

using namespace apmono;

namespace {

struct Brute {
  std::uint64_t minimum = 0;
  std::set<std::string> canonical_minimizers;
  std::uint64_t colorings_at_min = 0;
};

Brute brute_min(std::size_t n, std::size_t k, bool nondeg, const SymmetryGroup& g) {
  Brute b;
  b.minimum = ~std::uint64_t{0};
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    auto bits = oracle::from_word(w, n);
    const auto c = oracle::mono_cyclic(bits, k, nondeg);
    if (c < b.minimum) {
      b.minimum = c;
      b.canonical_minimizers.clear();
      b.colorings_at_min = 0;
    }
    if (c == b.minimum) {
      ++b.colorings_at_min;
      auto can = oracle::canonical(bits, g.use_translations, g.use_unit_multiplications, g.use_conjugation);
      b.canonical_minimizers.insert(Coloring(GroupKind::Cyclic, can).str());
    }
  }
  return b;
}

std::set<std::string> as_strings(const std::vector<Coloring>& cs) {
  std::set<std::string> s;
  for (const auto& c : cs) s.insert(c.str());
  return s;
}

}  // namespace

TEST_CASE("trivial sizes") {
  auto r = exhaustive_min_cyclic(1, 4);
  CHECK(r.minimum_count == 1);
  CHECK(r.exhaustive);
  auto r2 = exhaustive_min_cyclic(2, 3);
  CHECK(r2.minimum_count == 2);
}

TEST_CASE("pruned search matches brute force, witnesses included") {
  const SymmetryGroup groups[] = {SymmetryGroup::affine_with_conjugation(), SymmetryGroup::multiplicative(),
                                  SymmetryGroup::parse("trans")};
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k : {3, 4, 5})
      for (const auto& g : groups) {
        CyclicSearchOptions opts;
        opts.sym = g;
        auto rep = exhaustive_min_cyclic(n, k, opts);
        auto b = brute_min(n, k, false, g);
        CHECK(rep.minimum_count == b.minimum);
        CHECK(as_strings(rep.witnesses) == b.canonical_minimizers);
        for (const auto& w : rep.witnesses) CHECK(count_mono_cyclic(w, k) == rep.minimum_count);
      }
}

TEST_CASE("naive and pruned modes agree") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k : {3, 4})
      for (auto filter : {MonoFilter::All, MonoFilter::NonDegenerateOnly}) {
        CyclicSearchOptions naive;
        naive.mode = SearchMode::Naive;
        naive.filter = filter;
        CyclicSearchOptions pruned;
        pruned.filter = filter;
        auto a = exhaustive_min_cyclic(n, k, naive);
        auto b = exhaustive_min_cyclic(n, k, pruned);
        CHECK(a.minimum_count == b.minimum_count);
        CHECK(as_strings(a.witnesses) == as_strings(b.witnesses));
      }
}

TEST_CASE("non-degenerate filter against brute force") {
  for (std::size_t n = 1; n <= 11; ++n) {
    CyclicSearchOptions opts;
    opts.filter = MonoFilter::NonDegenerateOnly;
    auto rep = exhaustive_min_cyclic(n, 4, opts);
    auto b = brute_min(n, 4, true, opts.sym);
    CHECK(rep.minimum_count == b.minimum);
    CHECK(as_strings(rep.witnesses) == b.canonical_minimizers);
  }
}

TEST_CASE("witness orbits cover every minimizer") {
  for (std::size_t n : {8, 10, 12}) {
    auto rep = exhaustive_min_cyclic(n, 4);
    std::size_t covered = 0;
    for (const auto& w : rep.witnesses) covered += orbit_size(w, rep.symmetry);
    CHECK(covered == brute_min(n, 4, false, rep.symmetry).colorings_at_min);
  }
}

TEST_CASE("B20 and B22 are optimal") {
  auto r20 = exhaustive_min_cyclic(20, 4);
  CHECK(r20.minimum_count == 36);
  CHECK(r20.exhaustive);
  const auto full = SymmetryGroup::affine_with_conjugation();
  CHECK(as_strings(r20.witnesses).count(canonical_form(builtin_coloring(BuiltinColoring::B20), full).str()) == 1);

  auto r22 = exhaustive_min_cyclic(22, 4);
  CHECK(r22.minimum_count == 42);
  CHECK(as_strings(r22.witnesses).count(canonical_form(builtin_coloring(BuiltinColoring::B22), full).str()) == 1);
}

TEST_CASE("results do not depend on the worker count") {
  CyclicSearchOptions one;
  one.workers = 1;
  CyclicSearchOptions four;
  four.workers = 4;
  for (std::size_t n : {14, 17, 18}) {
    auto a = exhaustive_min_cyclic(n, 4, one);
    auto b = exhaustive_min_cyclic(n, 4, four);
    CHECK(a.minimum_count == b.minimum_count);
    CHECK(as_strings(a.witnesses) == as_strings(b.witnesses));
  }
  CHECK(as_strings(zero_mono_colorings(11, 4, SymmetryGroup::multiplicative(), 1)) ==
        as_strings(zero_mono_colorings(11, 4, SymmetryGroup::multiplicative(), 3)));
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(exhaustive_min_cyclic(25, 4), CapExceeded);
  CyclicSearchOptions naive;
  naive.mode = SearchMode::Naive;
  CHECK_THROWS_AS(exhaustive_min_cyclic(17, 4, naive), CapExceeded);
  naive.cap = 17;
  CHECK_NOTHROW(exhaustive_min_cyclic(17, 3, naive));
  CHECK_THROWS_AS(zero_mono_colorings(30, 4, SymmetryGroup::affine_with_conjugation()), CapExceeded);
  CHECK_THROWS_AS(exhaustive_min_cyclic(0, 4), std::invalid_argument);
}

TEST_CASE("zero-monochromatic colorings of Z_11") {
  auto orbits = zero_mono_colorings(11, 4, SymmetryGroup::affine_with_conjugation());
  REQUIRE(orbits.size() == 1);
  const auto full = SymmetryGroup::affine_with_conjugation();
  const BlockTemplate b11 = builtin_template(BuiltinTemplate::B11);
  const auto c0 = canonical_form(b11.filled(0), full);
  const auto c1 = canonical_form(b11.filled(1), full);
  CHECK((orbits[0] == c0 || orbits[0] == c1));

  // Total number of such colorings, by brute force, under any grouping.
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < 2048; ++w) total += oracle::mono_cyclic(oracle::from_word(w, 11), 4, true) == 0;
  for (const auto& g : {SymmetryGroup::affine_with_conjugation(), SymmetryGroup::multiplicative(),
                        SymmetryGroup::affine()}) {
    std::uint64_t covered = 0;
    for (const auto& c : zero_mono_colorings(11, 4, g)) {
      CHECK(count_mono_cyclic(c, 4, MonoFilter::NonDegenerateOnly) == 0);
      covered += orbit_size(c, g);
    }
    CHECK(covered == total);
  }
}

TEST_CASE("zero-monochromatic small cases") {
  // Every 4-AP of Z_2 repeats a term.
  auto z2 = zero_mono_colorings(2, 4, SymmetryGroup::affine_with_conjugation());
  std::size_t covered = 0;
  for (const auto& c : z2) covered += orbit_size(c, SymmetryGroup::affine_with_conjugation());
  CHECK(covered == 4);

  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k : {3, 4}) {
      const auto g = SymmetryGroup::affine_with_conjugation();
      auto zero = zero_mono_colorings(n, k, g);
      auto b = brute_min(n, k, true, g);
      CHECK(zero.empty() == (b.minimum != 0));
      if (b.minimum == 0) CHECK(as_strings(zero) == b.canonical_minimizers);
    }
}

TEST_CASE("3-AP minima sit near n^2/4") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto rep = exhaustive_min_cyclic(n, 3);
    CHECK(4 * rep.minimum_count >= n * n);
    CHECK(4 * rep.minimum_count <= n * n + 12 * n);
  }
}
