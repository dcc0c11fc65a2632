#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "apmono/apcount.hpp"
#include "apmono/constructions.hpp"
#include "apmono/ratio.hpp"
#include "oracles.hpp"

using namespace apmono;

TEST_CASE("built-in colorings are the printed constants") {
  CHECK(builtin_coloring(BuiltinColoring::B20).str() == "11101101110001001000");
  CHECK(builtin_coloring(BuiltinColoring::B22).str() == "1110110100011101001000");
  CHECK(builtin_coloring(BuiltinColoring::B74).size() == 74);
  CHECK(oracle::mono_cyclic(oracle::from_string(builtin_coloring(BuiltinColoring::B20).str()), 4) == 36);
  CHECK(oracle::mono_cyclic(oracle::from_string(builtin_coloring(BuiltinColoring::B22).str()), 4) == 42);
  CHECK(oracle::mono_cyclic(oracle::from_string(builtin_coloring(BuiltinColoring::B74).str()), 5) == 146);
}

TEST_CASE("built-in templates") {
  BlockTemplate b11 = builtin_template(BuiltinTemplate::B11);
  CHECK(b11.size() == 11);
  CHECK(b11.star_positions() == std::vector<std::size_t>{5});
  CHECK(b11.str() == "11101*01000");
  BlockTemplate b37 = builtin_template(BuiltinTemplate::B37);
  CHECK(b37.size() == 37);
  CHECK(b37.star_positions() == std::vector<std::size_t>{20});
  CHECK(BlockTemplate::parse(b37.str()).slots() == b37.slots());
  CHECK(b11.filled(0).str() == "11101001000");
  CHECK_THROWS_AS(BlockTemplate::parse("10x"), std::invalid_argument);
}

TEST_CASE("lookup by name") {
  Coloring c;
  CHECK(lookup_builtin_coloring("b74", c));
  CHECK(c == builtin_coloring(BuiltinColoring::B74));
  CHECK_FALSE(lookup_builtin_coloring("B11", c));
  BlockTemplate t({0});
  CHECK(lookup_builtin_template("B37", t));
  CHECK(t.size() == 37);
  CHECK_FALSE(lookup_builtin_template("B20", t));
}

TEST_CASE("ltimes reproduces B22 and B74") {
  CHECK(ltimes(builtin_template(BuiltinTemplate::B11), parse_coloring("10", GroupKind::Cyclic)) ==
        builtin_coloring(BuiltinColoring::B22));
  CHECK(ltimes(builtin_template(BuiltinTemplate::B37), parse_coloring("10", GroupKind::Cyclic)) ==
        builtin_coloring(BuiltinColoring::B74));
  Coloring single = ltimes(builtin_template(BuiltinTemplate::B11), parse_coloring("1", GroupKind::Cyclic));
  CHECK(single == builtin_template(BuiltinTemplate::B11).filled(1));
  CHECK(count_mono_cyclic(single, 4) == 11);
  CHECK_THROWS_AS(ltimes(BlockTemplate::parse("0101"), parse_coloring("1", GroupKind::Cyclic)), std::invalid_argument);
  CHECK_THROWS_AS(ltimes(BlockTemplate::parse("0*1*"), parse_coloring("1", GroupKind::Cyclic)), std::invalid_argument);
}

TEST_CASE("star property") {
  CHECK(check_template_star_property(builtin_template(BuiltinTemplate::B11), 4));
  CHECK(check_template_star_property(builtin_template(BuiltinTemplate::B37), 5));
  BlockTemplate mutated = BlockTemplate::parse("01101*01000");
  CHECK_FALSE(check_template_star_property(mutated, 4));
  // The mutation really does create a proper monochromatic 4-AP.
  auto bits0 = oracle::from_string(mutated.filled(0).str());
  auto bits1 = oracle::from_string(mutated.filled(1).str());
  CHECK(oracle::mono_cyclic(bits0, 4, true) + oracle::mono_cyclic(bits1, 4, true) > 0);
}

TEST_CASE("recursion identity for B11") {
  std::mt19937_64 rng(61);
  const BlockTemplate b11 = builtin_template(BuiltinTemplate::B11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t t = 1 + rng() % 30;
    Coloring inner(GroupKind::Cyclic, oracle::random_bits(rng, t));
    Coloring outer = ltimes(b11, inner);
    CHECK(outer.size() == 11 * t);
    const auto expect = 10 * t * t + count_mono_cyclic(inner, 4);
    CHECK(count_mono_cyclic(outer, 4) == expect);
    if (t <= 6) CHECK(oracle::mono_cyclic(oracle::from_string(outer.str()), 4) == expect);
  }
}

TEST_CASE("recursion identity for B37 with 5-APs") {
  std::mt19937_64 rng(62);
  const BlockTemplate b37 = builtin_template(BuiltinTemplate::B37);
  for (int i = 0; i < 50; ++i) {
    const std::size_t t = 1 + rng() % 12;
    Coloring inner(GroupKind::Cyclic, oracle::random_bits(rng, t));
    CHECK(count_mono_cyclic(ltimes(b37, inner), 5) == 36 * t * t + count_mono_cyclic(inner, 5));
  }
}

TEST_CASE("towers") {
  const Coloring one = parse_coloring("1", GroupKind::Cyclic);
  TowerSpec t1{builtin_template(BuiltinTemplate::B11), 1, one};
  CHECK(tower_coloring(t1, 4).size() == 11);
  CHECK(tower_predicted_count(t1, 4) == 11);
  CHECK(count_mono_cyclic(tower_coloring(t1, 4), 4) == 11);

  TowerSpec t2{builtin_template(BuiltinTemplate::B11), 2, one};
  Coloring z121 = tower_coloring(t2, 4);
  CHECK(z121.size() == 121);
  CHECK(tower_predicted_count(t2, 4) == 1221);
  CHECK(oracle::mono_cyclic(oracle::from_string(z121.str()), 4) == 1221);
  // 1221/121^2 = 1/12 + 1/(12 * 11^3)
  CHECK(Ratio(1221, 121 * 121) == Ratio(1, 12) + Ratio(1, 12 * 1331));

  TowerSpec t37{builtin_template(BuiltinTemplate::B37), 1, one};
  CHECK(tower_predicted_count(t37, 5) == 37);
  CHECK(oracle::mono_cyclic(oracle::from_string(tower_coloring(t37, 5).str()), 5) == 37);

  TowerSpec bad{BlockTemplate::parse("01101*01000"), 1, one};
  CHECK_THROWS_AS(tower_coloring(bad, 4), std::invalid_argument);
  CHECK_THROWS_AS(tower_predicted_count(bad, 4), std::invalid_argument);
  TowerSpec wrong_k{builtin_template(BuiltinTemplate::B11), 1, one};
  CHECK_THROWS_AS(tower_coloring(wrong_k, 3), std::invalid_argument);
}

TEST_CASE("tower density closed form") {
  const Coloring one = parse_coloring("1", GroupKind::Cyclic);
  for (std::size_t s = 1; s <= 3; ++s) {
    TowerSpec spec{builtin_template(BuiltinTemplate::B11), s, one};
    const auto mod = static_cast<std::int64_t>(std::llround(std::pow(11.0, static_cast<double>(s))));
    const auto direct = count_mono_cyclic(tower_coloring(spec, 4), 4);
    CHECK(direct == tower_predicted_count(spec, 4));
    CHECK(Ratio(static_cast<std::int64_t>(direct), mod * mod) == Ratio(1, 12) + Ratio(1, 12 * mod * mod / 11));
  }
}
