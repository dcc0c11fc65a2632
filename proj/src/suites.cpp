#include "apmono/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "apmono/apcount.hpp"
#include "apmono/bounds.hpp"
#include "apmono/constructions.hpp"
#include "apmono/periodic.hpp"

namespace apmono::suites {
namespace {

using Row = std::map<unsigned, std::uint64_t>;

Row row4(std::initializer_list<std::uint64_t> values) {
  Row r;
  unsigned i = 0;
  for (auto v : values) r[i++] = v;
  return r;
}

Row row5(std::initializer_list<std::uint64_t> values) {
  static const unsigned idx[] = {0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15};
  Row r;
  std::size_t i = 0;
  for (auto v : values) r[idx[i++]] = v;
  return r;
}

std::string describe(const Row& r) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& [i, v] : r) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << ')';
  return os.str();
}

// Checks that class_counts(block, k, r) equals `expected` for every r selected.
Check table_check(const std::string& name, const Coloring& block, std::size_t k, const Row& expected,
                  bool (*select)(std::size_t)) {
  Check c{name, true, ""};
  std::size_t rows = 0;
  for (std::size_t r = 1; r < block.size(); ++r) {
    if (!select(r)) continue;
    ++rows;
    Row got = class_counts(block, k, r);
    if (got != expected) {
      c.passed = false;
      c.detail = "r=" + std::to_string(r) + " gave " + describe(got) + ", expected " + describe(expected);
      return c;
    }
  }
  c.detail = describe(expected) + " for " + std::to_string(rows) + " values of r";
  return c;
}

Check ratio_check(const std::string& name, const Ratio& got, const Ratio& expected) {
  return {name, got == expected, got.str() + (got == expected ? "" : " != " + expected.str())};
}

}  // namespace

Coloring random_coloring(std::mt19937_64& rng, GroupKind kind, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return Coloring(kind, std::move(bits));
}

Polygon random_simple_polygon(std::mt19937_64& rng, std::int64_t grid) {
  std::uniform_int_distribution<std::int64_t> coord(0, grid - 1);
  std::uniform_int_distribution<std::size_t> count(3, 9);
  for (;;) {
    const std::size_t m = count(rng);
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (std::size_t i = 0; i < m; ++i) pts.emplace_back(coord(rng), coord(rng));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) continue;
    // Sort around m * centroid, exactly, by half-plane then cross product.
    std::int64_t cx = 0, cy = 0;
    for (auto [x, y] : pts) {
      cx += x;
      cy += y;
    }
    const auto mm = static_cast<std::int64_t>(pts.size());
    auto rel = [&](const std::pair<std::int64_t, std::int64_t>& p) {
      return std::pair<std::int64_t, std::int64_t>{p.first * mm - cx, p.second * mm - cy};
    };
    auto half = [](std::pair<std::int64_t, std::int64_t> v) { return v.second > 0 || (v.second == 0 && v.first > 0) ? 0 : 1; };
    bool degenerate = false;
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
      auto va = rel(a), vb = rel(b);
      int ha = half(va), hb = half(vb);
      if (ha != hb) return ha < hb;
      return va.first * vb.second - va.second * vb.first > 0;
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto va = rel(pts[i]), vb = rel(pts[(i + 1) % pts.size()]);
      if ((va.first == 0 && va.second == 0) || va.first * vb.second - va.second * vb.first <= 0) degenerate = true;
    }
    if (degenerate) continue;
    std::vector<Point> verts;
    for (auto [x, y] : pts) verts.push_back({Ratio(x), Ratio(y)});
    if (!is_simple(verts)) continue;
    return Polygon(std::move(verts));
  }
}

std::vector<Check> tables() {
  const Coloring b20 = builtin_coloring(BuiltinColoring::B20);
  const Coloring b22 = builtin_coloring(BuiltinColoring::B22);
  const Coloring b74 = builtin_coloring(BuiltinColoring::B74);
  const Coloring b220 = ltimes(builtin_template(BuiltinTemplate::B11), b20);
  const Coloring b242 = ltimes(builtin_template(BuiltinTemplate::B11), b22);

  std::vector<Check> out;
  out.push_back(table_check("B20 odd r", b20, 4, row4({36, 50, 50, 50, 50, 50, 50, 36}),
                            [](std::size_t r) { return r % 2 == 1; }));
  out.push_back(table_check("B22 even r", b22, 4, row4({42, 63, 70, 63, 63, 70, 63, 42}),
                            [](std::size_t r) { return r % 2 == 0; }));
  out.push_back(table_check("B74 even r", b74, 5,
                            row5({146, 293, 377, 377, 378, 359, 293, 293, 359, 378, 377, 377, 293, 146}),
                            [](std::size_t r) { return r % 2 == 0; }));
  out.push_back(table_check("B74 odd r != 37", b74, 5,
                            row5({146, 293, 375, 375, 374, 357, 293, 293, 357, 374, 375, 375, 293, 146}),
                            [](std::size_t r) { return r % 2 == 1 && r != 37; }));
  out.push_back(table_check("B74 r = 37", b74, 5,
                            row5({146, 144, 144, 144, 144, 144, 144, 144, 144, 144, 144, 144, 144, 146}),
                            [](std::size_t r) { return r == 37; }));
  // The published (4882, 7563, 8230, ...) row is the table of B11 x B22; B11 x B20
  // itself gives the row below, which is the one that sums to 8543/72600.
  out.push_back(table_check("B11 x B22 even r, 22 does not divide r", b242, 4,
                            row4({4882, 7563, 8230, 7563, 7563, 8230, 7563, 4882}),
                            [](std::size_t r) { return r % 2 == 0 && r % 22 != 0; }));
  out.push_back(table_check("B11 x B20 even r, 22 does not divide r", b220, 4,
                            row4({4036, 6250, 6800, 6250, 6250, 6800, 6250, 4036}),
                            [](std::size_t r) { return r % 2 == 0 && r % 22 != 0; }));

  out.push_back(ratio_check("density B20 r=1", density_upper_bound(b20, 4, 1), Ratio(17, 150)));
  out.push_back(ratio_check("density B22 r=2", density_upper_bound(b22, 4, 2), Ratio(175, 1452)));
  out.push_back(ratio_check("density B11 x B20 r=2", density_upper_bound(b220, 4, 2), Ratio(8543, 72600)));
  out.push_back(ratio_check("density B74 r=1", density_upper_bound(b74, 5, 1), Ratio(3629, 65712)));
  out.push_back(ratio_check("density B74 r=2", density_upper_bound(b74, 5, 2), Ratio(3647, 65712)));
  out.push_back(ratio_check("density B74 r=37", density_upper_bound(b74, 5, 37), Ratio(289, 10952)));
  out.push_back(ratio_check("density B22 r=0", density_upper_bound(b22, 4, 0), Ratio(21, 242)));
  out.push_back(ratio_check("density B20 r=0", density_upper_bound(b20, 4, 0), Ratio(9, 100)));
  out.push_back(ratio_check("density B74 r=0", density_upper_bound(b74, 5, 0), Ratio(73, 2738)));
  return out;
}

std::vector<Check> identities(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(4, 40);
  std::vector<Check> out;

  Check mix{"mix identity", true, ""};
  for (std::size_t s = 0; s < samples && mix.passed; ++s) {
    Coloring c = random_coloring(rng, GroupKind::Cyclic, size(rng));
    auto r = verify_mix_identity(c);
    if (!r.holds()) {
      mix.passed = false;
      mix.detail = "fails on " + c.str() + ": " + std::to_string(r.left) + " vs " + std::to_string(r.right);
    }
  }
  if (mix.passed) mix.detail = std::to_string(samples) + " random colorings";
  out.push_back(mix);

  Check case2{"case-2 residue formula", true, ""};
  for (std::size_t s = 0; s < samples && case2.passed; ++s) {
    std::size_t n = 4 * std::uniform_int_distribution<std::size_t>(1, 9)(rng) + 2;
    Coloring c = random_coloring(rng, GroupKind::Cyclic, n);
    for (const auto& r : verify_case2_formula(c))
      if (!r.holds()) {
        case2.passed = false;
        case2.detail = r.name + " fails on " + c.str();
      }
  }
  if (case2.passed) case2.detail = std::to_string(samples) + " random colorings, n = 2 mod 4";
  out.push_back(case2);

  Check lemma{"pair intersections: formula = enumeration", true, ""};
  Check prime_eq{"pair intersections at gcd 1 equal red^2", true, ""};
  Check cauchy{"pair intersections >= red^2", true, ""};
  for (std::size_t s = 0; s < samples && lemma.passed; ++s) {
    const std::size_t n = size(rng), k = 3 + rng() % 3;
    Coloring c = random_coloring(rng, GroupKind::Cyclic, n);
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j)
        for (Color color : {Color::Red, Color::Blue}) {
          auto brute = pair_intersection(c, k, i, j, color, IntersectMode::BruteForce);
          auto formula = pair_intersection(c, k, i, j, color, IntersectMode::Formula);
          const std::uint64_t cnt = c.count(color);
          if (brute != formula) {
            lemma.passed = false;
            lemma.detail = "mismatch on " + c.str() + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          }
          if (std::gcd(j - i, n) == 1 && brute != cnt * cnt) prime_eq.passed = false;
          if (brute < cnt * cnt) cauchy.passed = false;
        }
  }
  if (lemma.passed) lemma.detail = std::to_string(samples) + " random colorings, k in {3,4,5}";
  out.push_back(lemma);
  out.push_back(prime_eq);
  out.push_back(cauchy);

  Check m3{"3-AP closed form over primes", true, ""};
  const std::size_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::size_t s = 0; s < samples && m3.passed; ++s) {
    const std::size_t p = primes[rng() % std::size(primes)];
    Coloring c = random_coloring(rng, GroupKind::Cyclic, p);
    auto direct = count_mono_cyclic(c, 3);
    auto closed = m3_closed_form(p, c.red_count());
    if (direct != closed) {
      m3.passed = false;
      m3.detail = c.str() + ": " + std::to_string(direct) + " vs " + std::to_string(closed);
    }
  }
  if (m3.passed) m3.detail = std::to_string(samples) + " random colorings";
  out.push_back(m3);

  Check even{"u_0+u_4 >= u_2/3 (n in {4,8,12}, exhaustive)", true, ""};
  for (std::size_t n : {4, 8, 12})
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      std::vector<std::uint8_t> bits(n);
      for (std::size_t v = 0; v < n; ++v) bits[v] = (w >> v) & 1U;
      auto r = check_even_colored_bound(Coloring(GroupKind::Cyclic, bits));
      if (!r.corrected_form_holds || !r.weak_form_holds) {
        even.passed = false;
        even.detail = "fails at n=" + std::to_string(n);
      }
    }
  out.push_back(even);
  return out;
}

std::vector<Check> recursion(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const BlockTemplate b11 = builtin_template(BuiltinTemplate::B11);
  const BlockTemplate b37 = builtin_template(BuiltinTemplate::B37);
  std::vector<Check> out;

  out.push_back({"B11 star property (k=4)", check_template_star_property(b11, 4), ""});
  out.push_back({"B37 star property (k=5)", check_template_star_property(b37, 5), ""});

  auto sweep = [&](const std::string& name, const BlockTemplate& tmpl, std::size_t k, std::size_t cases,
                   std::size_t max_t) {
    Check c{name, true, std::to_string(cases) + " random inner colorings"};
    const std::uint64_t fixed = tmpl.size() - 1;
    std::uniform_int_distribution<std::size_t> tdist(1, max_t);
    for (std::size_t s = 0; s < cases && c.passed; ++s) {
      const std::size_t t = tdist(rng);
      Coloring inner = random_coloring(rng, GroupKind::Cyclic, t);
      auto outer = count_mono_cyclic(ltimes(tmpl, inner), k);
      auto predicted = fixed * t * t + count_mono_cyclic(inner, k);
      if (outer != predicted) {
        c.passed = false;
        c.detail = "inner " + inner.str() + ": " + std::to_string(outer) + " vs " + std::to_string(predicted);
      }
    }
    out.push_back(c);
  };
  sweep("count(B11 x C) = 10t^2 + count(C)", b11, 4, 200, 30);
  sweep("count(B37 x C) = 36t^2 + count(C)", b37, 5, 50, 12);

  TowerSpec tower{b11, 2, parse_coloring("1", GroupKind::Cyclic, 1)};
  auto direct = count_mono_cyclic(tower_coloring(tower, 4), 4);
  auto predicted = tower_predicted_count(tower, 4);
  out.push_back({"B11 tower over Z_121", direct == 1221 && predicted == 1221,
                 "direct " + std::to_string(direct) + ", recursion " + std::to_string(predicted)});

  Check closed{"tower density 1/12 + 1/(12*11^(2s-1))", true, ""};
  for (std::size_t s = 1; s <= 3; ++s) {
    TowerSpec t{b11, s, parse_coloring("1", GroupKind::Cyclic, 1)};
    const auto mod = static_cast<std::int64_t>(std::pow(11, s) + 0.5);
    Ratio density(static_cast<std::int64_t>(count_mono_cyclic(tower_coloring(t, 4), 4)), mod * mod);
    Ratio expect = Ratio(1, 12) + Ratio(1, 12 * (mod * mod / 11));
    if (density != expect) {
      closed.passed = false;
      closed.detail = "s=" + std::to_string(s) + ": " + density.str() + " vs " + expect.str();
    }
  }
  out.push_back(closed);
  return out;
}

std::vector<Check> periodic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Check> out;

  Check equiv{"periodic per-progression equivalence (b in {20,22}, t in {3,4}, all r)", true, ""};
  std::uint64_t checked = 0;
  for (auto which : {BuiltinColoring::B20, BuiltinColoring::B22}) {
    const Coloring block = builtin_coloring(which);
    const std::size_t b = block.size();
    for (std::size_t t : {3, 4})
      for (std::size_t r = 0; r < b && equiv.passed; ++r) {
        const std::size_t n = b * t + r;
        Coloring tail_src = random_coloring(rng, GroupKind::Cyclic, std::max<std::size_t>(r, 1));
        std::vector<std::uint8_t> tail(tail_src.bits().begin(), tail_src.bits().begin() + static_cast<std::ptrdiff_t>(r));
        Coloring c = assemble_periodic(block, n, tail, GroupKind::Cyclic);
        for (std::size_t k : {4, 5})
          for (std::size_t d = 0; d < n; ++d)
            for (std::size_t a = 0; a < n; ++a) {
              bool inside = true, mono = true;
              for (std::size_t j = 0; j < k; ++j) {
                std::size_t v = (a + j * d) % n;
                inside &= v < b * t;
                mono &= c[v] == c[a];
              }
              if (!inside) continue;
              WrapClass w = wrap_class(a, d, n, k);
              const std::size_t a0 = a % b, d0 = d % b;
              bool gmono = true;
              std::size_t shift = 0;
              for (std::size_t j = 1; j < k; ++j) {
                shift += w.bits[j - 1] * r;
                std::size_t v = (a0 + j * d0 + b * k * (r + 1) - shift) % b;
                gmono &= block[v] == block[a0];
              }
              ++checked;
              if (gmono != mono) {
                equiv.passed = false;
                equiv.detail = "mismatch at n=" + std::to_string(n) + " a=" + std::to_string(a) + " d=" + std::to_string(d);
              }
            }
      }
  }
  if (equiv.passed) equiv.detail = std::to_string(checked) + " progressions";
  out.push_back(equiv);

  Check exact{"count(BB...B) = t^2 count(B), b <= 22, t <= 5", true, ""};
  for (std::size_t b = 1; b <= 22 && exact.passed; ++b) {
    Coloring block = random_coloring(rng, GroupKind::Cyclic, b);
    if (b == 20) block = builtin_coloring(BuiltinColoring::B20);
    if (b == 22) block = builtin_coloring(BuiltinColoring::B22);
    for (std::size_t t = 1; t <= 5; ++t)
      for (std::size_t k : {3, 4, 5}) {
        Coloring c = assemble_periodic(block, b * t, std::vector<std::uint8_t>{}, GroupKind::Cyclic);
        if (count_mono_cyclic(c, k) != t * t * count_mono_cyclic(block, k)) {
          exact.passed = false;
          exact.detail = "b=" + std::to_string(b) + " t=" + std::to_string(t) + " k=" + std::to_string(k);
        }
      }
  }
  out.push_back(exact);

  for (std::size_t k : {4, 5}) {
    const std::size_t n = 720;
    std::map<unsigned, std::int64_t> counts;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t d = 0; d < n; ++d) ++counts[wrap_class(a, d, n, k).index()];
    Check areas{"class areas at n=720, k=" + std::to_string(k), true, ""};
    std::int64_t worst = 0;
    const auto table = region_area_table(k);
    for (const auto& [idx, cnt] : counts)
      if (!table.count(idx)) {
        areas.passed = false;
        areas.detail = "infeasible class " + std::to_string(idx) + " occurred";
      }
    for (const auto& [idx, area] : table) {
      Ratio diff = Ratio(counts[idx]) - area * Ratio(static_cast<std::int64_t>(n * n));
      std::int64_t dev = std::abs(diff.floor());
      worst = std::max(worst, std::max(dev, std::abs(diff.ceil())));
    }
    if (worst > static_cast<std::int64_t>(4 * n)) areas.passed = false;
    if (areas.detail.empty()) areas.detail = "max deviation " + std::to_string(worst) + " <= 4n = 2880";
    out.push_back(areas);
  }
  return out;
}

std::vector<Check> pick(std::uint64_t seed, std::size_t polygons) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> tdist(10, 50);
  std::uniform_int_distribution<std::int64_t> vnum(0, 20);
  std::uniform_int_distribution<std::int64_t> vden(1, 7);
  Check identity{"Pick identity A = I + B/2 - 1", true, ""};
  Check bound{"|I(v+tP) - A t^2| <= 3Lt + 5m", true, ""};
  double worst_ratio = 0;
  for (std::size_t s = 0; s < polygons; ++s) {
    Polygon p = random_simple_polygon(rng);
    // Lattice polygons: the original and an integer dilate-and-shift.
    for (std::int64_t t : {std::int64_t{1}, std::int64_t{3}}) {
      Point v{Ratio(vnum(rng) - 10), Ratio(vnum(rng) - 10)};
      LatticeCount lc = lattice_points_in_polygon(p, t, v);
      Ratio area = p.area() * Ratio(t * t);
      if (area != Ratio(lc.interior) + Ratio(lc.boundary, 2) - Ratio(1)) {
        identity.passed = false;
        identity.detail = "fails on polygon " + std::to_string(s);
      }
    }
    for (int rep = 0; rep < 3; ++rep) {
      const std::int64_t t = tdist(rng);
      Point v{Ratio(vnum(rng), vden(rng)), Ratio(vnum(rng), vden(rng))};
      LatticeCount lc = lattice_points_in_polygon(p, t, v);
      const double dev = std::fabs((Ratio(lc.interior) - p.area() * Ratio(t * t)).to_double());
      const double limit = 3.0 * p.perimeter() * static_cast<double>(t) + 5.0 * static_cast<double>(p.size());
      worst_ratio = std::max(worst_ratio, dev / limit);
      if (dev > limit) {
        bound.passed = false;
        bound.detail = "fails on polygon " + std::to_string(s) + " t=" + std::to_string(t);
      }
    }
  }
  if (identity.passed) identity.detail = std::to_string(polygons) + " polygons";
  if (bound.passed) {
    std::ostringstream os;
    os << polygons << " polygons x 3 (t, v) samples, worst deviation/bound = " << worst_ratio;
    bound.detail = os.str();
  }
  return {identity, bound};
}

std::vector<Check> run(const std::string& suite, std::uint64_t seed) {
  if (suite == "tables") return tables();
  if (suite == "identities") return identities(seed);
  if (suite == "recursion") return recursion(seed);
  if (suite == "periodic") return periodic(seed);
  if (suite == "pick") return pick(seed);
  if (suite == "all") {
    std::vector<Check> all;
    for (const char* name : {"tables", "identities", "recursion", "periodic", "pick"}) {
      auto part = run(name, seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace apmono::suites
