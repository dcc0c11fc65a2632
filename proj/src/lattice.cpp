#include "apmono/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace apmono {
namespace {

Ratio cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(const Ratio& r) { return r.num() > 0 ? 1 : (r.num() < 0 ? -1 : 0); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  int d1 = sign(cross(c, d, a)), d2 = sign(cross(c, d, b));
  int d3 = sign(cross(a, b, c)), d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(a, c, d)) return true;
  if (d2 == 0 && on_segment(b, c, d)) return true;
  if (d3 == 0 && on_segment(c, a, b)) return true;
  if (d4 == 0 && on_segment(d, a, b)) return true;
  return false;
}

__int128 floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

__int128 ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }

struct IntPoint {
  __int128 x;
  __int128 y;
};

}  // namespace

bool is_simple(const std::vector<Point>& v) {
  const std::size_t m = v.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (v[i] == v[(i + 1) % m]) return false;
  for (std::size_t i = 0; i < m; ++i) {
    const Point &a = v[i], &b = v[(i + 1) % m];
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point &c = v[j], &d = v[(j + 1) % m];
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == m - 1;
      if (next || wrap) {
        // Adjacent edges share exactly one endpoint; they may not fold back.
        const Point& shared = next ? b : a;
        const Point& p = next ? a : b;
        const Point& q = next ? d : c;
        if (sign(cross(shared, p, q)) == 0) {
          Ratio dot = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y);
          if (dot.num() > 0) return false;
        }
        continue;
      }
      if (segments_touch(a, b, c, d)) return false;
    }
  }
  // A triangle has only adjacent edge pairs; reject the collinear case here.
  if (m == 3 && sign(cross(v[0], v[1], v[2])) == 0) return false;
  return true;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw std::invalid_argument("polygon needs at least three vertices");
  if (!is_simple(vertices_)) throw std::invalid_argument("polygon is not simple");
}

Ratio Polygon::area() const {
  Ratio twice(0);
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point &a = vertices_[i], &b = vertices_[(i + 1) % m];
    twice += a.x * b.y - b.x * a.y;
  }
  if (twice.num() < 0) twice = -twice;
  return twice / Ratio(2);
}

double Polygon::perimeter() const {
  double total = 0;
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point &a = vertices_[i], &b = vertices_[(i + 1) % m];
    total += std::hypot((b.x - a.x).to_double(), (b.y - a.y).to_double());
  }
  return total;
}

Polygon Polygon::scaled(const Ratio& t, const Point& offset) const {
  if (t.num() <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Point> out;
  out.reserve(vertices_.size());
  for (const auto& p : vertices_) out.push_back({offset.x + t * p.x, offset.y + t * p.y});
  return Polygon(std::move(out));
}

LatticeCount lattice_points_in_polygon(const Polygon& poly) {
  // Bring every vertex onto a common denominator D so that the point (x, y)
  // corresponds to the integer point (D x, D y).
  __int128 den = 1;
  for (const auto& p : poly.vertices()) {
    den = std::lcm(static_cast<std::int64_t>(den), p.x.den());
    den = std::lcm(static_cast<std::int64_t>(den), p.y.den());
  }
  std::vector<IntPoint> v;
  for (const auto& p : poly.vertices())
    v.push_back({static_cast<__int128>(p.x.num()) * (den / p.x.den()),
                 static_cast<__int128>(p.y.num()) * (den / p.y.den())});
  const std::size_t m = v.size();

  __int128 ymin = v[0].y, ymax = v[0].y;
  for (const auto& p : v) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }

  LatticeCount out;
  struct Crossing {
    __int128 num;  // scaled x = num / den_part
    __int128 den;
  };
  std::vector<Crossing> crossings;
  std::set<std::int64_t> on_boundary;

  for (__int128 row = ceil_div(ymin, den); row * den <= ymax; ++row) {
    const __int128 y = row * den;
    crossings.clear();
    on_boundary.clear();
    for (std::size_t i = 0; i < m; ++i) {
      const IntPoint &p = v[i], &q = v[(i + 1) % m];
      if (p.y == q.y) {
        if (p.y == y) {
          __int128 lo = ceil_div(std::min(p.x, q.x), den), hi = floor_div(std::max(p.x, q.x), den);
          for (__int128 x = lo; x <= hi; ++x) on_boundary.insert(static_cast<std::int64_t>(x));
        }
        continue;
      }
      // scaled x at height y: (p.x (q.y - p.y) + (y - p.y)(q.x - p.x)) / (q.y - p.y)
      __int128 num = p.x * (q.y - p.y) + (y - p.y) * (q.x - p.x);
      __int128 dd = q.y - p.y;
      if (dd < 0) {
        num = -num;
        dd = -dd;
      }
      if (std::min(p.y, q.y) <= y && y <= std::max(p.y, q.y) && num % (dd * den) == 0)
        on_boundary.insert(static_cast<std::int64_t>(num / (dd * den)));
      const bool half_open = (p.y <= y && y < q.y) || (q.y <= y && y < p.y);
      if (half_open) crossings.push_back({num, dd});
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.num * b.den < b.num * a.den; });
    for (std::size_t c = 0; c + 1 < crossings.size(); c += 2) {
      __int128 lo = floor_div(crossings[c].num, crossings[c].den * den) + 1;
      __int128 hi = ceil_div(crossings[c + 1].num, crossings[c + 1].den * den) - 1;
      if (hi < lo) continue;
      std::int64_t inside = static_cast<std::int64_t>(hi - lo + 1);
      auto first = on_boundary.lower_bound(static_cast<std::int64_t>(lo));
      auto last = on_boundary.upper_bound(static_cast<std::int64_t>(hi));
      inside -= static_cast<std::int64_t>(std::distance(first, last));
      out.interior += inside;
    }
    out.boundary += static_cast<std::int64_t>(on_boundary.size());
  }
  return out;
}

LatticeCount lattice_points_in_polygon(const Polygon& p, std::int64_t t, const Point& offset) {
  if (t <= 0) throw std::invalid_argument("scale factor t must be positive");
  return lattice_points_in_polygon(p.scaled(Ratio(t), offset));
}

}  // namespace apmono
