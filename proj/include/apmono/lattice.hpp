#pragma once

#include <cstdint>
#include <vector>

#include "apmono/ratio.hpp"

namespace apmono {

struct Point {
  Ratio x;
  Ratio y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Simple polygon with exact rational vertices, in either orientation.
class Polygon {
 public:
  /// Throws std::invalid_argument for fewer than three vertices or a
  /// self-intersecting boundary.
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  Ratio area() const;
  /// Circumference; irrational in general, so only a double.
  double perimeter() const;

  /// v + t*P.
  Polygon scaled(const Ratio& t, const Point& offset) const;

 private:
  std::vector<Point> vertices_;
};

bool is_simple(const std::vector<Point>& vertices);

struct LatticeCount {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
};

/// Integer points strictly inside and on the boundary of offset + t*P,
/// computed row by row in exact integer arithmetic.
LatticeCount lattice_points_in_polygon(const Polygon& p, std::int64_t t, const Point& offset);
LatticeCount lattice_points_in_polygon(const Polygon& p);

}  // namespace apmono
