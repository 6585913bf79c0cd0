#pragma once

#include <span>
#include <vector>

#include "ribbon/rational.hpp"

namespace ribbon {

/// Exact planar point.
struct Point2 {
  Rational x;
  Rational y;

  Point2() = default;
  Point2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& p);
Point2 midpoint(const Point2& a, const Point2& b);

enum class Orientation { clockwise, counterclockwise, collinear };

/// (a - o) x (b - o).
Rational cross(const Point2& o, const Point2& a, const Point2& b);
Rational dot(const Point2& a, const Point2& b);
Rational squared_norm(const Point2& v);

Orientation orientation(const Point2& a, const Point2& b, const Point2& c);

/// Closed-segment membership.
bool on_segment(const Point2& p, const Point2& a, const Point2& b);

struct SegmentIntersection {
  enum class Kind { none, point, overlap };
  Kind kind = Kind::none;
  Point2 first;   // the point, or one end of the overlap
  Point2 second;  // other end of the overlap
};

/// Intersection of closed segments ab and cd.
SegmentIntersection intersect_segments(const Point2& a, const Point2& b, const Point2& c,
                                       const Point2& d);

Rational squared_distance_to_segment(const Point2& p, const Point2& a, const Point2& b);

/// True iff the closed loop has pairwise distinct vertices and its segments
/// meet only at the shared endpoints of consecutive segments.
/// Throws TooFewVertices for fewer than three vertices.
bool simple_polygon(std::span<const Point2> loop);

enum class Location { inside, on_boundary, outside };

/// Twice the signed area (positive for counterclockwise loops).
Rational signed_area2(std::span<const Point2> loop);

/// Mean of the loop vertices.
Point2 vertex_centroid(std::span<const Point2> loop);

/// Consecutive edge turns never change sign (collinear runs allowed).
bool is_convex(std::span<const Point2> loop);

/// A loop that has been checked to be a simple polygon. Point location on a
/// Polygon skips the O(n^2) simplicity check.
class Polygon {
 public:
  /// Throws TooFewVertices or NonSimplePolygon.
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  Location locate(const Point2& p) const;

  const Point2& min_corner() const noexcept { return min_; }
  const Point2& max_corner() const noexcept { return max_; }

  friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

 private:
  std::vector<Point2> vertices_;
  Point2 min_;
  Point2 max_;
};

/// Exact point location. Throws NonSimplePolygon (or TooFewVertices) when the
/// loop is not a simple polygon.
Location point_in_polygon(const Point2& p, std::span<const Point2> loop);
Location point_in_polygon(const Point2& p, const Polygon& polygon);

}  // namespace ribbon
