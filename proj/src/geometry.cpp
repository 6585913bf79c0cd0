#include "ribbon/geometry.hpp"

#include <algorithm>
#include <set>

#include "ribbon/error.hpp"

namespace ribbon {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }
Point2 midpoint(const Point2& a, const Point2& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

Rational squared_norm(const Point2& v) { return dot(v, v); }

Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
  int s = cross(a, b, c).sign();
  if (s > 0) return Orientation::counterclockwise;
  if (s < 0) return Orientation::clockwise;
  return Orientation::collinear;
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  const bool in_box = std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                      std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  return in_box && cross(a, b, p) == 0;
}

SegmentIntersection intersect_segments(const Point2& a, const Point2& b, const Point2& c,
                                       const Point2& d) {
  using Kind = SegmentIntersection::Kind;
  // quick reject on bounding boxes
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
    return {};

  if (a == b) {
    if (on_segment(a, c, d)) return {Kind::point, a, a};
    return {};
  }
  if (c == d) {
    if (on_segment(c, a, b)) return {Kind::point, c, c};
    return {};
  }

  int d1 = cross(c, d, a).sign();
  int d2 = cross(c, d, b).sign();
  int d3 = cross(a, b, c).sign();
  int d4 = cross(a, b, d).sign();

  if (d1 == 0 && d2 == 0) {
    // collinear: intersect the parameter intervals along a dominant axis
    bool use_x = a.x != b.x;
    auto key = [use_x](const Point2& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Point2& lo1 = key(a) < key(b) ? a : b;
    const Point2& hi1 = key(a) < key(b) ? b : a;
    const Point2& lo2 = key(c) < key(d) ? c : d;
    const Point2& hi2 = key(c) < key(d) ? d : c;
    const Point2& lo = key(lo1) < key(lo2) ? lo2 : lo1;
    const Point2& hi = key(hi1) < key(hi2) ? hi1 : hi2;
    if (key(hi) < key(lo)) return {};
    if (key(hi) == key(lo)) return {Kind::point, lo, lo};
    return {Kind::overlap, lo, hi};
  }

  if (d1 * d2 < 0 && d3 * d4 < 0) {
    Rational c1 = cross(c, d, a);
    Rational c2 = cross(c, d, b);
    Rational t = c1 / (c1 - c2);
    return {Kind::point, a + t * (b - a), {}};
  }
  if (d1 == 0 && on_segment(a, c, d)) return {Kind::point, a, a};
  if (d2 == 0 && on_segment(b, c, d)) return {Kind::point, b, b};
  if (d3 == 0 && on_segment(c, a, b)) return {Kind::point, c, c};
  if (d4 == 0 && on_segment(d, a, b)) return {Kind::point, d, d};
  return {};
}

Rational squared_distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  Point2 ab = b - a;
  Rational len2 = squared_norm(ab);
  if (len2 == 0) return squared_norm(p - a);
  Rational t = dot(p - a, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return squared_norm(p - (a + t * ab));
}

bool simple_polygon(std::span<const Point2> loop) {
  const std::size_t n = loop.size();
  if (n < 3)
    throw Error(ErrorCode::TooFewVertices,
                "a closed loop needs at least 3 vertices, got " + std::to_string(n));
  std::set<Point2> seen(loop.begin(), loop.end());
  if (seen.size() != n) return false;

  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = loop[i];
    const Point2& b = loop[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2& c = loop[j];
      const Point2& d = loop[(j + 1) % n];
      auto hit = intersect_segments(a, b, c, d);
      if (hit.kind == SegmentIntersection::Kind::none) continue;
      bool next = j == i + 1;
      bool wrap = i == 0 && j == n - 1;
      if (!next && !wrap) return false;
      // consecutive segments may only share their common endpoint
      const Point2& shared = next ? b : a;
      if (hit.kind != SegmentIntersection::Kind::point || !(hit.first == shared)) return false;
    }
  }
  return true;
}

Rational signed_area2(std::span<const Point2> loop) {
  Rational area;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2& a = loop[i];
    const Point2& b = loop[(i + 1) % loop.size()];
    area += a.x * b.y - a.y * b.x;
  }
  return area;
}

Point2 vertex_centroid(std::span<const Point2> loop) {
  Point2 sum;
  for (const auto& p : loop) sum = sum + p;
  Rational n(static_cast<long>(loop.size()));
  return {sum.x / n, sum.y / n};
}

bool is_convex(std::span<const Point2> loop) {
  const std::size_t n = loop.size();
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int s = cross(loop[i], loop[(i + 1) % n], loop[(i + 2) % n]).sign();
    if (s == 0) continue;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return sign != 0;
}

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  if (!simple_polygon(vertices_))
    throw Error(ErrorCode::NonSimplePolygon, "loop is not a simple closed polygon");
  min_ = max_ = vertices_.front();
  for (const auto& p : vertices_) {
    min_.x = std::min(min_.x, p.x);
    min_.y = std::min(min_.y, p.y);
    max_.x = std::max(max_.x, p.x);
    max_.y = std::max(max_.y, p.y);
  }
}

Location Polygon::locate(const Point2& p) const {
  if (p.x < min_.x || p.x > max_.x || p.y < min_.y || p.y > max_.y) return Location::outside;
  int winding = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    int side = cross(a, b, p).sign();
    if (side == 0 && on_segment(p, a, b)) return Location::on_boundary;
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++winding;
    } else if (b.y <= p.y && side < 0) {
      --winding;
    }
  }
  return winding != 0 ? Location::inside : Location::outside;
}

Location point_in_polygon(const Point2& p, std::span<const Point2> loop) {
  return Polygon(std::vector<Point2>(loop.begin(), loop.end())).locate(p);
}

Location point_in_polygon(const Point2& p, const Polygon& polygon) { return polygon.locate(p); }

}  // namespace ribbon
