#include "ribbon/plane_division.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

using Segment = std::pair<Point2, Point2>;

void require_frame_fits(const Ribbon& ribbon, const Frame& frame) {
  if (!frame.strictly_contains(ribbon.outer().polygon))
    throw Error(ErrorCode::FrameTooSmall,
                "frame does not strictly contain the outer loop of '" + ribbon.label() + "'");
}

// Even-odd ray casting plus an explicit boundary test, kept separate from
// Polygon::locate so the two can be compared.
bool on_loop(const Polygon& loop, const Point2& p) {
  for (std::size_t i = 0; i < loop.size(); ++i)
    if (on_segment(p, loop.vertex(i), loop.vertex(i + 1))) return true;
  return false;
}

bool strictly_inside(const Polygon& loop, const Point2& p) {
  bool odd = false;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const Point2& a = loop.vertex(i);
    const Point2& b = loop.vertex(i + 1);
    if ((a.y > p.y) == (b.y > p.y)) continue;
    // p lies left of the crossing point iff it is on the left of the upward-directed edge
    const int side = cross(a, b, p).sign();
    if (b.y > a.y ? side > 0 : side < 0) odd = !odd;
  }
  return odd;
}

bool in_closed(const Polygon& loop, const Point2& p) {
  if (p.x < loop.min_corner().x || p.x > loop.max_corner().x || p.y < loop.min_corner().y ||
      p.y > loop.max_corner().y)
    return false;
  return on_loop(loop, p) || strictly_inside(loop, p);
}

void add_loop(std::vector<Segment>& out, const Polygon& loop) {
  for (std::size_t i = 0; i < loop.size(); ++i) out.emplace_back(loop.vertex(i), loop.vertex(i + 1));
}

std::vector<Segment> frame_edges(const Frame& f) {
  Point2 a = f.min, b{f.max.x, f.min.y}, c = f.max, d{f.min.x, f.max.y};
  return {{a, b}, {b, c}, {c, d}, {d, a}};
}

Rational clearance2(const std::vector<Segment>& boundaries, const Point2& p) {
  Rational best = squared_distance_to_segment(p, boundaries.front().first, boundaries.front().second);
  for (const auto& [a, b] : boundaries) best = std::min(best, squared_distance_to_segment(p, a, b));
  return best;
}

struct FloatSegment {
  double ax, ay, bx, by;
};

std::vector<FloatSegment> to_float(const std::vector<Segment>& segments) {
  std::vector<FloatSegment> out;
  for (const auto& [a, b] : segments)
    out.push_back({to_double(a.x), to_double(a.y), to_double(b.x), to_double(b.y)});
  return out;
}

// Floating-point estimate used only to choose the witness candidate.
double approx_clearance2(const std::vector<FloatSegment>& boundaries, double px, double py) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : boundaries) {
    double dx = s.bx - s.ax, dy = s.by - s.ay;
    double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? std::clamp(((px - s.ax) * dx + (py - s.ay) * dy) / len2, 0.0, 1.0) : 0.0;
    double ex = s.ax + t * dx - px, ey = s.ay + t * dy - py;
    best = std::min(best, ex * ex + ey * ey);
  }
  return best;
}

}  // namespace

Frame::Frame(Point2 lo, Point2 hi) : min(std::move(lo)), max(std::move(hi)) {
  if (!(min.x < max.x) || !(min.y < max.y))
    throw Error(ErrorCode::InvalidFrame, "frame corners must satisfy min < max on both axes");
}

bool Frame::contains(const Point2& p) const {
  return min.x <= p.x && p.x <= max.x && min.y <= p.y && p.y <= max.y;
}

bool Frame::strictly_contains(const Polygon& loop) const {
  return min.x < loop.min_corner().x && loop.max_corner().x < max.x &&
         min.y < loop.min_corner().y && loop.max_corner().y < max.y;
}

Frame frame_around(const Ribbon& ribbon, const Rational& margin) {
  const Polygon& outer = ribbon.outer().polygon;
  return Frame({outer.min_corner().x - margin, outer.min_corner().y - margin},
               {outer.max_corner().x + margin, outer.max_corner().y + margin});
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::pi1_outside: return "pi1_outside";
    case RegionLabel::pi2_annulus: return "pi2_annulus";
    case RegionLabel::pi3_inner: return "pi3_inner";
  }
  return "?";
}

RegionLabel classify_region(const Ribbon& ribbon, const Frame& frame, const Point2& p) {
  require_frame_fits(ribbon, frame);
  if (!frame.contains(p))
    throw Error(ErrorCode::PointOutsideFrame,
                "point (" + to_string(p.x) + ", " + to_string(p.y) + ") lies outside the frame");
  if (ribbon.inner().polygon.locate(p) != Location::outside) return RegionLabel::pi3_inner;
  if (ribbon.outer().polygon.locate(p) != Location::outside) return RegionLabel::pi2_annulus;
  return RegionLabel::pi1_outside;
}

bool PartitionReport::all_realized() const noexcept {
  return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
}

bool PartitionReport::all_cleared() const noexcept {
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [](const auto& w) { return w && w->radius > 0; });
}

PartitionReport verify_partition(const Ribbon& ribbon, const Frame& frame, std::size_t density) {
  require_frame_fits(ribbon, frame);
  if (density == 0)
    throw Error(ErrorCode::InvalidGridDensity, "grid density must be a positive integer");

  const Polygon& outer = ribbon.outer().polygon;
  const Polygon& inner = ribbon.inner().polygon;

  std::vector<Point2> samples;
  const Rational two_n(static_cast<unsigned long>(2 * density));
  const Rational w = frame.max.x - frame.min.x;
  const Rational h = frame.max.y - frame.min.y;
  for (std::size_t i = 0; i < density; ++i) {
    Rational x = frame.min.x + Rational(static_cast<unsigned long>(2 * i + 1)) * w / two_n;
    for (std::size_t j = 0; j < density; ++j)
      samples.push_back({x, frame.min.y + Rational(static_cast<unsigned long>(2 * j + 1)) * h / two_n});
  }
  for (const Polygon* loop : {&outer, &inner}) {
    for (std::size_t i = 0; i < loop->size(); ++i) {
      samples.push_back(loop->vertex(i));
      samples.push_back(midpoint(loop->vertex(i), loop->vertex(i + 1)));
    }
  }

  std::array<std::vector<Segment>, 3> boundaries;
  boundaries[0] = frame_edges(frame);
  add_loop(boundaries[0], outer);
  add_loop(boundaries[1], outer);
  add_loop(boundaries[1], inner);
  add_loop(boundaries[2], inner);

  std::array<std::vector<FloatSegment>, 3> approx;
  for (std::size_t r = 0; r < 3; ++r) approx[r] = to_float(boundaries[r]);
  std::array<double, 3> best_score{-1, -1, -1};
  std::array<const Point2*, 3> best_point{};

  PartitionReport report;
  report.samples = samples.size();
  for (const auto& p : samples) {
    if (!frame.contains(p)) {
      ++report.outside_frame;
      continue;
    }
    const bool in_inner = in_closed(inner, p);
    const bool in_outer = in_closed(outer, p);
    const std::array<bool, 3> member{!in_outer, in_outer && !in_inner, in_inner};
    const auto hits = std::count(member.begin(), member.end(), true);
    if (hits > 1) ++report.multi_labeled;
    if (hits == 0) ++report.unlabeled;

    const auto label = static_cast<std::size_t>(classify_region(ribbon, frame, p));
    if (!member[label]) ++report.mismatched;
    ++report.counts[label];

    double score = approx_clearance2(approx[label], to_double(p.x), to_double(p.y));
    if (score > best_score[label]) {
      best_score[label] = score;
      best_point[label] = &p;
    }
  }
  for (std::size_t r = 0; r < 3; ++r) {
    if (!best_point[r]) continue;
    Rational c2 = clearance2(boundaries[r], *best_point[r]);
    report.witnesses[r] =
        ClearanceWitness{static_cast<RegionLabel>(r), *best_point[r], c2, sqrt_lower_bound(c2)};
  }
  return report;
}

}  // namespace ribbon
