#include "doctest.h"

#include "fixtures.hpp"
#include "random_models.hpp"
#include "ribbon/error.hpp"
#include "ribbon/plane_division.hpp"

using namespace ribbon;
using namespace ribbon::testing;

namespace {

ErrorCode code_of(auto&& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidCell;
}

Ribbon translated(const Ribbon& r, const Point2& by) {
  Sketch s("moved");
  auto move = [&](const FilledCycle& c) {
    std::vector<Point2> pts;
    for (const auto& p : c.points()) pts.push_back(p + by);
    return s.cycle(c.label, pts);
  };
  FilledCycle outer = move(r.outer());
  FilledCycle inner = move(r.inner());
  return make_ribbon(outer, inner, {}, {}, r.label(), {.allow_concentric = r.allow_concentric()});
}

}  // namespace

TEST_CASE("frames") {
  CHECK(code_of([] { Frame(pt(0, 0), pt(0, 1)); }) == ErrorCode::InvalidFrame);
  CHECK(code_of([] { Frame(pt(2, 0), pt(1, 1)); }) == ErrorCode::InvalidFrame);
  const Frame f(pt(0, 0), pt(2, 1));
  CHECK(f.contains(pt(2, 1)));
  CHECK_FALSE(f.contains(pt(2.001, 1)));
  const Frame around = frame_around(fig1_1_ribbon(), Rational(1));
  CHECK(around.min == pt(-2, -1));
  CHECK(around.max == pt(4, 3));
}

TEST_CASE("classify_region examples") {
  const Ribbon e = fig1_1_ribbon();
  const Frame f = frame_around(e, Rational(1));
  CHECK(classify_region(e, f, f.min) == RegionLabel::pi1_outside);
  CHECK(classify_region(e, f, f.max) == RegionLabel::pi1_outside);
  CHECK(classify_region(e, f, pt(-.8, 1)) == RegionLabel::pi2_annulus);
  CHECK(classify_region(e, f, pt(1, 1)) == RegionLabel::pi3_inner);
  for (const auto& v : e.inner().points()) CHECK(classify_region(e, f, v) == RegionLabel::pi3_inner);
  for (const auto& v : e.outer().points()) CHECK(classify_region(e, f, v) == RegionLabel::pi2_annulus);
  CHECK(to_string(RegionLabel::pi2_annulus) == "pi2_annulus");

  CHECK(code_of([&] { classify_region(e, f, pt(5, 5)); }) == ErrorCode::PointOutsideFrame);
  const Frame tight(pt(-1, 0), pt(3, 2));
  CHECK(code_of([&] { classify_region(e, tight, pt(1, 1)); }) == ErrorCode::FrameTooSmall);
}

TEST_CASE("every point of either loop follows the boundary convention") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Ribbon r = random_star_ribbon(rng, "s");
    const Frame f = frame_around(r, Rational(1));
    for (const auto* c : {&r.outer(), &r.inner()}) {
      const RegionLabel want = c == &r.outer() ? RegionLabel::pi2_annulus : RegionLabel::pi3_inner;
      const auto& pts = c->points();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2& a = pts[i];
        const Point2& b = pts[(i + 1) % pts.size()];
        for (int k = 0; k <= 7; ++k) {
          const Rational t(k, 7);
          const Point2 p = a + t * (b - a);
          CHECK(classify_region(r, f, p) == want);
        }
      }
    }
  }
}

TEST_CASE("verify_partition on Fig. 1.1") {
  const Ribbon e = fig1_1_ribbon();
  const Frame f = frame_around(e, Rational(1));
  const PartitionReport report = verify_partition(e, f, 50);
  CHECK(report.samples == 50 * 50 + 2 * (10 + 10));
  CHECK(report.singly_labeled());
  CHECK(report.all_realized());
  CHECK(report.all_cleared());
  CHECK(report.ok());
  for (const auto& w : report.witnesses) {
    REQUIRE(w);
    CHECK(w->radius > 0);
    CHECK(w->radius * w->radius <= w->clearance2);
    CHECK(classify_region(e, f, w->point) == w->region);
  }
  CHECK(report.counts[0] + report.counts[1] + report.counts[2] == report.samples);
}

TEST_CASE("verify_partition edge cases") {
  const Ribbon e = fig1_1_ribbon();
  const Frame f = frame_around(e, Rational(1));
  const PartitionReport sparse = verify_partition(e, f, 1);
  CHECK(sparse.singly_labeled());
  CHECK_FALSE(sparse.ok());
  CHECK(code_of([&] { verify_partition(e, f, 0); }) == ErrorCode::InvalidGridDensity);
  CHECK(code_of([&] { verify_partition(e, Frame(pt(0, 0), pt(1, 1)), 10); }) == ErrorCode::FrameTooSmall);
}

TEST_CASE("witnesses keep their disk inside the region") {
  // the clearance radius must not exceed the distance to any loop edge
  Rng rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    const Ribbon r = random_star_ribbon(rng, "s");
    const Frame f = frame_around(r, Rational(1));
    const PartitionReport report = verify_partition(r, f, 20);
    REQUIRE(report.ok());
    for (const auto& w : report.witnesses) {
      for (const auto* c : {&r.outer(), &r.inner()}) {
        const auto& pts = c->points();
        for (std::size_t i = 0; i < pts.size(); ++i)
          CHECK(w->radius * w->radius <=
                squared_distance_to_segment(w->point, pts[i], pts[(i + 1) % pts.size()]));
      }
    }
  }
}

TEST_CASE("classification is invariant under translation") {
  Rng rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    const Ribbon r = random_star_ribbon(rng, "s");
    const Point2 by = pt(3.25, -7.5);
    const Ribbon moved = translated(r, by);
    const Frame f = frame_around(r, Rational(1));
    const Frame g(f.min + by, f.max + by);
    for (int i = 0; i <= 30; ++i)
      for (int j = 0; j <= 30; ++j) {
        const Point2 p{f.min.x + (f.max.x - f.min.x) * Rational(i, 30),
                       f.min.y + (f.max.y - f.min.y) * Rational(j, 30)};
        CHECK(classify_region(r, f, p) == classify_region(moved, g, p + by));
      }
  }
}
