#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "random_models.hpp"
#include "ribbon/error.hpp"
#include "ribbon/nerve.hpp"

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

Region square(double x0, double y0, double x1, double y1, const std::string& label) {
  return Region::from_convex_polygon({pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)}, label);
}

std::vector<std::string> labels_of(const RibbonNerve& group) {
  std::vector<std::string> out;
  for (const auto& r : group.ribbons) out.push_back(r.label());
  return out;
}

// Oracle for rectangle families: rectangles share a point iff the interval
// intersections along both axes are nonempty.
bool rectangles_meet(const std::vector<Region>& family, const Simplex& s) {
  Rational lo_x = -1000, hi_x = 1000, lo_y = -1000, hi_y = 1000;
  for (auto i : s) {
    const Polygon& p = family[i].outer().front();
    lo_x = std::max(lo_x, p.min_corner().x);
    hi_x = std::min(hi_x, p.max_corner().x);
    lo_y = std::max(lo_y, p.min_corner().y);
    hi_y = std::min(hi_y, p.max_corner().y);
  }
  return lo_x <= hi_x && lo_y <= hi_y;
}

}  // namespace

TEST_CASE("regions") {
  const Ribbon e = fig1_1_ribbon();
  const Region r = Region::from_ribbon(e);
  CHECK(r.contains(pt(-.8, 1)));
  CHECK(r.contains(e.inner().points()[0]));
  CHECK_FALSE(r.contains(pt(1, 1)));
  CHECK(Region::from_cycle(e.inner()).contains(pt(1, 1)));
  CHECK(code_of([] {
          Region::from_convex_polygon(loop({{0, 0}, {4, 0}, {1, 1}, {0, 4}}), "dart");
        }) == ErrorCode::NonConvexRegion);
}

TEST_CASE("common witness") {
  const Ribbon e = fig1_1_ribbon();
  const auto w = common_witness({Region::from_cycle(e.outer()), Region::from_cycle(e.inner())});
  REQUIRE(w);
  CHECK(point_in_polygon(*w, e.inner().polygon) != Location::outside);

  CHECK_FALSE(common_witness({square(0, 0, 1, 1, "a"), square(2, 0, 3, 1, "b")}));
  CHECK(common_witness({square(0, 0, 1, 1, "a"), square(1, 1, 3, 3, "b")}) == pt(1, 1));

  const auto [a, b] = fig1_2_ribbons();
  CHECK(common_witness({Region::from_ribbon(a), Region::from_ribbon(b)}) == pt(2, 2));

  CHECK(code_of([] { common_witness({}); }) == ErrorCode::EmptyCollection);
}

TEST_CASE("common witness finds crossings that are not loop vertices") {
  // a plus sign: the only common points lie in the central square, whose
  // corners are crossings of the two bars' edges
  const auto w = common_witness({square(0, 2, 6, 4, "h"), square(2, 0, 4, 6, "v")});
  REQUIRE(w);
  CHECK(w->x >= 2);
  CHECK(w->x <= 4);
  CHECK(w->y >= 2);
  CHECK(w->y <= 4);

  // a ribbon and a square sitting inside its removed interior do not meet
  const Ribbon e = fig1_1_ribbon();
  CHECK_FALSE(common_witness({Region::from_ribbon(e), square(.9, .9, 1.1, 1.1, "s")}));
}

TEST_CASE("nerve examples") {
  const auto one = nerve({square(0, 0, 1, 1, "a")});
  CHECK(one.simplices == std::set<Simplex>{{0}});

  Sketch s;
  std::vector<Region> chain;
  for (int i = 0; i < 3; ++i)
    chain.push_back(Region::from_cycle(
        s.cycle("c" + std::to_string(i), loop({{-1.0 - i, -1.0 - i}, {1.0 + i, -1.0 - i},
                                               {1.0 + i, 1.0 + i}, {-1.0 - i, 1.0 + i}}))));
  const auto full = nerve(chain);
  CHECK(full.simplices.size() == 7);
  CHECK(full.maximal_simplices() == std::vector<Simplex>{{0, 1, 2}});
  CHECK(full.dimension() == 2);

  const RibbonComplex k = fig3_complex();
  std::vector<Region> regions;
  for (const auto& r : k.ribbons()) regions.push_back(Region::from_ribbon(r));
  const auto fig3 = nerve(regions);
  CHECK(fig3.maximal_simplices() == std::vector<Simplex>{{0, 1, 2}, {3}, {4}});
  CHECK(fig3.downward_closed());

  std::vector<Region> many(21, square(0, 0, 1, 1, "x"));
  CHECK(code_of([&] { nerve(many); }) == ErrorCode::CollectionTooLarge);
  CHECK(code_of([] { nerve({}); }) == ErrorCode::EmptyCollection);
}

TEST_CASE("nerve matches the interval oracle on random rectangles") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto family = random_rectangle_family(rng, 6);
    const auto k = nerve(family);
    CHECK(k.downward_closed());
    const std::size_t n = family.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      CHECK(k.contains(s) == rectangles_meet(family, s));
    }
  }
}

TEST_CASE("adding a region never removes a simplex") {
  Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto family = random_rectangle_family(rng, 5);
    const auto before = nerve(family);
    family.push_back(random_rectangle_family(rng, 1).front());
    const auto after = nerve(family);
    CHECK(std::includes(after.simplices.begin(), after.simplices.end(), before.simplices.begin(),
                        before.simplices.end()));
  }
}

TEST_CASE("a ribbon's two cycles form an edge of the nerve") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Ribbon r = random_rect_ribbon(rng, "r");
    const auto k = nerve({Region::from_cycle(r.outer()), Region::from_cycle(r.inner())});
    CHECK(k.contains({0, 1}));
  }
}

TEST_CASE("simplicial complex helpers") {
  const auto tri = SimplicialComplex::from_maximal({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(tri.simplices.size() == 7);
  CHECK(tri.contains({2, 0}));
  SimplicialComplex broken{{"a", "b"}, {{0, 1}}};
  CHECK_FALSE(broken.downward_closed());
}

TEST_CASE("ribbon nerve groups") {
  SUBCASE("Fig. 1.1") {
    RibbonComplex k({fig1_1_ribbon()}, "rbxK1");
    const auto groups = ribbon_nerve(k);
    REQUIRE(groups.size() == 1);
    CHECK(labels_of(groups[0]) == std::vector<std::string>{"rbE"});
  }
  SUBCASE("Fig. 1.2") {
    const auto [a, b] = fig1_2_ribbons();
    const auto groups = ribbon_nerve(RibbonComplex({a, b}, "rbxK2"));
    REQUIRE(groups.size() == 1);
    CHECK(labels_of(groups[0]) == std::vector<std::string>{"rbA", "rbB"});
  }
  SUBCASE("Fig. 3") {
    const auto groups = ribbon_nerve(fig3_complex());
    REQUIRE(groups.size() == 3);
    CHECK(labels_of(groups[0]) == std::vector<std::string>{"rbA", "rbB'", "rbB"});
    CHECK(labels_of(groups[1]) == std::vector<std::string>{"rbA'"});
    CHECK(labels_of(groups[2]) == std::vector<std::string>{"rbB''"});
    for (const auto& g : groups) {
      std::vector<Region> regions;
      for (const auto& r : g.ribbons) regions.push_back(Region::from_ribbon(r));
      CHECK(common_witness(regions));
    }
  }
}

TEST_CASE("make_ribbon_nerve requires a common point") {
  const RibbonComplex k = fig3_complex();
  CHECK(make_ribbon_nerve({k.ribbons()[0], k.ribbons()[2]}, "ok").ribbons.size() == 2);
  CHECK(code_of([&] { make_ribbon_nerve({k.ribbons()[0], k.ribbons()[3]}, "far"); }) ==
        ErrorCode::NoCommonIntersection);
  CHECK(code_of([] { make_ribbon_nerve({}, "none"); }) == ErrorCode::EmptyCollection);
  CHECK(fig5a_nerve().ribbons.size() == 3);
  CHECK(fig5b_nerve().ribbons.size() == 2);
}
