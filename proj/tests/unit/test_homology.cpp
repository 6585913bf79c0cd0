#include "doctest.h"

#include <map>

#include "fixtures.hpp"
#include "random_models.hpp"
#include "ribbon/error.hpp"
#include "ribbon/homology.hpp"

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

// Oracle: dense Gaussian elimination over GF(2) on explicit boundary matrices.
std::size_t gf2_rank(std::vector<std::vector<int>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

Betti01 dense_betti(const SimplicialComplex& k) {
  std::map<Simplex, std::size_t> index[3];
  for (const auto& s : k.simplices)
    if (s.size() <= 3) index[s.size() - 1].emplace(s, index[s.size() - 1].size());
  auto boundary = [&](int d) {
    std::vector<std::vector<int>> m(index[d - 1].size(), std::vector<int>(index[d].size(), 0));
    for (const auto& [s, col] : index[d])
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        m[index[d - 1].at(face)][col] = 1;
      }
    return m;
  };
  const std::size_t r1 = index[1].empty() ? 0 : gf2_rank(boundary(1));
  const std::size_t r2 = index[2].empty() ? 0 : gf2_rank(boundary(2));
  return {index[0].size() - r1, index[1].size() - r1 - r2};
}

Frame frame(double x0, double y0, double x1, double y1) { return Frame(pt(x0, y0), pt(x1, y1)); }

Region square(double x0, double y0, double x1, double y1, const std::string& label) {
  return rectangle(q(x0), q(y0), q(x1), q(y1), label);
}

}  // namespace

TEST_CASE("z2 betti examples") {
  CHECK(z2_betti(SimplicialComplex::from_maximal({"a"}, {{0}})) == Betti01{1, 0});
  const auto hollow = SimplicialComplex::from_maximal({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(z2_betti(hollow) == Betti01{1, 1});
  const auto full = SimplicialComplex::from_maximal({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(dense_betti(full) == Betti01{1, 0});
  CHECK(z2_betti(full) == Betti01{1, 0});
  CHECK(z2_betti(SimplicialComplex::from_maximal({"a", "b"}, {{0}, {1}})) == Betti01{2, 0});
  // tetrahedron boundary: a sphere, so b1 = 0 and three-simplices are ignored
  const auto sphere = SimplicialComplex::from_maximal(
      {"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(z2_betti(sphere) == Betti01{1, 0});
  const auto solid = SimplicialComplex::from_maximal({"a", "b", "c", "d"}, {{0, 1, 2, 3}});
  CHECK(z2_betti(solid) == Betti01{1, 0});
  SimplicialComplex broken{{"a", "b"}, {{0, 1}}};
  CHECK(code_of([&] { z2_betti(broken); }) == ErrorCode::NotDownwardClosed);
}

TEST_CASE("z2 betti agrees with the dense oracle on random complexes") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    std::vector<std::string> labels(n, "v");
    std::vector<Simplex> maximal;
    const int count = std::uniform_int_distribution<int>(1, 9)(rng);
    for (int m = 0; m < count; ++m) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (rng() % 3 == 0) s.push_back(i);
      if (s.empty()) s.push_back(rng() % n);
      if (s.size() > 4) s.resize(4);
      maximal.push_back(s);
    }
    for (std::size_t i = 0; i < n; ++i) maximal.push_back({i});
    const auto k = SimplicialComplex::from_maximal(labels, maximal);
    CHECK(z2_betti(k) == dense_betti(k));
  }
}

TEST_CASE("a cone is acyclic") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Simplex> maximal;
    // apex n joined to a cycle on 0..n-1 (or a point for n = 1)
    for (std::size_t i = 0; i < n; ++i) maximal.push_back(n == 1 ? Simplex{0, 1} : Simplex{i, (i + 1) % n, n});
    for (auto& s : maximal) std::sort(s.begin(), s.end());
    const auto k = SimplicialComplex::from_maximal(std::vector<std::string>(n + 1, "v"), maximal);
    CHECK(z2_betti(k) == Betti01{1, 0});
  }
}

TEST_CASE("rasterize") {
  const Frame f = frame(-1, -1, 3, 3);
  const Bitmap solid = rasterize({square(0, 0, 2, 2, "s")}, f, 4);
  CHECK(solid.width == 16);
  CHECK(solid.height == 16);
  CHECK(solid.set_count() == 64);
  CHECK(cubical_betti(solid) == Betti01{1, 0});

  const Bitmap empty = rasterize({}, f, 4);
  CHECK(empty.set_count() == 0);
  CHECK(cubical_betti(empty) == Betti01{0, 0});

  const Bitmap two = rasterize({square(0, 0, 1, 1, "a"), square(2, 2, 3, 3, "b")}, frame(-1, -1, 4, 4), 8);
  CHECK(cubical_betti(two) == Betti01{2, 0});

  CHECK(code_of([&] { rasterize({}, f, 3); }) == ErrorCode::InvalidResolution);
  CHECK(code_of([&] { rasterize({square(0, 0, 5, 1, "wide")}, f, 4); }) == ErrorCode::FrameTooSmall);
}

TEST_CASE("rasterized annulus matches per-pixel membership") {
  const Ribbon e = fig1_1_ribbon();
  const Frame f = frame(-2, -1, 4, 3);
  const Bitmap b = rasterize({Region::from_ribbon(e)}, f, 16);
  std::size_t set = 0;
  for (std::size_t j = 0; j < b.height; ++j)
    for (std::size_t i = 0; i < b.width; ++i) {
      const Point2 centre{f.min.x + Rational(static_cast<long>(2 * i + 1), 32L),
                          f.min.y + Rational(static_cast<long>(2 * j + 1), 32L)};
      const auto m = ribbon_membership(e, centre);
      const bool member = m != RibbonMembership::outside && m != RibbonMembership::in_removed_interior;
      CHECK(b.at(i, j) == member);
      set += member;
    }
  CHECK(b.set_count() == set);
  CHECK(cubical_betti(b) == Betti01{1, 1});
}

TEST_CASE("cubical connectivity conventions") {
  // diagonal touching squares: one component under 8-connectivity
  const Bitmap diag = rasterize({square(0, 0, 1, 1, "a"), square(1, 1, 2, 2, "b")}, frame(-1, -1, 3, 3), 4);
  CHECK(cubical_betti(diag).b0 == 1);

  // a square frame of four bars has one bounded hole
  const std::vector<Region> ring{square(0, 0, 4, 1, "s"), square(3, 0, 4, 4, "e"),
                                 square(0, 3, 4, 4, "n"), square(0, 0, 1, 4, "w")};
  CHECK(cubical_betti(rasterize(ring, frame(-1, -1, 5, 5), 4)) == Betti01{1, 1});
  const auto report = nerve_theorem_check(ring, frame(-1, -1, 5, 5), 16);
  CHECK(report.nerve_ranks == Betti01{1, 1});
  CHECK(report.pass());
}

TEST_CASE("cubical betti is stable when the resolution doubles") {
  Rng rng(13);
  const Frame f(pt(-1, -1), pt(13, 13));
  for (int trial = 0; trial < 10; ++trial) {
    const auto family = random_rectangle_family(rng, 6);
    const auto clearance = rectangle_clearance(family);
    REQUIRE(clearance);
    CHECK(*clearance * 16 >= 2);
    CHECK(cubical_betti(rasterize(family, f, 16)) == cubical_betti(rasterize(family, f, 32)));
  }
}

TEST_CASE("rectangle clearance") {
  const auto c = rectangle_clearance({square(0, 0, 2, 2, "a"), square(2.5, 0, 3, 2, "b")});
  REQUIRE(c);
  CHECK(*c == q(.5));
  const auto tri = Region::from_convex_polygon(loop({{0, 0}, {1, 0}, {0, 1}}), "t");
  CHECK_FALSE(rectangle_clearance({tri}));
}

TEST_CASE("nerve theorem check: hand-built cases") {
  SUBCASE("three squares with a common point") {
    const std::vector<Region> regions{square(0, 0, 4, 4, "a"), square(2, 0, 6, 4, "b"),
                                      square(1, 2, 5, 6, "c")};
    const auto r = nerve_theorem_check(regions, frame(-1, -1, 7, 7), 16);
    CHECK(r.maximal_simplices == std::vector<Simplex>{{0, 1, 2}});
    CHECK(r.nerve_ranks == Betti01{1, 0});
    CHECK(r.union_ranks == Betti01{1, 0});
    CHECK(r.pass());
  }
  SUBCASE("disjoint pair") {
    const std::vector<Region> regions{square(0, 0, 2, 2, "a"), square(4, 4, 6, 6, "b")};
    const auto r = nerve_theorem_check(regions, frame(-1, -1, 7, 7), 16);
    CHECK(r.nerve_ranks == Betti01{2, 0});
    CHECK(r.union_ranks == Betti01{2, 0});
    CHECK(r.pass());
  }
  SUBCASE("pairwise meeting with no common point") {
    const std::vector<Region> regions{
        square(0, 0, 8, 1, "base"),
        Region::from_convex_polygon(loop({{0, 0}, {2, 0}, {5, 6}, {3, 6}}), "left"),
        Region::from_convex_polygon(loop({{6, 0}, {8, 0}, {5, 6}, {3, 6}}), "right")};
    CHECK_FALSE(common_witness(regions));
    const auto r = nerve_theorem_check(regions, frame(-1, -1, 9, 7), 16);
    CHECK(r.maximal_simplices == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(r.nerve_ranks == Betti01{1, 1});
    CHECK(r.union_ranks == Betti01{1, 1});
    CHECK_FALSE(r.clearance_pixels);
    CHECK(r.pass());
  }
}

TEST_CASE("nerve theorem check rejects non-convex regions") {
  const Ribbon e = fig1_1_ribbon();
  CHECK(code_of([&] { nerve_theorem_check({Region::from_ribbon(e)}, frame(-2, -1, 4, 3), 16); }) ==
        ErrorCode::NonConvexRegion);
}
