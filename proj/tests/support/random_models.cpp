#include "random_models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "ribbon/error.hpp"

namespace ribbon::testing {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Point2 ipt(long x, long y) { return {Rational(x), Rational(y)}; }

std::vector<Point2> rect_loop(long x0, long y0, long x1, long y1) {
  return {ipt(x0, y0), ipt(x1, y0), ipt(x1, y1), ipt(x0, y1)};
}

Rational quarter(double v) { return Rational(std::lround(v * 4), 4L); }

std::vector<Point2> star_loop(Rng& rng, const Point2& centre, double radius, std::size_t n) {
  std::vector<Point2> out;
  const double c_x = to_double(centre.x);
  const double c_y = to_double(centre.y);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2 * std::numbers::pi * (static_cast<double>(k) + uniform_real(rng, .2, .8)) /
                         static_cast<double>(n);
    const double r = radius * uniform_real(rng, .8, 1.0);
    out.push_back({quarter(c_x + r * std::cos(angle)), quarter(c_y + r * std::sin(angle))});
  }
  return out;
}

}  // namespace

Ribbon random_rect_ribbon(Rng& rng, const std::string& label) {
  for (;;) {
    const long x0 = uniform(rng, -20, 14), x1 = uniform(rng, x0 + 6, 20);
    const long y0 = uniform(rng, -20, 14), y1 = uniform(rng, y0 + 6, 20);
    const long ix0 = uniform(rng, x0 + 1, x1 - 3), ix1 = uniform(rng, ix0 + 1, x1 - 1);
    const long iy0 = uniform(rng, y0 + 1, y1 - 3), iy1 = uniform(rng, iy0 + 1, y1 - 1);
    if (x0 + x1 == ix0 + ix1 && y0 + y1 == iy0 + iy1) continue;

    Sketch s(label);
    FilledCycle outer = s.cycle(label + ".outer", rect_loop(x0, y0, x1, y1));
    FilledCycle inner = s.cycle(label + ".inner", rect_loop(ix0, iy0, ix1, iy1));

    std::vector<Point2> markers;
    const long wanted = uniform(rng, 0, 3);
    for (int attempt = 0; attempt < 40 && static_cast<long>(markers.size()) < wanted; ++attempt) {
      const long hx = uniform(rng, x0 + 1, x1 - 1), hy = uniform(rng, y0 + 1, y1 - 1);
      if (hx >= ix0 && hx <= ix1 && hy >= iy0 && hy <= iy1) continue;
      markers.push_back(ipt(hx, hy));
    }

    const auto outer_pts = outer.points();
    const auto inner_pts = inner.points();
    std::vector<Filament> filaments;
    std::vector<std::size_t> corners{0, 1, 2, 3};
    std::shuffle(corners.begin(), corners.end(), rng);
    const long filament_count = uniform(rng, 0, 2);
    for (long i = 0; i < filament_count; ++i)
      filaments.push_back(s.filament(outer_pts[corners[i]], inner_pts[corners[i]]));

    try {
      return make_ribbon(outer, inner, filaments, s.holes(markers), label);
    } catch (const Error&) {
      // rejected sample, draw again
    }
  }
}

Ribbon random_star_ribbon(Rng& rng, const std::string& label) {
  for (;;) {
    Sketch s(label);
    const Point2 offset = ipt(uniform(rng, -3, 3), uniform(rng, -3, 3));
    try {
      FilledCycle outer = s.cycle(label + ".outer",
                                  star_loop(rng, ipt(0, 0), uniform_real(rng, 16, 20),
                                            static_cast<std::size_t>(uniform(rng, 6, 10))));
      FilledCycle inner = s.cycle(label + ".inner",
                                  star_loop(rng, offset, uniform_real(rng, 5, 7),
                                            static_cast<std::size_t>(uniform(rng, 6, 10))));
      return make_ribbon(outer, inner, {}, {}, label);
    } catch (const Error&) {
    }
  }
}

Region rectangle(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1,
                 const std::string& label) {
  return Region::from_convex_polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, label);
}

std::vector<Region> random_rectangle_family(Rng& rng, std::size_t max_count) {
  // Units are eighths of a frame unit.
  std::vector<std::array<long, 4>> boxes;
  if (max_count >= 4 && uniform(rng, 0, 1)) {
    // Four bars around a random window, each overhanging by a random amount,
    // so the union usually has a hole.
    const long x0 = uniform(rng, 8, 40), x1 = uniform(rng, x0 + 16, 88);
    const long y0 = uniform(rng, 8, 40), y1 = uniform(rng, y0 + 16, 88);
    auto thick = [&] { return uniform(rng, 2, 6); };
    auto over = [&] { return uniform(rng, 0, 6); };
    boxes.push_back({x0 - over(), y0 - thick(), x1 + over(), y0 + thick()});
    boxes.push_back({x0 - over(), y1 - thick(), x1 + over(), y1 + thick()});
    boxes.push_back({x0 - thick(), y0 - over(), x0 + thick(), y1 + over()});
    boxes.push_back({x1 - thick(), y0 - over(), x1 + thick(), y1 + over()});
  }
  const auto extra = static_cast<std::size_t>(
      uniform(rng, boxes.empty() ? 1 : 0, static_cast<long>(max_count - boxes.size())));
  for (std::size_t i = 0; i < extra; ++i) {
    const bool bar = uniform(rng, 0, 2) > 0;
    long w = bar ? uniform(rng, 24, 80) : uniform(rng, 4, 48);
    long h = bar ? uniform(rng, 4, 12) : uniform(rng, 4, 48);
    if (uniform(rng, 0, 1)) std::swap(w, h);
    const long x = uniform(rng, 0, 96 - w), y = uniform(rng, 0, 96 - h);
    boxes.push_back({x, y, x + w, y + h});
  }
  std::shuffle(boxes.begin(), boxes.end(), rng);
  std::vector<Region> out;
  for (const auto& [x0, y0, x1, y1] : boxes)
    out.push_back(rectangle(Rational(x0, 8L), Rational(y0, 8L), Rational(x1, 8L), Rational(y1, 8L),
                            "R" + std::to_string(out.size() + 1)));
  return out;
}

}  // namespace ribbon::testing
