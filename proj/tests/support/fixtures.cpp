#include "fixtures.hpp"

#include <cmath>

#include "ribbon/nerve.hpp"

namespace ribbon::testing {

namespace {

const std::vector<Point2>& outer_a() {
  static const auto l = loop({{0, 0}, {1, .5}, {2, 0}, {3, .5}, {3, 1.5}, {2, 2}, {1, 1.5}, {0, 2},
                              {-1, 1.5}, {-1, .5}});
  return l;
}
const std::vector<Point2>& inner_a() {
  static const auto l = loop({{0, .25}, {1, .75}, {2, .25}, {2.5, .5}, {2.5, 1.25}, {2, 1.55},
                              {1, 1.25}, {0, 1.5}, {-.55, 1.25}, {-.55, .75}});
  return l;
}
const std::vector<Point2>& outer_b() {
  static const auto l = loop({{2, 2}, {1, 2.25}, {1, 3.55}, {2.25, 3.85}, {3.5, 3.25}, {3.5, 2.25}});
  return l;
}
const std::vector<Point2>& inner_b() {
  static const auto l =
      loop({{2, 2.25}, {1.25, 2.5}, {1.25, 3}, {2.25, 3.25}, {3.25, 3}, {3.25, 2.35}});
  return l;
}
const std::vector<Point2>& outer_b1() {
  static const auto l = loop({{2, 2}, {1, 2}, {0, 3}, {-.2, 3.25}, {-1, 3.25}, {-1, 2.25},
                              {0, 2.15}, {1, 1.75}});
  return l;
}
const std::vector<Point2>& inner_b1() {
  static const auto l = loop({{-.85, 2.75}, {-.85, 2.35}, {0, 2.35}, {.25, 2.15}, {.25, 2.45}});
  return l;
}
const std::vector<Point2>& holes_b() {
  static const auto l = loop({{2.3, 3.41}, {2.5, 3.61}, {2.8, 3.31}});
  return l;
}
const std::vector<Point2>& holes_a3() {
  static const auto l = loop({{-.8, 1.05}, {2.8, .85}, {2.8, 1.2}});
  return l;
}

std::vector<Point2> replace(std::vector<Point2> points, const Point2& from, const Point2& to) {
  for (auto& p : points)
    if (p == from) p = to;
  return points;
}

}  // namespace

Rational q(double value) { return Rational(std::llround(value * 1000), 1000LL); }

Point2 pt(double x, double y) { return {q(x), q(y)}; }

std::vector<Point2> loop(std::initializer_list<std::pair<double, double>> points) {
  std::vector<Point2> out;
  for (const auto& [x, y] : points) out.push_back(pt(x, y));
  return out;
}

FilledCycle Sketch::cycle(const std::string& name, const std::vector<Point2>& points) {
  std::vector<CellId> ids;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = by_point_.find(points[i]);
    if (it == by_point_.end()) {
      auto named = names_.find(points[i]);
      CellId id = named != names_.end() ? named->second : name + "." + std::to_string(i);
      cells_.add_vertex(id, points[i]);
      it = by_point_.emplace(points[i], id).first;
    }
    ids.push_back(it->second);
  }
  return make_filled_cycle(cells_, ids, name);
}

std::vector<Hole> Sketch::holes(const std::vector<Point2>& markers) const {
  std::vector<Hole> out;
  for (std::size_t i = 0; i < markers.size(); ++i) out.push_back({markers[i], "h" + std::to_string(i + 1)});
  return out;
}

Ribbon fig1_1_ribbon() {
  Sketch s("fig1_1");
  auto inner = loop({{0, .25}, {1, .75}, {2, .25}, {2.5, .5}, {2.5, .75}, {2, 1.35}, {1, 1.25},
                     {0, 1.5}, {-.55, 1.25}, {-.55, .75}});
  return make_ribbon(s.cycle("cycA", outer_a()), s.cycle("cycB", inner), {},
                     s.holes(loop({{-.8, 1.05}, {2.8, .55}})), "rbE");
}

std::pair<Ribbon, Ribbon> fig1_2_ribbons() {
  Sketch s("fig1_2");
  s.name_vertex(pt(2, 2), "a");
  Ribbon a = make_ribbon(s.cycle("rbA.outer", outer_a()), s.cycle("rbA.inner", inner_a()), {},
                         s.holes(loop({{-.8, 1.05}, {2.8, .85}})), "rbA");
  Ribbon b = make_ribbon(s.cycle("rbB.outer", outer_b()), s.cycle("rbB.inner", inner_b()), {},
                         s.holes(holes_b()), "rbB");
  return {a, b};
}

VortexNerve fig2_vortex() {
  Sketch s("fig2");
  auto a = s.cycle("cycA", loop({{0, .35}, {1, .85}, {2, .35}, {2.3, .65}, {2.3, .85}, {2, 1.05},
                                 {1, 1.15}, {0, 1.25}, {-.35, 1}, {-.35, .75}}));
  auto a1 = s.cycle("cycA'", loop({{0, .25}, {1, .75}, {2, .25}, {2.5, .5}, {2.5, 1}, {2, 1.35},
                                   {1, 1.55}, {0, 1.85}, {-.55, 1.25}, {-.55, .75}}));
  auto b = s.cycle("cycB", loop({{0, 0}, {1, .5}, {2, 0}, {3, .5}, {3, 1.8}, {2, 2}, {1, 2.5},
                                 {0, 2.25}, {-1, 1.5}, {-1, .5}}));
  return VortexNerve({a, a1, b}, {}, "vNrvE");
}

RibbonComplex fig3_complex() {
  Sketch s("fig3");
  s.name_vertex(pt(2, 2), "a");
  Ribbon a = make_ribbon(s.cycle("rbA.outer", outer_a()), s.cycle("rbA.inner", inner_a()), {},
                         s.holes(holes_a3()), "rbA");
  Ribbon b = make_ribbon(s.cycle("rbB.outer", outer_b()), s.cycle("rbB.inner", inner_b()), {},
                         s.holes(holes_b()), "rbB");
  Ribbon b1 = make_ribbon(s.cycle("rbB'.outer", outer_b1()), s.cycle("rbB'.inner", inner_b1()),
                          {}, {}, "rbB'");
  Ribbon a1 = make_ribbon(
      s.cycle("rbA'.outer", loop({{7, .25}, {7, 1.25}, {4, 1.25}, {4, .25}})),
      s.cycle("rbA'.inner", loop({{6.5, .35}, {6.25, 1}, {5.5, .75}, {4.5, 1}, {4.5, .35}, {5.5, .45}})),
      {}, {}, "rbA'");
  Ribbon b2 = make_ribbon(
      s.cycle("rbB''.outer", loop({{6, 1.75}, {6, 2}, {5, 3.25}, {4.5, 3.25}, {4.5, 1.75}})),
      s.cycle("rbB''.inner", loop({{5.75, 2}, {5, 2.75}, {4.75, 2.75}, {4.75, 2}})), {}, {},
      "rbB''");
  return RibbonComplex({a, b1, b, a1, b2}, "rbxK");
}

Ribbon fig4_ribbon() {
  Sketch s("fig4");
  s.name_vertex(pt(1, .5), "q");
  s.name_vertex(pt(1, .75), "p");
  auto inner = loop({{0, .25}, {1, .75}, {2, .25}, {2.5, .5}, {2.5, 1}, {2, 1.35}, {1, 1.25},
                     {0, 1.5}, {-.55, 1.25}, {-.55, .75}});
  FilledCycle outer = s.cycle("cycA", outer_a());
  FilledCycle in = s.cycle("cycB", inner);
  return make_ribbon(outer, in, {s.filament(pt(1, .5), pt(1, .75))},
                     s.holes(loop({{-.8, 1.3}, {-.8, .8}, {0, 1.8}})), "rbE");
}

Filament fig4_filament() { return {"q", "p"}; }

RibbonNerve fig5a_nerve() {
  Sketch s("fig5a");
  s.name_vertex(pt(2, 2), "a");
  Ribbon a = make_ribbon(s.cycle("rbA.outer", outer_a()), s.cycle("rbA.inner", inner_a()), {},
                         s.holes(holes_a3()), "rbA");
  Ribbon b = make_ribbon(s.cycle("rbB.outer", outer_b()), s.cycle("rbB.inner", inner_b()), {},
                         s.holes(holes_b()), "rbB");
  Ribbon b1 = make_ribbon(s.cycle("rbB'.outer", outer_b1()), s.cycle("rbB'.inner", inner_b1()),
                          {}, {}, "rbB'");
  return make_ribbon_nerve({a, b1, b}, "rbNrvE");
}

RibbonNerve fig5b_nerve() {
  Sketch s("fig5b");
  s.name_vertex(pt(2, 2), "a");
  s.name_vertex(pt(1, 1.5), "a'");
  Ribbon a = make_ribbon(s.cycle("rbA'.outer", replace(outer_a(), pt(-1, 1.5), pt(-1, 1.3))),
                         s.cycle("rbA'.inner", replace(inner_a(), pt(1, 1.25), pt(1, 1.05))), {},
                         s.holes(holes_a3()), "rbA'");
  Ribbon b = make_ribbon(s.cycle("rbB'.outer", replace(outer_b(), pt(1, 2.25), pt(1, 1.5))),
                         s.cycle("rbB'.inner", inner_b()), {}, s.holes(holes_b()), "rbB'");
  return make_ribbon_nerve({a, b}, "rbNrvE'");
}

}  // namespace ribbon::testing
