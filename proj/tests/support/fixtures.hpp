#pragma once

// Figure geometry shared by the unit and acceptance suites. Coordinates are
// written as decimals with at most three places and converted exactly.

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/cell_complex.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon::testing {

/// Exact rational for a decimal literal with at most three places.
Rational q(double value);
Point2 pt(double x, double y);
std::vector<Point2> loop(std::initializer_list<std::pair<double, double>> points);

/// Builds cycles on one complex; equal coordinates share a vertex id.
class Sketch {
 public:
  explicit Sketch(std::string name = "sketch") : cells_(std::move(name)) {}

  void name_vertex(const Point2& p, CellId id) { names_[p] = std::move(id); }
  FilledCycle cycle(const std::string& name, const std::vector<Point2>& points);
  const CellId& id_at(const Point2& p) const { return by_point_.at(p); }
  Filament filament(const Point2& outer, const Point2& inner) const {
    return {id_at(outer), id_at(inner)};
  }
  std::vector<Hole> holes(const std::vector<Point2>& markers) const;
  CellComplex& cells() { return cells_; }

 private:
  CellComplex cells_;
  std::map<Point2, CellId> by_point_;
  std::map<Point2, CellId> names_;
};

// Fig. 1.1: one ribbon, two holes.
Ribbon fig1_1_ribbon();
// Fig. 1.2: two ribbons sharing the vertex a = (2, 2); holes 2 and 3.
std::pair<Ribbon, Ribbon> fig1_2_ribbons();
// Fig. 2: three nesting cycles, innermost first, no filaments.
VortexNerve fig2_vortex();
// Fig. 3: ribbons in the order A, B', B, A', B''.
RibbonComplex fig3_complex();
// Fig. 4: one filament q -> p, three holes.
Ribbon fig4_ribbon();
Filament fig4_filament();
// Fig. 5: ribbon nerves with six holes each.
RibbonNerve fig5a_nerve();
RibbonNerve fig5b_nerve();

}  // namespace ribbon::testing
