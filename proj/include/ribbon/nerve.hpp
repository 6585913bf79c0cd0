#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ribbon/geometry.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon {

/// Closed planar set: the union of the closed outer loops minus the open
/// interiors of the excluded loops.
class Region {
 public:
  Region(std::vector<Polygon> outer, std::vector<Polygon> excluded, std::string label);

  static Region from_ribbon(const Ribbon& ribbon);
  static Region from_cycle(const FilledCycle& cycle);
  /// Throws NonConvexRegion when the loop is not convex.
  static Region from_convex_polygon(std::vector<Point2> loop, std::string label);

  bool contains(const Point2& p) const;

  const std::vector<Polygon>& outer() const noexcept { return outer_; }
  const std::vector<Polygon>& excluded() const noexcept { return excluded_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::vector<Polygon> outer_;
  std::vector<Polygon> excluded_;
  std::string label_;
};

using Simplex = std::vector<std::size_t>;

/// Abstract simplicial complex on indexed, labelled vertices.
struct SimplicialComplex {
  std::vector<std::string> labels;
  std::set<Simplex> simplices;

  /// Every nonempty subset of every listed simplex.
  static SimplicialComplex from_maximal(std::vector<std::string> labels,
                                        const std::vector<Simplex>& maximal);

  bool contains(Simplex simplex) const;
  bool downward_closed() const;
  /// Simplices with no cofacet, sorted. Assumes downward closure.
  std::vector<Simplex> maximal_simplices() const;
  int dimension() const;
};

/// First point, in a fixed deterministic order, lying in every region.
/// Candidates are the arrangement vertices of all region loops (loop vertices
/// and pairwise segment crossings) plus loop centroids, which suffices for
/// closed polygonal regions. Throws EmptyCollection.
std::optional<Point2> common_witness(const std::vector<Region>& regions);

/// All nonempty subcollections with a common point. Throws EmptyCollection
/// or CollectionTooLarge (more than max_nerve_regions regions).
SimplicialComplex nerve(const std::vector<Region>& regions);

inline constexpr std::size_t max_nerve_regions = 20;

/// Maximal groups of ribbons sharing a common point, ordered by their
/// smallest ribbon index. Singletons are kept, so every ribbon appears.
std::vector<RibbonNerve> ribbon_nerve(const RibbonComplex& complex);

/// Throws EmptyCollection or NoCommonIntersection.
RibbonNerve make_ribbon_nerve(std::vector<Ribbon> ribbons, std::string label = {});

}  // namespace ribbon
