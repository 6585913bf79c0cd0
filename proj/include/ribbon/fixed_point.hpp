#pragma once

#include <map>

#include "ribbon/cell_complex.hpp"
#include "ribbon/rational.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon {

/// Total self-map on the cells of a complex.
class CellMap {
 public:
  /// Throws PartialMap when some domain cell has no image, a key is not a
  /// domain cell, or an image is not a domain cell.
  CellMap(CellComplex domain, std::map<CellId, CellId> mapping);

  static CellMap identity(CellComplex domain);

  const CellComplex& domain() const noexcept { return domain_; }
  const std::map<CellId, CellId>& mapping() const noexcept { return mapping_; }
  const CellId& operator()(const CellId& cell) const;

  /// this after other, on the shared domain.
  CellMap compose(const CellMap& other) const;

 private:
  CellComplex domain_;
  std::map<CellId, CellId> mapping_;
};

/// Cells c with m(c) == c; possibly empty.
CellSet fixed_cells(const CellMap& map);

/// On the subcomplex of all filaments of the ribbon (their endpoints and
/// edges), sends the chosen filament's outer endpoint and edge to its inner
/// endpoint and fixes every other cell. Throws FilamentNotInRibbon.
CellMap filament_retraction_map(const Ribbon& ribbon, const Filament& filament);

/// Direction of the bisector of the inner-loop edges meeting at the vertex,
/// in (-pi, pi], rounded to a multiple of 1e-6. When the incoming and
/// outgoing edges point in opposite directions, the left normal of the
/// incoming edge is used. Throws VertexNotOnInnerBoundary.
Rational gradient_angle(const Ribbon& ribbon, const CellId& vertex);

/// Same computation for an explicit corner (prev -> at -> next).
Rational bisector_angle(const Point2& prev, const Point2& at, const Point2& next);

}  // namespace ribbon
