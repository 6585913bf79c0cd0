#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbon/cell_complex.hpp"
#include "ribbon/geometry.hpp"

namespace ribbon {

/// A simple closed polygonal loop of complex vertices, taken together with
/// its interior.
struct FilledCycle {
  std::string label;
  std::vector<CellId> loop;
  Polygon polygon;

  const std::vector<Point2>& points() const noexcept { return polygon.vertices(); }
  std::optional<std::size_t> index_of(const CellId& vertex) const;

  friend bool operator==(const FilledCycle&, const FilledCycle&) = default;
};

/// Registers a cycle on existing vertices of the complex, adding any missing
/// loop edges. Throws UnknownVertex, TooFewVertices or NonSimplePolygon.
FilledCycle make_filled_cycle(CellComplex& complex, const std::vector<CellId>& loop,
                              std::string label);

/// Every inner vertex lies strictly inside outer and the loops never meet.
bool is_nested(const FilledCycle& inner, const FilledCycle& outer);

/// Vertex centroids coincide exactly.
bool is_concentric(const FilledCycle& a, const FilledCycle& b);

struct Hole {
  Point2 marker;
  std::string label;

  friend bool operator==(const Hole&, const Hole&) = default;
};

/// Edge from a vertex of the outer loop to a vertex of the inner loop.
struct Filament {
  CellId outer_vertex;
  CellId inner_vertex;

  friend bool operator==(const Filament&, const Filament&) = default;
};

struct RibbonOptions {
  bool allow_concentric = false;
};

/// Closure of the outer filled cycle minus the open interior of the inner
/// one. Both loops belong to the ribbon; hole markers and filaments decorate
/// the annulus between them.
class Ribbon {
 public:
  /// Throws NotNested, ConcentricCycles, HoleOutsideRibbon,
  /// FilamentEndpointOffBoundary or FilamentOutsideRibbon.
  Ribbon(FilledCycle outer, FilledCycle inner, std::vector<Filament> filaments,
         std::vector<Hole> holes, std::string label, RibbonOptions options = {});

  const FilledCycle& outer() const noexcept { return outer_; }
  const FilledCycle& inner() const noexcept { return inner_; }
  const std::vector<Filament>& filaments() const noexcept { return filaments_; }
  const std::vector<Hole>& holes() const noexcept { return holes_; }
  const std::string& label() const noexcept { return label_; }
  bool allow_concentric() const noexcept { return allow_concentric_; }

  /// Endpoint positions (outer, inner) of a filament of this ribbon.
  std::pair<Point2, Point2> filament_segment(const Filament& filament) const;
  bool has_filament(const Filament& filament) const;

  friend bool operator==(const Ribbon&, const Ribbon&) = default;

 private:
  FilledCycle outer_;
  FilledCycle inner_;
  std::vector<Filament> filaments_;
  std::vector<Hole> holes_;
  std::string label_;
  bool allow_concentric_ = false;
};

Ribbon make_ribbon(FilledCycle outer, FilledCycle inner, std::vector<Filament> filaments,
                   std::vector<Hole> holes, std::string label = {}, RibbonOptions options = {});

enum class RibbonMembership {
  in_ribbon,
  on_outer_boundary,
  on_inner_boundary,
  in_removed_interior,
  outside,
};

/// Filament points fall in the annulus and therefore report in_ribbon.
RibbonMembership ribbon_membership(const Ribbon& ribbon, const Point2& p);

/// Vertices, loop edges and filament edges of one ribbon.
CellComplex to_cell_complex(const Ribbon& ribbon);

/// Nonempty collection of ribbons.
class RibbonComplex {
 public:
  /// Throws EmptyRibbonComplex.
  RibbonComplex(std::vector<Ribbon> ribbons, std::string label = {});

  const std::vector<Ribbon>& ribbons() const noexcept { return ribbons_; }
  const std::string& label() const noexcept { return label_; }

  friend bool operator==(const RibbonComplex&, const RibbonComplex&) = default;

 private:
  std::vector<Ribbon> ribbons_;
  std::string label_;
};

/// Ribbons sharing a common point. Construction through make_ribbon_nerve
/// (nerve.hpp) checks the common point; the vortex decomposition below
/// produces nerves whose ribbons share a whole cycle.
struct RibbonNerve {
  std::vector<Ribbon> ribbons;
  std::string label;

  friend bool operator==(const RibbonNerve&, const RibbonNerve&) = default;
};

/// Chain of k >= 2 strictly nesting filled cycles stored innermost first,
/// with filaments between adjacent cycles.
class VortexNerve {
 public:
  /// Throws TooFewCycles, NotNested, FilamentEndpointOffBoundary or
  /// FilamentOutsideRibbon.
  VortexNerve(std::vector<FilledCycle> cycles, std::vector<Filament> filaments,
              std::string label = {});

  const std::vector<FilledCycle>& cycles() const noexcept { return cycles_; }
  const std::vector<Filament>& filaments() const noexcept { return filaments_; }
  const std::string& label() const noexcept { return label_; }

  /// Adjacent pairs whose vertex centroids coincide (metadata only).
  std::vector<std::size_t> concentric_pairs() const;

  friend bool operator==(const VortexNerve&, const VortexNerve&) = default;

 private:
  std::vector<FilledCycle> cycles_;
  std::vector<Filament> filaments_;
  std::string label_;
};

/// The k-1 ribbons between adjacent cycles, innermost first. Ribbon i has
/// cycle i as inner loop and cycle i+1 as outer loop.
std::vector<Ribbon> ribbons_of_vortex_nerve(const VortexNerve& nerve);

/// The k-2 ribbon nerves formed by consecutive ribbons. Throws TooFewCycles
/// when k < 3.
std::vector<RibbonNerve> ribbon_nerves_of_vortex_nerve(const VortexNerve& nerve);

}  // namespace ribbon
