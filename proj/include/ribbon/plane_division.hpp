#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ribbon/geometry.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon {

/// Axis-aligned bounding rectangle. Throws InvalidFrame unless min is
/// strictly below and left of max.
struct Frame {
  Point2 min;
  Point2 max;

  Frame(Point2 lo, Point2 hi);

  bool contains(const Point2& p) const;
  /// Every loop vertex lies strictly inside the rectangle.
  bool strictly_contains(const Polygon& loop) const;
};

/// Frame extending the outer loop's bounding box by `margin` on every side.
Frame frame_around(const Ribbon& ribbon, const Rational& margin);

enum class RegionLabel { pi1_outside, pi2_annulus, pi3_inner };

std::string_view to_string(RegionLabel label);

/// Outer-loop points belong to the annulus region and inner-loop points to
/// the inner region. Throws FrameTooSmall or PointOutsideFrame.
RegionLabel classify_region(const Ribbon& ribbon, const Frame& frame, const Point2& p);

/// A sampled point of one region with a positive squared distance to every
/// boundary of that region, so the open disk of `radius` stays inside it.
struct ClearanceWitness {
  RegionLabel region;
  Point2 point;
  Rational clearance2;
  Rational radius;  // rational lower bound of sqrt(clearance2)
};

struct PartitionReport {
  std::size_t samples = 0;
  std::size_t multi_labeled = 0;  // points in more than one region
  std::size_t unlabeled = 0;      // points in no region
  std::size_t mismatched = 0;     // classify_region disagrees with membership
  std::size_t outside_frame = 0;
  std::array<std::size_t, 3> counts{};  // per RegionLabel
  std::array<std::optional<ClearanceWitness>, 3> witnesses;

  bool singly_labeled() const noexcept {
    return multi_labeled == 0 && unlabeled == 0 && mismatched == 0;
  }
  bool all_realized() const noexcept;
  bool all_cleared() const noexcept;
  bool ok() const noexcept { return singly_labeled() && outside_frame == 0 && all_realized() && all_cleared(); }
};

/// Samples a density x density cell-centred lattice over the frame plus all
/// loop vertices and edge midpoints, and checks each point against three
/// membership predicates computed separately from classify_region.
/// Throws FrameTooSmall or InvalidGridDensity (density 0).
PartitionReport verify_partition(const Ribbon& ribbon, const Frame& frame, std::size_t density);

}  // namespace ribbon
