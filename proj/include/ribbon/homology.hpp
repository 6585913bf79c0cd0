#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ribbon/nerve.hpp"
#include "ribbon/plane_division.hpp"

namespace ribbon {

struct Betti01 {
  std::size_t b0 = 0;
  std::size_t b1 = 0;

  friend bool operator==(const Betti01&, const Betti01&) = default;
};

/// Ranks of H0 and H1 over Z/2 from the 2-skeleton. Throws
/// NotDownwardClosed.
Betti01 z2_betti(const SimplicialComplex& complex);

/// Pixel grid over a frame; pixel (i, j) has centre
/// (min.x + (i + 1/2) / resolution, min.y + (j + 1/2) / resolution).
struct Bitmap {
  std::size_t width = 0;
  std::size_t height = 0;
  long resolution = 0;
  Point2 origin;
  std::vector<std::uint8_t> bits;  // row-major, j * width + i

  bool at(std::size_t i, std::size_t j) const { return bits[j * width + i] != 0; }
  std::size_t set_count() const;
};

/// A pixel is set iff its centre lies in the closed union of the regions.
/// Throws InvalidResolution (below 4) or FrameTooSmall (a region leaves the
/// frame).
Bitmap rasterize(const std::vector<Region>& regions, const Frame& frame, long resolution);

/// b0: 8-connected components of set pixels. b1: 4-connected components of
/// unset pixels that do not touch the border.
Betti01 cubical_betti(const Bitmap& bitmap);

struct NerveCheckReport {
  Betti01 nerve_ranks;
  Betti01 union_ranks;
  std::vector<Simplex> maximal_simplices;
  /// Smallest nonzero gap between parallel edge coordinates, in pixels;
  /// present only when every region is an axis-aligned rectangle.
  std::optional<Rational> clearance_pixels;

  bool pass() const noexcept { return nerve_ranks == union_ranks; }
};

/// Smallest nonzero difference between the x (resp. y) coordinates of
/// vertical (resp. horizontal) rectangle edges, in frame units. Absent when
/// some region is not an axis-aligned rectangle or all gaps are zero.
std::optional<Rational> rectangle_clearance(const std::vector<Region>& regions);

/// Compares z2_betti(nerve(regions)) with cubical_betti(rasterize(...)).
/// Throws NonConvexRegion, CollectionTooLarge, FrameTooSmall or
/// InvalidResolution.
NerveCheckReport nerve_theorem_check(const std::vector<Region>& regions, const Frame& frame,
                                     long resolution);

}  // namespace ribbon
