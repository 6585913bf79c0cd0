#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbon {

/// Every failure raised by the library carries one of these codes. The CLI
/// maps each code to exactly one process exit status (see exit_code_for).
enum class ErrorCode {
  // cw_core
  TooFewVertices,
  NonSimplePolygon,
  UnknownVertex,
  UnknownCellId,
  DuplicateId,
  DegenerateTriangle,
  InvalidCell,
  // ribbon_model
  NotNested,
  ConcentricCycles,
  HoleOutsideRibbon,
  FilamentEndpointOffBoundary,
  FilamentOutsideRibbon,
  TooFewCycles,
  EmptyRibbonComplex,
  // nerve_engine
  EmptyCollection,
  CollectionTooLarge,
  NoCommonIntersection,
  // proximity
  UnsupportedEntityKind,
  UnknownProbe,
  InvalidThreshold,
  // plane_division
  PointOutsideFrame,
  FrameTooSmall,
  InvalidFrame,
  InvalidGridDensity,
  // fixedpoint
  PartialMap,
  FilamentNotInRibbon,
  VertexNotOnInnerBoundary,
  // homology_oracle
  NotDownwardClosed,
  InvalidResolution,
  NonConvexRegion,
  // io_cli
  SchemaViolation,
  UnresolvedReference,
  NonCanonicalRational,
  UnknownTarget,
  AmbiguousTarget,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Process exit status for a failure: 2 for model validation failures, 3
/// for schema and input errors, 4 for computation errors.
int exit_code_for(ErrorCode code) noexcept;

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_schema = 3;
inline constexpr int exit_computation = 4;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ribbon
