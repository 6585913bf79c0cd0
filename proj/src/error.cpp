#include "ribbon/error.hpp"

namespace ribbon {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NonSimplePolygon: return "NonSimplePolygon";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownCellId: return "UnknownCellId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::InvalidCell: return "InvalidCell";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::ConcentricCycles: return "ConcentricCycles";
    case ErrorCode::HoleOutsideRibbon: return "HoleOutsideRibbon";
    case ErrorCode::FilamentEndpointOffBoundary: return "FilamentEndpointOffBoundary";
    case ErrorCode::FilamentOutsideRibbon: return "FilamentOutsideRibbon";
    case ErrorCode::TooFewCycles: return "TooFewCycles";
    case ErrorCode::EmptyRibbonComplex: return "EmptyRibbonComplex";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::CollectionTooLarge: return "CollectionTooLarge";
    case ErrorCode::NoCommonIntersection: return "NoCommonIntersection";
    case ErrorCode::UnsupportedEntityKind: return "UnsupportedEntityKind";
    case ErrorCode::UnknownProbe: return "UnknownProbe";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::PointOutsideFrame: return "PointOutsideFrame";
    case ErrorCode::FrameTooSmall: return "FrameTooSmall";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::InvalidGridDensity: return "InvalidGridDensity";
    case ErrorCode::PartialMap: return "PartialMap";
    case ErrorCode::FilamentNotInRibbon: return "FilamentNotInRibbon";
    case ErrorCode::VertexNotOnInnerBoundary: return "VertexNotOnInnerBoundary";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::InvalidResolution: return "InvalidResolution";
    case ErrorCode::NonConvexRegion: return "NonConvexRegion";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::NonCanonicalRational: return "NonCanonicalRational";
    case ErrorCode::UnknownTarget: return "UnknownTarget";
    case ErrorCode::AmbiguousTarget: return "AmbiguousTarget";
  }
  return "Unknown";
}


int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooFewVertices:
    case ErrorCode::NonSimplePolygon:
    case ErrorCode::UnknownVertex:
    case ErrorCode::UnknownCellId:
    case ErrorCode::DuplicateId:
    case ErrorCode::DegenerateTriangle:
    case ErrorCode::InvalidCell:
    case ErrorCode::NotNested:
    case ErrorCode::ConcentricCycles:
    case ErrorCode::HoleOutsideRibbon:
    case ErrorCode::FilamentEndpointOffBoundary:
    case ErrorCode::FilamentOutsideRibbon:
    case ErrorCode::TooFewCycles:
    case ErrorCode::EmptyRibbonComplex:
    case ErrorCode::NoCommonIntersection:
    case ErrorCode::NonConvexRegion:
      return exit_validation;
    case ErrorCode::SchemaViolation:
    case ErrorCode::UnresolvedReference:
    case ErrorCode::NonCanonicalRational:
    case ErrorCode::UnknownTarget:
    case ErrorCode::AmbiguousTarget:
    case ErrorCode::UnknownProbe:
    case ErrorCode::InvalidThreshold:
    case ErrorCode::InvalidFrame:
    case ErrorCode::InvalidGridDensity:
    case ErrorCode::InvalidResolution:
      return exit_schema;
    case ErrorCode::EmptyCollection:
    case ErrorCode::CollectionTooLarge:
    case ErrorCode::UnsupportedEntityKind:
    case ErrorCode::PointOutsideFrame:
    case ErrorCode::FrameTooSmall:
    case ErrorCode::PartialMap:
    case ErrorCode::FilamentNotInRibbon:
    case ErrorCode::VertexNotOnInnerBoundary:
    case ErrorCode::NotDownwardClosed:
      return exit_computation;
  }
  return exit_computation;
}

}  // namespace ribbon
