#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ribbon/betti.hpp"
#include "ribbon/cell_complex.hpp"
#include "ribbon/ribbon_model.hpp"

namespace ribbon {

inline constexpr int document_format_version = 1;

struct RibbonSpec {
  std::string outer;
  std::string inner;
  std::vector<Filament> filaments;
  std::vector<Hole> holes;
  bool allow_concentric = false;

  friend bool operator==(const RibbonSpec&, const RibbonSpec&) = default;
};

struct VortexSpec {
  std::vector<std::string> cycles;  // innermost first
  std::vector<Filament> filaments;

  friend bool operator==(const VortexSpec&, const VortexSpec&) = default;
};

/// Declarative content of one named complex. Edges list only those not
/// already implied by cycles or filaments.
struct ComplexEntry {
  std::map<CellId, Point2> vertices;
  std::map<CellId, std::array<CellId, 2>> edges;
  std::map<CellId, std::array<CellId, 3>> triangles;
  std::map<std::string, std::vector<CellId>> cycles;
  std::map<std::string, RibbonSpec> ribbons;
  std::map<std::string, std::vector<std::string>> ribbon_complexes;
  std::map<std::string, std::vector<std::string>> ribbon_nerves;
  std::map<std::string, VortexSpec> vortex_nerves;

  friend bool operator==(const ComplexEntry&, const ComplexEntry&) = default;
};

struct ComplexDocument {
  int format_version = document_format_version;
  std::map<std::string, ComplexEntry> complexes;
  std::vector<std::string> probes;
  std::optional<Rational> threshold;

  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Parses and checks the schema and every id reference. Geometry is not
/// checked here (see build_complex). Throws SchemaViolation (message starts
/// with a JSON pointer), UnresolvedReference, NonCanonicalRational,
/// UnknownProbe or InvalidThreshold.
ComplexDocument parse_document(std::string_view text);

/// Canonical form: compact JSON, sorted keys, every key present, rationals
/// as reduced "num/den" strings, single trailing newline.
std::string serialize_document(const ComplexDocument& document);

/// Geometric objects realised from one ComplexEntry.
struct BuiltComplex {
  CellComplex cells;
  std::map<std::string, FilledCycle> cycles;
  std::map<std::string, Ribbon> ribbons;
  std::map<std::string, RibbonComplex> ribbon_complexes;
  std::map<std::string, RibbonNerve> ribbon_nerves;
  std::map<std::string, VortexNerve> vortex_nerves;
};

/// Throws the model errors of the underlying constructors.
BuiltComplex build_complex(const std::string& name, const ComplexEntry& entry);

enum class TargetKind { cycle, ribbon, ribbon_complex, ribbon_nerve, vortex_nerve };

struct TargetRef {
  std::string complex;
  std::string name;
  TargetKind kind;
};

/// Resolves "name" when it is unique across complexes, or "complex/name".
/// Throws UnknownTarget or AmbiguousTarget.
TargetRef resolve_target(const ComplexDocument& document, std::string_view target);

/// Throws UnsupportedEntityKind for cycles.
Structure structure_of(const BuiltComplex& built, const TargetRef& ref);

}  // namespace ribbon
