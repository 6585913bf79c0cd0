#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ribbon/geometry.hpp"

namespace ribbon {

using CellId = std::string;
using CellSet = std::set<CellId>;

enum class CellKind { vertex, edge, triangle };

/// A 0-, 1- or 2-cell named by its vertex ids. A vertex cell lists itself.
struct Cell {
  CellKind kind = CellKind::vertex;
  std::vector<CellId> vertices;

  int dimension() const noexcept { return static_cast<int>(kind); }
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct ContainmentViolation {
  CellId cell;
  std::string missing_face;  // vertex id, or "a,b" for a missing edge
};

struct IntersectionViolation {
  CellId first;
  CellId second;
  std::string detail;
};

struct ValidityReport {
  bool nonempty = false;
  std::vector<ContainmentViolation> containment;
  std::vector<IntersectionViolation> intersection;

  bool valid() const noexcept { return nonempty && containment.empty() && intersection.empty(); }
};

/// Vertices, edges and filled triangles in the plane. Vertex cells share their
/// id with the vertex they name.
class CellComplex {
 public:
  CellComplex() = default;
  explicit CellComplex(std::string name) : name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

  /// Adds a vertex cell. Throws DuplicateId when the id is taken by another
  /// cell or names a vertex at a different position.
  const CellId& add_vertex(const CellId& id, const Point2& position);

  /// Adds the edge ab unless an edge on the same endpoints exists; returns the
  /// id of the (possibly pre-existing) edge. Generated ids look like "e:a,b".
  /// Endpoints must exist (UnknownVertex) and differ (InvalidCell).
  CellId add_edge(const CellId& a, const CellId& b, std::optional<CellId> id = std::nullopt);

  /// Adds a filled triangle; vertices must exist and not be collinear
  /// (DegenerateTriangle). Faces are not added.
  CellId add_triangle(const CellId& a, const CellId& b, const CellId& c,
                      std::optional<CellId> id = std::nullopt);

  /// Raw insertion with no face bookkeeping, for building complexes that may
  /// violate the containment condition. Arity and distinctness are still
  /// enforced (InvalidCell), and triangles with known coordinates must not be
  /// degenerate.
  void insert_cell(const CellId& id, Cell cell);

  bool contains(const CellId& id) const { return cells_.contains(id); }
  const Cell& cell(const CellId& id) const;
  const Point2& position(const CellId& vertex) const;
  bool has_position(const CellId& vertex) const { return positions_.contains(vertex); }

  const std::map<CellId, Cell>& cells() const noexcept { return cells_; }
  const std::map<CellId, Point2>& positions() const noexcept { return positions_; }

  /// The cell with exactly this kind and vertex set, if present.
  std::optional<CellId> find(CellKind kind, std::vector<CellId> vertices) const;

  /// Ids of the proper faces of a cell (edges and vertices of a triangle,
  /// endpoints of an edge) that are present in the complex.
  std::vector<CellId> faces(const CellId& id) const;

  bool empty() const noexcept { return cells_.empty(); }

 private:
  std::string name_;
  std::map<CellId, Cell> cells_;
  std::map<CellId, Point2> positions_;
  std::map<std::pair<CellKind, std::vector<CellId>>, CellId> by_vertices_;
};

/// Checks the containment and intersection conditions. Intersections are
/// computed pairwise on closed geometric realizations and must equal a union
/// of closed cells of the complex.
ValidityReport validate_cw(const CellComplex& complex);

/// The cells plus all of their faces. Throws UnknownCellId.
CellSet closure(const CellComplex& complex, const CellSet& cells);

/// Combinatorial frontier of closure(cells): facets of top-dimensional cells
/// that bound exactly one of them, together with cells shared with the rest
/// of the complex, closed under faces.
CellSet boundary(const CellComplex& complex, const CellSet& cells);

/// closure(cells) minus boundary(cells).
CellSet interior(const CellComplex& complex, const CellSet& cells);

}  // namespace ribbon
