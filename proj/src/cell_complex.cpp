#include "ribbon/cell_complex.hpp"

#include <algorithm>
#include <deque>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

std::vector<CellId> sorted(std::vector<CellId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::size_t arity(CellKind kind) { return static_cast<std::size_t>(kind) + 1; }

std::string join(const std::vector<CellId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ",";
    out += id;
  }
  return out;
}

// Closed convex realization of a cell, or of the intersection of two cells.
// dim -1 = empty, 0 = point, 1 = segment, 2 = convex polygon (ccw).
struct ConvexPiece {
  int dim = -1;
  std::vector<Point2> points;
};

bool in_triangle(const Point2& p, const std::vector<Point2>& tri) {
  int s0 = cross(tri[0], tri[1], p).sign();
  int s1 = cross(tri[1], tri[2], p).sign();
  int s2 = cross(tri[2], tri[0], p).sign();
  bool has_neg = s0 < 0 || s1 < 0 || s2 < 0;
  bool has_pos = s0 > 0 || s1 > 0 || s2 > 0;
  return !(has_neg && has_pos);
}

std::vector<Point2> ccw(std::vector<Point2> tri) {
  if (cross(tri[0], tri[1], tri[2]) < 0) std::swap(tri[1], tri[2]);
  return tri;
}

// Reduces a point cloud lying in a convex set to its convex piece.
ConvexPiece from_points(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return {};
  if (pts.size() == 1) return {0, pts};
  // monotone chain hull
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  if (hull.size() <= 2) return {1, {pts.front(), pts.back()}};
  return {2, hull};
}

ConvexPiece clip_segment(const Point2& a, const Point2& b, const std::vector<Point2>& tri) {
  std::vector<Point2> t = ccw(tri);
  Rational lo(0), hi(1);
  for (int i = 0; i < 3; ++i) {
    const Point2& u = t[i];
    const Point2& v = t[(i + 1) % 3];
    Rational fa = cross(u, v, a);
    Rational fb = cross(u, v, b);
    // f(s) = fa + s (fb - fa) >= 0
    Rational slope = fb - fa;
    if (slope == 0) {
      if (fa < 0) return {};
      continue;
    }
    Rational root = -fa / slope;
    if (slope > 0)
      lo = std::max(lo, root);
    else
      hi = std::min(hi, root);
  }
  if (hi < lo) return {};
  Point2 p = a + lo * (b - a);
  if (hi == lo) return {0, {p}};
  return {1, {p, a + hi * (b - a)}};
}

ConvexPiece clip_triangles(const std::vector<Point2>& first, const std::vector<Point2>& second) {
  std::vector<Point2> poly = first;
  std::vector<Point2> clip = ccw(second);
  for (int i = 0; i < 3 && !poly.empty(); ++i) {
    const Point2& u = clip[i];
    const Point2& v = clip[(i + 1) % 3];
    std::vector<Point2> out;
    for (std::size_t j = 0; j < poly.size(); ++j) {
      const Point2& p = poly[j];
      const Point2& q = poly[(j + 1) % poly.size()];
      Rational fp = cross(u, v, p);
      Rational fq = cross(u, v, q);
      if (fq >= 0) {
        if (fp < 0) out.push_back(p + (fp / (fp - fq)) * (q - p));
        out.push_back(q);
      } else if (fp >= 0) {
        out.push_back(p + (fp / (fp - fq)) * (q - p));
      }
    }
    poly = std::move(out);
  }
  return from_points(std::move(poly));
}

ConvexPiece intersect(const ConvexPiece& a, const ConvexPiece& b) {
  if (a.dim > b.dim) return intersect(b, a);
  const auto& p = a.points;
  const auto& q = b.points;
  if (a.dim == 0) {
    bool hit = b.dim == 0   ? p[0] == q[0]
               : b.dim == 1 ? on_segment(p[0], q[0], q[1])
                            : in_triangle(p[0], q);
    return hit ? a : ConvexPiece{};
  }
  if (a.dim == 1 && b.dim == 1) {
    auto hit = intersect_segments(p[0], p[1], q[0], q[1]);
    switch (hit.kind) {
      case SegmentIntersection::Kind::none: return {};
      case SegmentIntersection::Kind::point: return {0, {hit.first}};
      case SegmentIntersection::Kind::overlap: return {1, {hit.first, hit.second}};
    }
  }
  if (a.dim == 1) return clip_segment(p[0], p[1], q);
  return clip_triangles(p, q);
}

bool covered_point(const CellComplex& k, const Point2& x) {
  for (const auto& [id, pos] : k.positions())
    if (pos == x && k.contains(id)) return true;
  return false;
}

bool covered_segment(const CellComplex& k, const Point2& c, const Point2& d) {
  bool use_x = c.x != d.x;
  auto key = [use_x](const Point2& p) -> const Rational& { return use_x ? p.x : p.y; };
  Rational start = std::min(key(c), key(d));
  Rational stop = std::max(key(c), key(d));
  std::vector<std::pair<Rational, Rational>> pieces;
  for (const auto& [id, cell] : k.cells()) {
    if (cell.kind != CellKind::edge) continue;
    if (!k.has_position(cell.vertices[0]) || !k.has_position(cell.vertices[1])) continue;
    const Point2& u = k.position(cell.vertices[0]);
    const Point2& v = k.position(cell.vertices[1]);
    if (on_segment(u, c, d) && on_segment(v, c, d))
      pieces.emplace_back(std::min(key(u), key(v)), std::max(key(u), key(v)));
  }
  std::sort(pieces.begin(), pieces.end());
  Rational reach = start;
  for (const auto& [lo, hi] : pieces) {
    if (lo > reach) return false;
    reach = std::max(reach, hi);
    if (reach >= stop) return true;
  }
  return false;
}

bool covered_polygon(const CellComplex& k, const std::vector<Point2>& poly) {
  Rational target = abs(signed_area2(poly));
  Rational total;
  for (const auto& [id, cell] : k.cells()) {
    if (cell.kind != CellKind::triangle) continue;
    std::vector<Point2> tri;
    for (const auto& v : cell.vertices) {
      if (!k.has_position(v)) break;
      tri.push_back(k.position(v));
    }
    if (tri.size() != 3) continue;
    bool inside = std::all_of(tri.begin(), tri.end(), [&](const Point2& p) {
      for (std::size_t i = 0; i < poly.size(); ++i)
        if (cross(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
      return true;
    });
    if (inside) total += abs(signed_area2(tri));
  }
  return total == target;
}

std::string describe(const ConvexPiece& piece) {
  auto fmt = [](const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; };
  switch (piece.dim) {
    case 0: return "meet at " + fmt(piece.points[0]) + ", which is not a vertex";
    case 1:
      return "overlap on " + fmt(piece.points[0]) + "-" + fmt(piece.points[1]) +
             ", which is not a union of edges";
    default: return "overlap on a 2-dimensional region not tiled by triangles";
  }
}

}  // namespace

const CellId& CellComplex::add_vertex(const CellId& id, const Point2& position) {
  if (auto it = positions_.find(id); it != positions_.end()) {
    if (!(it->second == position))
      throw Error(ErrorCode::DuplicateId, "vertex '" + id + "' already has another position");
    return it->first;
  }
  if (cells_.contains(id))
    throw Error(ErrorCode::DuplicateId, "cell id '" + id + "' is already in use");
  positions_.emplace(id, position);
  insert_cell(id, Cell{CellKind::vertex, {id}});
  return positions_.find(id)->first;
}

CellId CellComplex::add_edge(const CellId& a, const CellId& b, std::optional<CellId> id) {
  for (const auto& v : {a, b})
    if (!positions_.contains(v))
      throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + v + "' is not a vertex");
  if (a == b) throw Error(ErrorCode::InvalidCell, "edge endpoints must differ: '" + a + "'");
  if (auto existing = find(CellKind::edge, {a, b})) return *existing;
  auto ends = sorted({a, b});
  CellId name = id ? *id : "e:" + ends[0] + "," + ends[1];
  insert_cell(name, Cell{CellKind::edge, ends});
  return name;
}

CellId CellComplex::add_triangle(const CellId& a, const CellId& b, const CellId& c,
                                 std::optional<CellId> id) {
  for (const auto& v : {a, b, c})
    if (!positions_.contains(v))
      throw Error(ErrorCode::UnknownVertex, "triangle vertex '" + v + "' is not a vertex");
  if (auto existing = find(CellKind::triangle, {a, b, c})) return *existing;
  auto corners = sorted({a, b, c});
  CellId name = id ? *id : "t:" + join(corners);
  insert_cell(name, Cell{CellKind::triangle, corners});
  return name;
}

void CellComplex::insert_cell(const CellId& id, Cell cell) {
  if (cells_.contains(id)) throw Error(ErrorCode::DuplicateId, "cell id '" + id + "' is already in use");
  if (cell.vertices.size() != arity(cell.kind))
    throw Error(ErrorCode::InvalidCell, "cell '" + id + "' has the wrong number of vertices");
  cell.vertices = sorted(std::move(cell.vertices));
  if (std::adjacent_find(cell.vertices.begin(), cell.vertices.end()) != cell.vertices.end())
    throw Error(ErrorCode::InvalidCell, "cell '" + id + "' repeats a vertex");
  if (cell.kind == CellKind::vertex) {
    if (cell.vertices[0] != id)
      throw Error(ErrorCode::InvalidCell, "vertex cell '" + id + "' must name itself");
    if (!positions_.contains(id))
      throw Error(ErrorCode::UnknownVertex, "vertex '" + id + "' has no position");
  }
  if (cell.kind == CellKind::triangle &&
      std::all_of(cell.vertices.begin(), cell.vertices.end(),
                  [&](const CellId& v) { return positions_.contains(v); }) &&
      orientation(positions_.at(cell.vertices[0]), positions_.at(cell.vertices[1]),
                  positions_.at(cell.vertices[2])) == Orientation::collinear)
    throw Error(ErrorCode::DegenerateTriangle, "triangle '" + id + "' has collinear vertices");
  auto key = std::make_pair(cell.kind, cell.vertices);
  if (by_vertices_.contains(key))
    throw Error(ErrorCode::DuplicateId,
                "cell '" + id + "' duplicates '" + by_vertices_.at(key) + "'");
  by_vertices_.emplace(std::move(key), id);
  cells_.emplace(id, std::move(cell));
}

const Cell& CellComplex::cell(const CellId& id) const {
  auto it = cells_.find(id);
  if (it == cells_.end()) throw Error(ErrorCode::UnknownCellId, "unknown cell id '" + id + "'");
  return it->second;
}

const Point2& CellComplex::position(const CellId& vertex) const {
  auto it = positions_.find(vertex);
  if (it == positions_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + vertex + "'");
  return it->second;
}

std::optional<CellId> CellComplex::find(CellKind kind, std::vector<CellId> vertices) const {
  auto it = by_vertices_.find({kind, sorted(std::move(vertices))});
  if (it == by_vertices_.end()) return std::nullopt;
  return it->second;
}

std::vector<CellId> CellComplex::faces(const CellId& id) const {
  const Cell& c = cell(id);
  std::vector<CellId> out;
  if (c.kind == CellKind::triangle) {
    const auto& v = c.vertices;
    for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}})
      if (auto e = find(CellKind::edge, {v[i], v[j]})) out.push_back(*e);
  }
  if (c.kind != CellKind::vertex)
    for (const auto& v : c.vertices)
      if (auto it = cells_.find(v); it != cells_.end() && it->second.kind == CellKind::vertex)
        out.push_back(v);
  return out;
}

ValidityReport validate_cw(const CellComplex& k) {
  ValidityReport report;
  report.nonempty = !k.empty();

  for (const auto& [id, cell] : k.cells()) {
    if (cell.kind == CellKind::vertex) continue;
    for (const auto& v : cell.vertices) {
      auto it = k.cells().find(v);
      if (it == k.cells().end() || it->second.kind != CellKind::vertex)
        report.containment.push_back({id, v});
    }
    if (cell.kind == CellKind::triangle) {
      const auto& v = cell.vertices;
      for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}})
        if (!k.find(CellKind::edge, {v[i], v[j]}))
          report.containment.push_back({id, v[i] + "," + v[j]});
    }
  }

  struct Realized {
    CellId id;
    ConvexPiece piece;
    Point2 lo, hi;
  };
  std::vector<Realized> realized;
  for (const auto& [id, cell] : k.cells()) {
    std::vector<Point2> pts;
    for (const auto& v : cell.vertices)
      if (k.has_position(v)) pts.push_back(k.position(v));
    if (pts.size() != cell.vertices.size()) continue;  // already a containment violation
    Point2 lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    realized.push_back({id, {cell.dimension(), pts}, lo, hi});
  }

  for (std::size_t i = 0; i < realized.size(); ++i) {
    for (std::size_t j = i + 1; j < realized.size(); ++j) {
      const auto& a = realized[i];
      const auto& b = realized[j];
      if (a.hi.x < b.lo.x || b.hi.x < a.lo.x || a.hi.y < b.lo.y || b.hi.y < a.lo.y) continue;
      ConvexPiece common = intersect(a.piece, b.piece);
      bool ok = true;
      switch (common.dim) {
        case -1: break;
        case 0: ok = covered_point(k, common.points[0]); break;
        case 1: ok = covered_segment(k, common.points[0], common.points[1]); break;
        default: ok = covered_polygon(k, common.points); break;
      }
      if (!ok) report.intersection.push_back({a.id, b.id, describe(common)});
    }
  }
  return report;
}

CellSet closure(const CellComplex& k, const CellSet& cells) {
  CellSet out;
  std::deque<CellId> queue(cells.begin(), cells.end());
  while (!queue.empty()) {
    CellId id = std::move(queue.front());
    queue.pop_front();
    if (!out.insert(id).second) continue;
    for (auto& f : k.faces(id)) queue.push_back(std::move(f));
  }
  return out;
}

CellSet boundary(const CellComplex& k, const CellSet& cells) {
  CellSet closed = closure(k, cells);
  int top = -1;
  for (const auto& id : closed) top = std::max(top, k.cell(id).dimension());

  std::map<CellId, int> cofaces;
  CellSet frontier;
  for (const auto& [id, cell] : k.cells()) {
    bool inside = closed.contains(id);
    for (const auto& f : k.faces(id)) {
      if (!closed.contains(f)) continue;
      if (!inside)
        frontier.insert(f);  // touches the rest of the complex
      else if (cell.dimension() == top)
        ++cofaces[f];
    }
  }
  for (const auto& [f, count] : cofaces)
    if (count == 1 && k.cell(f).dimension() == top - 1) frontier.insert(f);
  return closure(k, frontier);
}

CellSet interior(const CellComplex& k, const CellSet& cells) {
  CellSet closed = closure(k, cells);
  CellSet edge = boundary(k, cells);
  CellSet out;
  std::set_difference(closed.begin(), closed.end(), edge.begin(), edge.end(),
                      std::inserter(out, out.end()));
  return out;
}

}  // namespace ribbon
