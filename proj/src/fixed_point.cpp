#include "ribbon/fixed_point.hpp"

#include <cmath>
#include <numbers>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

constexpr long angle_grid = 1000000;

}  // namespace

CellMap::CellMap(CellComplex domain, std::map<CellId, CellId> mapping)
    : domain_(std::move(domain)), mapping_(std::move(mapping)) {
  for (const auto& [id, cell] : domain_.cells())
    if (!mapping_.contains(id))
      throw Error(ErrorCode::PartialMap, "cell '" + id + "' has no image");
  for (const auto& [from, to] : mapping_) {
    if (!domain_.contains(from))
      throw Error(ErrorCode::PartialMap, "mapped cell '" + from + "' is not in the domain");
    if (!domain_.contains(to))
      throw Error(ErrorCode::PartialMap, "image '" + to + "' of '" + from + "' is not in the domain");
  }
}

CellMap CellMap::identity(CellComplex domain) {
  std::map<CellId, CellId> mapping;
  for (const auto& [id, cell] : domain.cells()) mapping.emplace(id, id);
  return CellMap(std::move(domain), std::move(mapping));
}

const CellId& CellMap::operator()(const CellId& cell) const {
  auto it = mapping_.find(cell);
  if (it == mapping_.end())
    throw Error(ErrorCode::UnknownCellId, "cell '" + cell + "' is not in the domain");
  return it->second;
}

CellMap CellMap::compose(const CellMap& other) const {
  std::map<CellId, CellId> composed;
  for (const auto& [from, mid] : other.mapping()) composed.emplace(from, (*this)(mid));
  return CellMap(other.domain(), std::move(composed));
}

CellSet fixed_cells(const CellMap& map) {
  CellSet out;
  for (const auto& [from, to] : map.mapping())
    if (from == to) out.insert(from);
  return out;
}

CellMap filament_retraction_map(const Ribbon& ribbon, const Filament& filament) {
  if (!ribbon.has_filament(filament))
    throw Error(ErrorCode::FilamentNotInRibbon, "filament " + filament.outer_vertex + "-" +
                                                    filament.inner_vertex +
                                                    " is not a filament of ribbon '" +
                                                    ribbon.label() + "'");
  CellComplex domain(ribbon.label() + ":filaments");
  for (const auto& f : ribbon.filaments()) {
    auto [q, p] = ribbon.filament_segment(f);
    domain.add_vertex(f.outer_vertex, q);
    domain.add_vertex(f.inner_vertex, p);
    domain.add_edge(f.outer_vertex, f.inner_vertex);
  }
  std::map<CellId, CellId> mapping;
  for (const auto& [id, cell] : domain.cells()) mapping.emplace(id, id);
  mapping[filament.outer_vertex] = filament.inner_vertex;
  mapping[*domain.find(CellKind::edge, {filament.outer_vertex, filament.inner_vertex})] =
      filament.inner_vertex;
  return CellMap(std::move(domain), std::move(mapping));
}

Rational bisector_angle(const Point2& prev, const Point2& at, const Point2& next) {
  double ix = to_double(at.x - prev.x), iy = to_double(at.y - prev.y);
  double ox = to_double(next.x - at.x), oy = to_double(next.y - at.y);
  double il = std::hypot(ix, iy), ol = std::hypot(ox, oy);
  ix /= il, iy /= il, ox /= ol, oy /= ol;

  double bx = ix + ox, by = iy + oy;
  // exact test for opposite directions: collinear and pointing apart
  Point2 in = at - prev, out = next - at;
  bool reversal = in.x * out.y - in.y * out.x == 0 && dot(in, out) < 0;
  if (reversal) {
    bx = -iy;
    by = ix;
  }
  double theta = std::atan2(by, bx);
  long ticks = std::lround(theta * angle_grid);
  const long pi_ticks = std::lround(std::numbers::pi * angle_grid);
  if (ticks <= -pi_ticks) ticks = pi_ticks;
  return Rational(ticks) / angle_grid;
}

Rational gradient_angle(const Ribbon& ribbon, const CellId& vertex) {
  const FilledCycle& inner = ribbon.inner();
  auto index = inner.index_of(vertex);
  if (!index)
    throw Error(ErrorCode::VertexNotOnInnerBoundary,
                "vertex '" + vertex + "' is not on the inner loop of ribbon '" + ribbon.label() +
                    "'");
  const auto& pts = inner.points();
  const std::size_t n = pts.size();
  return bisector_angle(pts[(*index + n - 1) % n], pts[*index], pts[(*index + 1) % n]);
}

}  // namespace ribbon
