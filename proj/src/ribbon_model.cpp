#include "ribbon/ribbon_model.hpp"

#include <algorithm>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

// The open segment (a, b) must not meet the loop; `endpoint` (one of a, b)
// is the only allowed contact.
bool touches_only_at(const Point2& a, const Point2& b, const Point2& endpoint,
                     const Polygon& loop) {
  for (std::size_t i = 0; i < loop.size(); ++i) {
    auto hit = intersect_segments(a, b, loop.vertex(i), loop.vertex(i + 1));
    if (hit.kind == SegmentIntersection::Kind::none) continue;
    if (hit.kind == SegmentIntersection::Kind::overlap || !(hit.first == endpoint)) return false;
  }
  return true;
}

std::string ribbon_label(const FilledCycle& inner, const FilledCycle& outer) {
  return "rb[" + inner.label + "|" + outer.label + "]";
}

}  // namespace

std::optional<std::size_t> FilledCycle::index_of(const CellId& vertex) const {
  auto it = std::find(loop.begin(), loop.end(), vertex);
  if (it == loop.end()) return std::nullopt;
  return static_cast<std::size_t>(it - loop.begin());
}

FilledCycle make_filled_cycle(CellComplex& complex, const std::vector<CellId>& loop,
                              std::string label) {
  std::vector<Point2> points;
  points.reserve(loop.size());
  for (const auto& id : loop) points.push_back(complex.position(id));
  Polygon polygon(std::move(points));
  for (std::size_t i = 0; i < loop.size(); ++i)
    complex.add_edge(loop[i], loop[(i + 1) % loop.size()]);
  return FilledCycle{std::move(label), loop, std::move(polygon)};
}

bool is_nested(const FilledCycle& inner, const FilledCycle& outer) {
  for (const auto& p : inner.points())
    if (outer.polygon.locate(p) != Location::inside) return false;
  const Polygon& a = inner.polygon;
  const Polygon& b = outer.polygon;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (intersect_segments(a.vertex(i), a.vertex(i + 1), b.vertex(j), b.vertex(j + 1)).kind !=
          SegmentIntersection::Kind::none)
        return false;
  return true;
}

bool is_concentric(const FilledCycle& a, const FilledCycle& b) {
  return vertex_centroid(a.points()) == vertex_centroid(b.points());
}

Ribbon::Ribbon(FilledCycle outer, FilledCycle inner, std::vector<Filament> filaments,
               std::vector<Hole> holes, std::string label, RibbonOptions options)
    : outer_(std::move(outer)),
      inner_(std::move(inner)),
      filaments_(std::move(filaments)),
      holes_(std::move(holes)),
      label_(std::move(label)),
      allow_concentric_(options.allow_concentric) {
  if (!is_nested(inner_, outer_))
    throw Error(ErrorCode::NotNested,
                "cycle '" + inner_.label + "' is not nested inside '" + outer_.label + "'");
  if (!allow_concentric_ && is_concentric(inner_, outer_))
    throw Error(ErrorCode::ConcentricCycles,
                "cycles '" + inner_.label + "' and '" + outer_.label + "' are concentric");
  for (const auto& hole : holes_) {
    if (outer_.polygon.locate(hole.marker) != Location::inside ||
        inner_.polygon.locate(hole.marker) != Location::outside)
      throw Error(ErrorCode::HoleOutsideRibbon,
                  "hole '" + hole.label + "' is not strictly inside the ribbon annulus");
  }
  for (const auto& f : filaments_) {
    if (!outer_.index_of(f.outer_vertex) || !inner_.index_of(f.inner_vertex))
      throw Error(ErrorCode::FilamentEndpointOffBoundary,
                  "filament " + f.outer_vertex + "-" + f.inner_vertex +
                      " must join an outer-loop vertex to an inner-loop vertex");
    auto [q, p] = filament_segment(f);
    if (!touches_only_at(q, p, q, outer_.polygon) || !touches_only_at(q, p, p, inner_.polygon) ||
        ribbon_membership(*this, midpoint(q, p)) != RibbonMembership::in_ribbon)
      throw Error(ErrorCode::FilamentOutsideRibbon,
                  "filament " + f.outer_vertex + "-" + f.inner_vertex + " leaves the annulus");
  }
}

std::pair<Point2, Point2> Ribbon::filament_segment(const Filament& f) const {
  auto q = outer_.index_of(f.outer_vertex);
  auto p = inner_.index_of(f.inner_vertex);
  if (!q || !p)
    throw Error(ErrorCode::FilamentNotInRibbon,
                "filament " + f.outer_vertex + "-" + f.inner_vertex + " is not on ribbon '" +
                    label_ + "'");
  return {outer_.points()[*q], inner_.points()[*p]};
}

bool Ribbon::has_filament(const Filament& filament) const {
  return std::find(filaments_.begin(), filaments_.end(), filament) != filaments_.end();
}

Ribbon make_ribbon(FilledCycle outer, FilledCycle inner, std::vector<Filament> filaments,
                   std::vector<Hole> holes, std::string label, RibbonOptions options) {
  return Ribbon(std::move(outer), std::move(inner), std::move(filaments), std::move(holes),
                std::move(label), options);
}

RibbonMembership ribbon_membership(const Ribbon& ribbon, const Point2& p) {
  Location in_inner = ribbon.inner().polygon.locate(p);
  if (in_inner == Location::on_boundary) return RibbonMembership::on_inner_boundary;
  if (in_inner == Location::inside) return RibbonMembership::in_removed_interior;
  switch (ribbon.outer().polygon.locate(p)) {
    case Location::on_boundary: return RibbonMembership::on_outer_boundary;
    case Location::inside: return RibbonMembership::in_ribbon;
    case Location::outside: break;
  }
  return RibbonMembership::outside;
}

CellComplex to_cell_complex(const Ribbon& ribbon) {
  CellComplex k(ribbon.label());
  for (const auto* cycle : {&ribbon.outer(), &ribbon.inner()}) {
    for (std::size_t i = 0; i < cycle->loop.size(); ++i)
      k.add_vertex(cycle->loop[i], cycle->points()[i]);
    for (std::size_t i = 0; i < cycle->loop.size(); ++i)
      k.add_edge(cycle->loop[i], cycle->loop[(i + 1) % cycle->loop.size()]);
  }
  for (const auto& f : ribbon.filaments()) k.add_edge(f.outer_vertex, f.inner_vertex);
  return k;
}

RibbonComplex::RibbonComplex(std::vector<Ribbon> ribbons, std::string label)
    : ribbons_(std::move(ribbons)), label_(std::move(label)) {
  if (ribbons_.empty())
    throw Error(ErrorCode::EmptyRibbonComplex, "a ribbon complex needs at least one ribbon");
}

VortexNerve::VortexNerve(std::vector<FilledCycle> cycles, std::vector<Filament> filaments,
                         std::string label)
    : cycles_(std::move(cycles)), filaments_(std::move(filaments)), label_(std::move(label)) {
  if (cycles_.size() < 2)
    throw Error(ErrorCode::TooFewCycles, "a vortex nerve needs at least 2 nesting cycles, got " +
                                             std::to_string(cycles_.size()));
  for (std::size_t i = 0; i + 1 < cycles_.size(); ++i)
    if (!is_nested(cycles_[i], cycles_[i + 1]))
      throw Error(ErrorCode::NotNested, "cycle '" + cycles_[i].label +
                                            "' is not nested inside '" + cycles_[i + 1].label + "'");
  for (const auto& f : filaments_) {
    bool adjacent = false;
    for (std::size_t i = 0; i + 1 < cycles_.size(); ++i)
      adjacent = adjacent ||
                 (cycles_[i + 1].index_of(f.outer_vertex) && cycles_[i].index_of(f.inner_vertex));
    if (!adjacent)
      throw Error(ErrorCode::FilamentEndpointOffBoundary,
                  "filament " + f.outer_vertex + "-" + f.inner_vertex +
                      " does not join two adjacent cycles");
  }
  ribbons_of_vortex_nerve(*this);  // validates filament geometry
}

std::vector<std::size_t> VortexNerve::concentric_pairs() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < cycles_.size(); ++i)
    if (is_concentric(cycles_[i], cycles_[i + 1])) out.push_back(i);
  return out;
}

std::vector<Ribbon> ribbons_of_vortex_nerve(const VortexNerve& nerve) {
  const auto& cycles = nerve.cycles();
  if (cycles.size() < 2)
    throw Error(ErrorCode::TooFewCycles, "a vortex nerve with fewer than 2 cycles has no ribbons");
  std::vector<Ribbon> out;
  out.reserve(cycles.size() - 1);
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
    const FilledCycle& inner = cycles[i];
    const FilledCycle& outer = cycles[i + 1];
    std::vector<Filament> attached;
    for (const auto& f : nerve.filaments())
      if (outer.index_of(f.outer_vertex) && inner.index_of(f.inner_vertex)) attached.push_back(f);
    out.emplace_back(outer, inner, std::move(attached), std::vector<Hole>{},
                     ribbon_label(inner, outer), RibbonOptions{.allow_concentric = true});
  }
  return out;
}

std::vector<RibbonNerve> ribbon_nerves_of_vortex_nerve(const VortexNerve& nerve) {
  if (nerve.cycles().size() < 3)
    throw Error(ErrorCode::TooFewCycles,
                "a vortex nerve needs at least 3 cycles to contain a ribbon nerve");
  std::vector<Ribbon> ribbons = ribbons_of_vortex_nerve(nerve);
  std::vector<RibbonNerve> out;
  for (std::size_t i = 0; i + 1 < ribbons.size(); ++i)
    out.push_back({{ribbons[i], ribbons[i + 1]},
                   "rbNrv[" + ribbons[i].label() + "," + ribbons[i + 1].label() + "]"});
  return out;
}

}  // namespace ribbon
