#include "ribbon/nerve.hpp"

#include <algorithm>
#include <cstdint>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

using Mask = std::uint32_t;

std::set<Point2> candidate_points(const std::vector<Region>& regions) {
  std::set<Point2> points;
  std::vector<std::pair<Point2, Point2>> segments;
  for (const auto& region : regions) {
    for (const auto* loops : {&region.outer(), &region.excluded()}) {
      for (const auto& loop : *loops) {
        points.insert(vertex_centroid(loop.vertices()));
        for (std::size_t i = 0; i < loop.size(); ++i) {
          points.insert(loop.vertex(i));
          segments.emplace_back(loop.vertex(i), loop.vertex(i + 1));
        }
      }
    }
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      auto hit = intersect_segments(segments[i].first, segments[i].second, segments[j].first,
                                    segments[j].second);
      if (hit.kind == SegmentIntersection::Kind::none) continue;
      points.insert(hit.first);
      if (hit.kind == SegmentIntersection::Kind::overlap) points.insert(hit.second);
    }
  }
  return points;
}

// Region masks realised by candidate points, keeping only the maximal ones.
std::vector<Mask> maximal_masks(const std::vector<Region>& regions) {
  std::set<Mask> masks;
  for (const auto& p : candidate_points(regions)) {
    Mask m = 0;
    for (std::size_t i = 0; i < regions.size(); ++i)
      if (regions[i].contains(p)) m |= Mask{1} << i;
    if (m != 0) masks.insert(m);
  }
  std::vector<Mask> out;
  for (Mask m : masks) {
    bool dominated = std::any_of(masks.begin(), masks.end(), [m](Mask other) {
      return other != m && (other & m) == m;
    });
    if (!dominated) out.push_back(m);
  }
  return out;
}

Simplex to_simplex(Mask m) {
  Simplex s;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) s.push_back(i);
  return s;
}

void require_nonempty(const std::vector<Region>& regions) {
  if (regions.empty()) throw Error(ErrorCode::EmptyCollection, "region collection is empty");
}

}  // namespace

Region::Region(std::vector<Polygon> outer, std::vector<Polygon> excluded, std::string label)
    : outer_(std::move(outer)), excluded_(std::move(excluded)), label_(std::move(label)) {}

Region Region::from_ribbon(const Ribbon& ribbon) {
  return Region({ribbon.outer().polygon}, {ribbon.inner().polygon}, ribbon.label());
}

Region Region::from_cycle(const FilledCycle& cycle) {
  return Region({cycle.polygon}, {}, cycle.label);
}

Region Region::from_convex_polygon(std::vector<Point2> loop, std::string label) {
  Polygon polygon(std::move(loop));
  if (!is_convex(polygon.vertices()))
    throw Error(ErrorCode::NonConvexRegion, "region '" + label + "' is not convex");
  return Region({std::move(polygon)}, {}, std::move(label));
}

bool Region::contains(const Point2& p) const {
  bool in_outer = std::any_of(outer_.begin(), outer_.end(), [&p](const Polygon& poly) {
    return poly.locate(p) != Location::outside;
  });
  if (!in_outer) return false;
  return std::none_of(excluded_.begin(), excluded_.end(), [&p](const Polygon& poly) {
    return poly.locate(p) == Location::inside;
  });
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> labels,
                                                  const std::vector<Simplex>& maximal) {
  SimplicialComplex out{std::move(labels), {}};
  for (Simplex top : maximal) {
    std::sort(top.begin(), top.end());
    const std::size_t m = top.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
      Simplex face;
      for (std::size_t i = 0; i < m; ++i)
        if (bits & (std::uint64_t{1} << i)) face.push_back(top[i]);
      out.simplices.insert(std::move(face));
    }
  }
  return out;
}

bool SimplicialComplex::contains(Simplex simplex) const {
  std::sort(simplex.begin(), simplex.end());
  return simplices.contains(simplex);
}

bool SimplicialComplex::downward_closed() const {
  for (const auto& s : simplices) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      if (!simplices.contains(face)) return false;
    }
  }
  return true;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices) {
    bool has_cofacet = false;
    for (std::size_t v = 0; v < labels.size() && !has_cofacet; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex bigger = s;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      has_cofacet = simplices.contains(bigger);
    }
    if (!has_cofacet) out.push_back(s);
  }
  return out;
}

int SimplicialComplex::dimension() const {
  std::size_t top = 0;
  for (const auto& s : simplices) top = std::max(top, s.size());
  return static_cast<int>(top) - 1;
}

std::optional<Point2> common_witness(const std::vector<Region>& regions) {
  require_nonempty(regions);
  for (const auto& p : candidate_points(regions)) {
    bool everywhere = std::all_of(regions.begin(), regions.end(),
                                  [&p](const Region& r) { return r.contains(p); });
    if (everywhere) return p;
  }
  return std::nullopt;
}

SimplicialComplex nerve(const std::vector<Region>& regions) {
  require_nonempty(regions);
  if (regions.size() > max_nerve_regions)
    throw Error(ErrorCode::CollectionTooLarge,
                "nerve supports at most " + std::to_string(max_nerve_regions) + " regions, got " +
                    std::to_string(regions.size()));
  std::vector<std::string> labels;
  for (const auto& r : regions) labels.push_back(r.label());
  std::vector<Simplex> maximal;
  for (Mask m : maximal_masks(regions)) maximal.push_back(to_simplex(m));
  return SimplicialComplex::from_maximal(std::move(labels), maximal);
}

std::vector<RibbonNerve> ribbon_nerve(const RibbonComplex& complex) {
  std::vector<Region> regions;
  for (const auto& rb : complex.ribbons()) regions.push_back(Region::from_ribbon(rb));
  std::vector<Simplex> groups = nerve(regions).maximal_simplices();
  std::sort(groups.begin(), groups.end());

  std::vector<RibbonNerve> out;
  for (const auto& group : groups) {
    RibbonNerve n;
    n.label = "rbNrv{";
    for (std::size_t i = 0; i < group.size(); ++i) {
      n.ribbons.push_back(complex.ribbons()[group[i]]);
      n.label += (i ? "," : "") + complex.ribbons()[group[i]].label();
    }
    n.label += "}";
    out.push_back(std::move(n));
  }
  return out;
}

RibbonNerve make_ribbon_nerve(std::vector<Ribbon> ribbons, std::string label) {
  std::vector<Region> regions;
  for (const auto& rb : ribbons) regions.push_back(Region::from_ribbon(rb));
  if (!common_witness(regions))
    throw Error(ErrorCode::NoCommonIntersection,
                "ribbons of nerve '" + label + "' have no common point");
  return RibbonNerve{std::move(ribbons), std::move(label)};
}

}  // namespace ribbon
