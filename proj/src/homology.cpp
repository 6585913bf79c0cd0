#include "ribbon/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "ribbon/error.hpp"

namespace ribbon {

namespace {

using Column = boost::dynamic_bitset<>;

// Rank over Z/2 by column reduction on lowest set bit.
std::size_t z2_rank(std::vector<Column> columns) {
  std::map<std::size_t, Column> pivots;
  std::size_t rank = 0;
  for (auto& col : columns) {
    while (col.any()) {
      std::size_t low = col.find_first();
      auto it = pivots.find(low);
      if (it == pivots.end()) {
        pivots.emplace(low, std::move(col));
        ++rank;
        break;
      }
      col ^= it->second;
    }
  }
  return rank;
}

// Floor of a rational.
long floor_of(const Rational& r) {
  boost::multiprecision::mpz_int q = numerator(r) / denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q.convert_to<long>();
}

bool axis_aligned_rectangle(const Region& r) {
  if (r.outer().size() != 1 || !r.excluded().empty()) return false;
  const Polygon& p = r.outer().front();
  if (p.size() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2& a = p.vertex(i);
    const Point2& b = p.vertex(i + 1);
    if (a.x != b.x && a.y != b.y) return false;
  }
  return true;
}

std::optional<Rational> smallest_gap(std::set<Rational> values) {
  std::optional<Rational> best;
  for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
    Rational gap = *std::next(it) - *it;
    if (!best || gap < *best) best = gap;
  }
  return best;
}

}  // namespace

Betti01 z2_betti(const SimplicialComplex& complex) {
  if (!complex.downward_closed())
    throw Error(ErrorCode::NotDownwardClosed, "simplicial complex is not closed under faces");
  std::map<Simplex, std::size_t> vertices, edges;
  std::vector<Simplex> triangles;
  for (const auto& s : complex.simplices) {
    if (s.size() == 1) vertices.emplace(s, vertices.size());
    if (s.size() == 2) edges.emplace(s, edges.size());
    if (s.size() == 3) triangles.push_back(s);
  }

  std::vector<Column> d1;
  for (const auto& [e, idx] : edges) {
    Column col(vertices.size());
    col.set(vertices.at({e[0]}));
    col.set(vertices.at({e[1]}));
    d1.push_back(std::move(col));
  }
  std::vector<Column> d2;
  for (const auto& t : triangles) {
    Column col(edges.size());
    col.set(edges.at({t[0], t[1]}));
    col.set(edges.at({t[0], t[2]}));
    col.set(edges.at({t[1], t[2]}));
    d2.push_back(std::move(col));
  }
  const std::size_t r1 = z2_rank(std::move(d1));
  const std::size_t r2 = z2_rank(std::move(d2));
  return {vertices.size() - r1, edges.size() - r1 - r2};
}

std::size_t Bitmap::set_count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

Bitmap rasterize(const std::vector<Region>& regions, const Frame& frame, long resolution) {
  if (resolution < 4)
    throw Error(ErrorCode::InvalidResolution,
                "resolution must be at least 4 pixels per unit, got " + std::to_string(resolution));
  for (const auto& r : regions)
    for (const auto& loop : r.outer())
      if (!frame.contains(loop.min_corner()) || !frame.contains(loop.max_corner()))
        throw Error(ErrorCode::FrameTooSmall, "region '" + r.label() + "' leaves the frame");

  const Rational res(resolution);
  Bitmap bm;
  bm.resolution = resolution;
  bm.origin = frame.min;
  // only pixels whose centre lies in the frame
  bm.width = static_cast<std::size_t>(floor_of((frame.max.x - frame.min.x) * res - Rational(1, 2)) + 1);
  bm.height = static_cast<std::size_t>(floor_of((frame.max.y - frame.min.y) * res - Rational(1, 2)) + 1);
  bm.bits.assign(bm.width * bm.height, 0);

  // pixel index range whose centres fall in [lo, hi]
  auto index_range = [&res](const Rational& lo, const Rational& hi, const Rational& origin,
                            std::size_t count) -> std::pair<long, long> {
    long first = -floor_of(-((lo - origin) * res - Rational(1, 2)));
    long last = floor_of((hi - origin) * res - Rational(1, 2));
    return {std::max(first, 0L), std::min(last, static_cast<long>(count) - 1)};
  };

  for (const auto& region : regions) {
    for (const auto& loop : region.outer()) {
      auto [i0, i1] = index_range(loop.min_corner().x, loop.max_corner().x, frame.min.x, bm.width);
      auto [j0, j1] = index_range(loop.min_corner().y, loop.max_corner().y, frame.min.y, bm.height);
      for (long j = j0; j <= j1; ++j) {
        Rational y = frame.min.y + Rational(2 * j + 1, 2 * resolution);
        for (long i = i0; i <= i1; ++i) {
          std::uint8_t& bit = bm.bits[static_cast<std::size_t>(j) * bm.width + i];
          if (bit) continue;
          Point2 centre{frame.min.x + Rational(2 * i + 1, 2 * resolution), y};
          if (region.contains(centre)) bit = 1;
        }
      }
    }
  }
  return bm;
}

Betti01 cubical_betti(const Bitmap& bm) {
  const long w = static_cast<long>(bm.width), h = static_cast<long>(bm.height);
  std::vector<std::uint8_t> seen(bm.bits.size(), 0);
  std::vector<std::pair<long, long>> stack;

  // flood one component of pixels with bit value `value`; returns whether it touched the border
  auto flood = [&](long si, long sj, std::uint8_t value, bool eight) {
    bool border = false;
    stack.assign(1, {si, sj});
    seen[sj * w + si] = 1;
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      if (i == 0 || j == 0 || i == w - 1 || j == h - 1) border = true;
      for (long dj = -1; dj <= 1; ++dj) {
        for (long di = -1; di <= 1; ++di) {
          if ((di == 0 && dj == 0) || (!eight && di != 0 && dj != 0)) continue;
          long ni = i + di, nj = j + dj;
          if (ni < 0 || nj < 0 || ni >= w || nj >= h) continue;
          std::size_t k = static_cast<std::size_t>(nj * w + ni);
          if (seen[k] || bm.bits[k] != value) continue;
          seen[k] = 1;
          stack.emplace_back(ni, nj);
        }
      }
    }
    return border;
  };

  Betti01 out;
  for (long j = 0; j < h; ++j) {
    for (long i = 0; i < w; ++i) {
      std::size_t k = static_cast<std::size_t>(j * w + i);
      if (seen[k]) continue;
      if (bm.bits[k]) {
        flood(i, j, 1, true);
        ++out.b0;
      } else if (!flood(i, j, 0, false)) {
        ++out.b1;
      }
    }
  }
  return out;
}

std::optional<Rational> rectangle_clearance(const std::vector<Region>& regions) {
  std::set<Rational> xs, ys;
  for (const auto& r : regions) {
    if (!axis_aligned_rectangle(r)) return std::nullopt;
    for (const auto& p : r.outer().front().vertices()) {
      xs.insert(p.x);
      ys.insert(p.y);
    }
  }
  auto gx = smallest_gap(std::move(xs));
  auto gy = smallest_gap(std::move(ys));
  if (!gx) return gy;
  if (!gy) return gx;
  return std::min(*gx, *gy);
}

NerveCheckReport nerve_theorem_check(const std::vector<Region>& regions, const Frame& frame,
                                     long resolution) {
  for (const auto& r : regions) {
    if (r.outer().size() != 1 || !r.excluded().empty() || !is_convex(r.outer().front().vertices()))
      throw Error(ErrorCode::NonConvexRegion, "region '" + r.label() + "' is not a convex polygon");
  }
  SimplicialComplex complex = nerve(regions);
  NerveCheckReport report;
  report.nerve_ranks = z2_betti(complex);
  report.union_ranks = cubical_betti(rasterize(regions, frame, resolution));
  report.maximal_simplices = complex.maximal_simplices();
  if (auto gap = rectangle_clearance(regions)) report.clearance_pixels = *gap * resolution;
  return report;
}

}  // namespace ribbon
