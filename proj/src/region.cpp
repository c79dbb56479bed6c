#include "softhandoff/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace softhandoff {
namespace {

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool same_point(Point2 p, Point2 q) {
  return std::abs(p.x - q.x) <= kVertexMergeTol && std::abs(p.y - q.y) <= kVertexMergeTol;
}

double plane_scale(const HalfPlane& h) { return std::max({1.0, std::abs(h.a) + std::abs(h.b), std::abs(h.c)}); }

bool satisfies_all(std::span<const HalfPlane> planes, Point2 p) {
  return std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
    return h.a * p.x + h.b * p.y <= h.c + kVertexMergeTol * plane_scale(h);
  });
}

bool is_unbounded(std::span<const HalfPlane> planes) {
  // The recession cone of a 2-D polyhedron is spanned by rays along the
  // constraint boundaries, so these candidates suffice.
  std::vector<Point2> rays = {{1.0, 0.0}, {0.0, 1.0}};
  for (const auto& h : planes) {
    rays.push_back({h.b, -h.a});
    rays.push_back({-h.b, h.a});
  }
  for (Point2 d : rays) {
    const double n = std::hypot(d.x, d.y);
    d = {d.x / n, d.y / n};
    if (d.x < -1e-15 || d.y < -1e-15) continue;
    const bool recedes = std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
      return h.a * d.x + h.b * d.y <= 1e-15 * (std::abs(h.a) + std::abs(h.b));
    });
    if (recedes) return true;
  }
  return false;
}

// Andrew's monotone chain; drops collinear points. Counterclockwise.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 p, Point2 q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), same_point), pts.end());
  if (pts.size() < 3) return pts;

  const auto turn_eps = [](Point2 o, Point2 a, Point2 b) {
    const double scale = std::max({1.0, std::abs(a.x - o.x) + std::abs(a.y - o.y), std::abs(b.x - o.x) + std::abs(b.y - o.y)});
    return kVertexMergeTol * scale;
  };
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= turn_eps(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= turn_eps(hull[k - 2], hull[k - 1], pts[i - 1])) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area(const std::vector<Point2>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 p = v[i];
    const Point2 q = v[(i + 1) % v.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

double distance_to_segment(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Upper chain of a polygon from its y-intercept to its x-intercept.
std::vector<Point2> upper_chain(const Region& region) {
  if (region.kind == RegionKind::polyline) return region.vertices;
  std::vector<Point2> chain(region.vertices.begin() + 1, region.vertices.end());
  std::reverse(chain.begin(), chain.end());
  return chain;
}

double interpolate(const std::vector<Point2>& chain, double x) {
  if (chain.empty()) return 0.0;
  if (x < chain.front().x) return chain.front().y;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Point2 p = chain[i - 1];
    const Point2 q = chain[i];
    if (x <= q.x) {
      if (q.x == p.x) return std::max(p.y, q.y);
      const double t = (x - p.x) / (q.x - p.x);
      return p.y + t * (q.y - p.y);
    }
  }
  return x == chain.back().x ? chain.back().y : 0.0;
}

}  // namespace

Region region_from_halfplanes(std::span<const HalfPlane> planes) {
  std::vector<HalfPlane> all(planes.begin(), planes.end());
  all.push_back({-1.0, 0.0, 0.0});
  all.push_back({0.0, -1.0, 0.0});

  for (const auto& h : all) {
    if (h.a == 0.0 && h.b == 0.0) throw std::invalid_argument("half-plane with zero normal");
    if (!std::isfinite(h.a) || !std::isfinite(h.b) || !std::isfinite(h.c)) {
      throw std::invalid_argument("half-plane with non-finite coefficients");
    }
    if (h.c < -kVertexMergeTol * plane_scale(h)) throw std::invalid_argument("half-plane excludes the origin");
  }
  if (is_unbounded(all)) throw std::invalid_argument("unbounded half-plane intersection");

  std::vector<Point2> candidates;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const HalfPlane& p = all[i];
      const HalfPlane& q = all[j];
      const double det = p.a * q.b - q.a * p.b;
      if (std::abs(det) <= 1e-14 * (std::abs(p.a) + std::abs(p.b)) * (std::abs(q.a) + std::abs(q.b))) continue;
      Point2 v{(p.c * q.b - q.c * p.b) / det, (p.a * q.c - q.a * p.c) / det};
      if (!satisfies_all(all, v)) continue;
      if (std::abs(v.x) <= kVertexMergeTol) v.x = 0.0;
      if (std::abs(v.y) <= kVertexMergeTol) v.y = 0.0;
      candidates.push_back(v);
    }
  }

  Region region;
  region.kind = RegionKind::polygon;
  region.vertices = convex_hull(std::move(candidates));
  if (region.vertices.empty()) region.vertices.push_back({0.0, 0.0});

  const auto origin = std::find_if(region.vertices.begin(), region.vertices.end(),
                                   [](Point2 p) { return same_point(p, {0.0, 0.0}); });
  if (origin != region.vertices.end()) std::rotate(region.vertices.begin(), origin, region.vertices.end());

  region.degenerate = region.vertices.size() < 3 || polygon_area(region.vertices) <= kVertexMergeTol * kVertexMergeTol;
  return region;
}

Region make_polyline(std::vector<Point2> boundary) {
  if (boundary.empty()) throw std::invalid_argument("polyline needs at least one point");
  std::vector<Point2> merged;
  for (Point2 p : boundary) {
    if (!(p.x >= -kVertexMergeTol) || !(p.y >= -kVertexMergeTol)) {
      throw std::invalid_argument("polyline leaves the first quadrant");
    }
    p.x = std::max(p.x, 0.0);
    p.y = std::max(p.y, 0.0);
    if (!merged.empty() && std::abs(p.x - merged.back().x) <= kVertexMergeTol) {
      merged.back().y = std::max(merged.back().y, p.y);
      continue;
    }
    if (!merged.empty() && p.x < merged.back().x) throw std::invalid_argument("polyline x must be increasing");
    if (!merged.empty() && p.y > merged.back().y + kVertexMergeTol) {
      throw std::invalid_argument("polyline y must be nonincreasing");
    }
    merged.push_back(p);
  }
  Region region;
  region.kind = RegionKind::polyline;
  region.vertices = std::move(merged);
  region.degenerate = region.vertices.size() < 2;
  return region;
}

bool region_contains(const Region& region, Point2 p, double tol) {
  if (p.x < -tol || p.y < -tol) return false;
  const auto& v = region.vertices;

  if (region.kind == RegionKind::polyline) {
    if (v.empty()) return false;
    if (p.x > v.back().x + tol) return false;
    const double x = std::clamp(p.x, 0.0, v.back().x);
    return p.y <= interpolate(v, x) + tol;
  }

  if (v.size() == 1) return std::hypot(p.x - v[0].x, p.y - v[0].y) <= tol;
  if (region.degenerate) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (distance_to_segment(p, v[i], v[i + 1]) <= tol) return true;
    }
    return distance_to_segment(p, v.back(), v.front()) <= tol;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % v.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (cross(a, b, p) < -tol * len) return false;
  }
  return true;
}

std::vector<BoundarySegment> boundary_slopes(const Region& region) {
  if (region.degenerate) throw std::invalid_argument("boundary slopes of a degenerate region");
  const auto chain = upper_chain(region);
  std::vector<BoundarySegment> out;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Point2 p = chain[i - 1];
    const Point2 q = chain[i];
    const double dx = q.x - p.x;
    const double slope = dx > 0.0 ? (q.y - p.y) / dx : -std::numeric_limits<double>::infinity();
    out.push_back({p, q, slope});
  }
  return out;
}

double boundary_height(const Region& region, double x) {
  if (x < 0.0) return 0.0;
  return interpolate(upper_chain(region), x);
}

double max_x(const Region& region) {
  double best = 0.0;
  for (Point2 p : region.vertices) best = std::max(best, p.x);
  return best;
}

}  // namespace softhandoff
