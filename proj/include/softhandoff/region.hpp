#pragma once

#include <span>
#include <vector>

namespace softhandoff {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// The closed half-plane a*x + b*y <= c.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

enum class RegionKind { polygon, polyline };

/// A convex first-quadrant region.
///
/// `polygon`: closed convex polygon, vertices counterclockwise starting at
/// the origin.
/// `polyline`: the upper boundary of a downward-closed rate region, x
/// strictly increasing and y nonincreasing. The region is every nonnegative
/// point dominated by the (linearly interpolated) boundary.
struct Region {
  RegionKind kind = RegionKind::polygon;
  std::vector<Point2> vertices;
  bool degenerate = false;
};

inline constexpr double kVertexMergeTol = 1e-12;

/// Intersection of the first quadrant with `planes`. Throws
/// std::invalid_argument for a zero normal, an unbounded intersection, or a
/// set that excludes the origin. An intersection without interior comes back
/// as a point or segment with `degenerate` set.
Region region_from_halfplanes(std::span<const HalfPlane> planes);

/// Builds a polyline region, enforcing its shape invariants.
Region make_polyline(std::vector<Point2> boundary);

/// True iff `p` lies in the region inflated by `tol` along every
/// constraint normal.
bool region_contains(const Region& region, Point2 p, double tol);

struct BoundarySegment {
  Point2 from;
  Point2 to;
  double slope = 0.0;
};

/// Slopes of the outer boundary from the y-intercept to the x-intercept,
/// ordered by increasing x. Throws for degenerate regions.
std::vector<BoundarySegment> boundary_slopes(const Region& region);

/// Upper boundary height at `x` (0 beyond the x-intercept, the y-intercept
/// height to the left of the first boundary point).
double boundary_height(const Region& region, double x);

/// Largest x reached by the region.
double max_x(const Region& region);

}  // namespace softhandoff
