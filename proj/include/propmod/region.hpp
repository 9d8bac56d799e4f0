#pragma once

// Lattice points of S inside a closed convex polygon with rational
// vertices. The parallel kernel splits the scan by rows; the serial
// version is the reference it is tested against.

#include <vector>

#include "propmod/core.hpp"
#include "propmod/lines.hpp"

namespace propmod {

enum class RegionKind { Strip, Triangle, Polygon };

struct Region2 {
  std::vector<RationalPoint> vertices;  // any order; convex hull is taken implicitly
  RegionKind kind = RegionKind::Polygon;
};

/// The strip window ConvexHull{O, u, u + w + u~, w + u~}.
Region2 strip_region(const StripGeometry& geom);

/// The triangle ConvexHull{O, w1 + u~1, w2 + u~2} of the all-positive case.
Region2 triangle_region(const ModularInequality& ineq);

/// The parallelogram ConvexHull{O, u, w, w + u} holding the strip-case gaps.
Region2 gap_parallelogram(const StripGeometry& geom);

/// Members of S in the closed polygon, origin excluded, graded-sorted.
std::vector<Point> enumerate_region(const ModularInequality& ineq, const Region2& region);
std::vector<Point> enumerate_region_serial(const ModularInequality& ineq, const Region2& region);

/// All lattice points of N^2 in the closed polygon (membership ignored),
/// graded-sorted.
std::vector<Point> lattice_points(const Region2& region);

/// Integer x-range of row y inside the polygon; empty when lo > hi.
struct RowSpan {
  Int lo = 1;
  Int hi = 0;
};
RowSpan row_span(const Region2& region, Int y);

}  // namespace propmod
