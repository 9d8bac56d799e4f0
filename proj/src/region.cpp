#include "propmod/region.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <omp.h>

namespace propmod {

namespace {

constexpr Int kMaxRegionPoints = Int(1) << 32;

RationalPoint to_rational(const Point& p) { return {Rational(p[0]), Rational(p[1])}; }

RationalPoint add(const RationalPoint& a, const RationalPoint& b) { return {a[0] + b[0], a[1] + b[1]}; }

void check_bounded(const Region2& region) {
  if (region.vertices.empty()) throw std::invalid_argument("region has no vertices");
}

struct RowRange {
  Int lo;
  Int hi;
};

RowRange row_range(const Region2& region) {
  check_bounded(region);
  auto [mn, mx] = std::minmax_element(region.vertices.begin(), region.vertices.end(),
                                      [](const auto& a, const auto& b) { return a[1] < b[1]; });
  return {std::max<Int>(0, (*mn)[1].ceil()), (*mx)[1].floor()};
}

void scan_row(const ModularInequality& ineq, const Region2& region, Int y, std::vector<Point>& out) {
  RowSpan span = row_span(region, y);
  for (Int x = std::max<Int>(span.lo, 0); x <= span.hi; ++x) {
    if (x == 0 && y == 0) continue;
    Point p{narrow(x), narrow(y)};
    if (member(ineq, p)) out.push_back(p);
  }
}

}  // namespace

RowSpan row_span(const Region2& region, Int y) {
  check_bounded(region);
  // Intersect the horizontal line with every segment between vertex pairs;
  // for a convex polygon the extreme crossings bound the row.
  const Rational ry(y);
  std::optional<Rational> lo, hi;
  auto take = [&](const Rational& x) {
    if (!lo || x < *lo) lo = x;
    if (!hi || x > *hi) hi = x;
  };
  const auto& v = region.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i][1] == ry) take(v[i][0]);
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const auto& a = v[i];
      const auto& b = v[j];
      if (a[1] == b[1]) continue;
      auto [ymin, ymax] = std::minmax(a[1], b[1]);
      if (ry < ymin || ry > ymax) continue;
      take(a[0] + (ry - a[1]) * (b[0] - a[0]) / (b[1] - a[1]));
    }
  }
  if (!lo) return {};
  return {lo->ceil(), hi->floor()};
}

Region2 strip_region(const StripGeometry& geom) {
  RationalPoint o{Rational(0), Rational(0)};
  RationalPoint u = to_rational(geom.u);
  RationalPoint wu = add(geom.w, to_rational(geom.u_tilde));
  return {{o, u, add(u, wu), wu}, RegionKind::Strip};
}

Region2 gap_parallelogram(const StripGeometry& geom) {
  RationalPoint o{Rational(0), Rational(0)};
  RationalPoint u = to_rational(geom.u);
  return {{o, u, geom.w, add(geom.w, u)}, RegionKind::Polygon};
}

Region2 triangle_region(const ModularInequality& ineq) {
  if (classify_planar(ineq) != PlanarCase::Positive)
    throw std::invalid_argument("triangle region requires g1, g2 > 0");
  auto u1 = axis_min_member(ineq, Axis::X);
  auto u2 = axis_min_member(ineq, Axis::Y);
  RationalPoint o{Rational(0), Rational(0)};
  RationalPoint a{Rational(ineq.b(), ineq.g()[0]) + Rational(u1), Rational(0)};
  RationalPoint c{Rational(0), Rational(ineq.b(), ineq.g()[1]) + Rational(u2)};
  return {{o, a, c}, RegionKind::Triangle};
}

std::vector<Point> enumerate_region_serial(const ModularInequality& ineq, const Region2& region) {
  if (ineq.dim() != 2) throw std::invalid_argument("region enumeration requires p = 2");
  RowRange rows = row_range(region);
  std::vector<Point> out;
  for (Int y = rows.lo; y <= rows.hi; ++y) scan_row(ineq, region, y, out);
  sort_graded(out);
  return out;
}

std::vector<Point> enumerate_region(const ModularInequality& ineq, const Region2& region) {
  if (ineq.dim() != 2) throw std::invalid_argument("region enumeration requires p = 2");
  RowRange rows = row_range(region);
  if (rows.hi < rows.lo) return {};
  const Int count = rows.hi - rows.lo + 1;
  if (count > kMaxRegionPoints) throw ComputationError("region too large to enumerate");
  const auto n = static_cast<long long>(count);
  std::vector<std::vector<Point>> per_row(static_cast<std::size_t>(n));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long r = 0; r < n; ++r) {
    try {
      scan_row(ineq, region, rows.lo + r, per_row[static_cast<std::size_t>(r)]);
    } catch (...) {
#pragma omp critical(propmod_region_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Point> out;
  for (auto& row : per_row) out.insert(out.end(), row.begin(), row.end());
  sort_graded(out);
  return out;
}

std::vector<Point> lattice_points(const Region2& region) {
  RowRange rows = row_range(region);
  std::vector<Point> out;
  for (Int y = rows.lo; y <= rows.hi; ++y) {
    RowSpan span = row_span(region, y);
    for (Int x = std::max<Int>(span.lo, 0); x <= span.hi; ++x) out.push_back(Point{narrow(x), narrow(y)});
  }
  sort_graded(out);
  return out;
}

}  // namespace propmod
