#pragma once

// Restriction of S to rays through the origin, and the distinguished
// vectors of the planar case: the period u on {g = 0}, the smallest axis
// member u~ and the point w where {g = b} meets that axis.

#include <array>
#include <cstdint>
#include <vector>

#include "propmod/core.hpp"

namespace propmod {

enum class RayKind {
  ProportionallyModular,  // g(direction) > 0: a' x mod b <= c' x
  FreeLine,               // g(direction) = 0: multiples of k * direction
  Zero,                   // g(direction) < 0: only the origin
};

struct RayRestriction {
  Point direction;  // primitive
  Int a_prime = 0;
  Int c_prime = 0;
  std::int64_t b = 1;
  RayKind kind = RayKind::Zero;
  // For FreeLine: least k >= 1 with k * a' = 0 mod b.
  Int min_multiple = 1;
};

RayRestriction restrict_to_ray(const ModularInequality& ineq, const Point& direction);

/// Least k >= 1 with k * a = 0 (mod b).
Int minimal_period(Int a, Int b);

/// Minimal generators of { x in N : a x mod b <= c x }, ascending.
/// Requires c > 0.
std::vector<std::int64_t> numerical_min_gens(Int a, Int b, Int c);

/// Sign layout of g in the plane.
enum class PlanarCase {
  Trivial,   // g1, g2 < 0: S = {0}
  Positive,  // g1, g2 > 0: finite complement
  Strip,     // g1 g2 <= 0 with a positive coefficient
  Ray,       // g1 g2 <= 0 with no positive coefficient: S = N u
};

PlanarCase classify_planar(const ModularInequality& ineq);

enum class Axis { X = 0, Y = 1 };

using RationalPoint = std::array<Rational, 2>;

struct StripGeometry {
  Point u;
  Point u_tilde;
  RationalPoint w;
  Axis axis = Axis::X;
};

Point compute_u(const ModularInequality& ineq);
/// Smallest nonzero member of S on the given axis of the plane, if the
/// axis semigroup is nontrivial.
std::int64_t axis_min_member(const ModularInequality& ineq, Axis axis);
Point compute_u_tilde(const ModularInequality& ineq);
RationalPoint compute_w(const ModularInequality& ineq);
/// Requires PlanarCase::Strip.
StripGeometry strip_geometry(const ModularInequality& ineq);

/// The axis carrying u~ and w in the strip case.
Axis strip_axis(const ModularInequality& ineq);

}  // namespace propmod
