#include "propmod/lines.hpp"

#include <algorithm>
#include <stdexcept>

namespace propmod {

namespace {

void require_planar(const ModularInequality& ineq) {
  if (ineq.dim() != 2) throw std::invalid_argument("operation requires p = 2");
}

}  // namespace

Int minimal_period(Int a, Int b) {
  Int r = mod_reduce(a, b);
  if (r == 0) return 1;
  return b / gcd(r, b);
}

RayRestriction restrict_to_ray(const ModularInequality& ineq, const Point& direction) {
  if (direction.dim() != ineq.dim()) throw std::invalid_argument("dimension mismatch");
  if (direction.is_zero()) throw std::invalid_argument("zero direction");
  if (!direction.nonnegative()) throw std::invalid_argument("direction must lie in N^p");
  Int g = 0;
  for (auto c : direction.coords()) g = gcd(g, c);
  Point prim(direction.dim());
  for (std::size_t i = 0; i < direction.dim(); ++i) prim[i] = narrow(direction[i] / g);

  RayRestriction r;
  r.direction = prim;
  r.a_prime = ineq.f()(prim);
  r.c_prime = ineq.g()(prim);
  r.b = ineq.b();
  if (r.c_prime > 0) {
    r.kind = RayKind::ProportionallyModular;
  } else if (r.c_prime == 0) {
    r.kind = RayKind::FreeLine;
    r.min_multiple = minimal_period(r.a_prime, r.b);
  } else {
    r.kind = RayKind::Zero;
  }
  return r;
}

std::vector<std::int64_t> numerical_min_gens(Int a, Int b, Int c) {
  if (c <= 0) throw std::invalid_argument("numerical_min_gens requires c > 0");
  if (b <= 0) throw std::invalid_argument("modulus must be positive");
  a = mod_reduce(a, b);
  // Every x >= b / c is a member, so the multiplicity m is at most
  // ceil(b / c), the Frobenius number is below it, and minimal generators
  // are bounded by Frobenius + m.
  const Int top = checked_mul(ceil_div(b, c), 2) + 1;
  if (top > (Int(1) << 26)) throw ComputationError("numerical semigroup too large to enumerate");
  const auto n = static_cast<std::size_t>(top);
  std::vector<char> in(n + 1, 0), sum(n + 1, 0);
  for (std::size_t x = 1; x <= n; ++x) in[x] = mod_reduce(checked_mul(a, Int(x)), b) <= checked_mul(c, Int(x));
  std::vector<std::int64_t> gens;
  std::vector<std::size_t> members;
  for (std::size_t x = 1; x <= n; ++x) {
    if (!in[x]) continue;
    for (auto m : members) {
      if (m > x / 2) break;
      if (in[x - m]) {
        sum[x] = 1;
        break;
      }
    }
    if (!sum[x]) gens.push_back(static_cast<std::int64_t>(x));
    members.push_back(x);
  }
  return gens;
}

PlanarCase classify_planar(const ModularInequality& ineq) {
  require_planar(ineq);
  auto g1 = ineq.g()[0], g2 = ineq.g()[1];
  if (g1 < 0 && g2 < 0) return PlanarCase::Trivial;
  if (g1 > 0 && g2 > 0) return PlanarCase::Positive;
  if (g1 > 0 || g2 > 0) return PlanarCase::Strip;
  return PlanarCase::Ray;
}

Point compute_u(const ModularInequality& ineq) {
  require_planar(ineq);
  auto g1 = ineq.g()[0], g2 = ineq.g()[1];
  if (Int(g1) * g2 > 0) throw std::invalid_argument("compute_u requires g1 * g2 <= 0");
  Point d{0, 0};
  if (g1 == 0) {
    d = Point{1, 0};
  } else if (g2 == 0) {
    d = Point{0, 1};
  } else {
    Int a1 = g1 < 0 ? -Int(g1) : Int(g1);
    Int a2 = g2 < 0 ? -Int(g2) : Int(g2);
    Int t = gcd(a1, a2);
    d = Point{narrow(a2 / t), narrow(a1 / t)};
  }
  Int k = minimal_period(ineq.f()(d), ineq.b());
  return d.scaled(narrow(k));
}

std::int64_t axis_min_member(const ModularInequality& ineq, Axis axis) {
  require_planar(ineq);
  auto i = static_cast<std::size_t>(axis);
  Int gi = ineq.g()[i];
  if (gi <= 0) throw std::invalid_argument("axis semigroup needs a positive g coefficient");
  Int b = ineq.b();
  Int fi = ineq.f()[i];
  // x = ceil(b / gi) is always a member.
  Int limit = ceil_div(b, gi);
  for (Int x = 1; x <= limit; ++x)
    if (mod_reduce(checked_mul(fi, x), b) <= checked_mul(gi, x)) return narrow(x);
  return narrow(limit);
}

Axis strip_axis(const ModularInequality& ineq) {
  require_planar(ineq);
  if (classify_planar(ineq) != PlanarCase::Strip)
    throw std::invalid_argument("strip geometry requires g1 * g2 <= 0 with a positive coefficient");
  return ineq.g()[0] > 0 ? Axis::X : Axis::Y;
}

Point compute_u_tilde(const ModularInequality& ineq) {
  Axis axis = strip_axis(ineq);
  auto m = axis_min_member(ineq, axis);
  return axis == Axis::X ? Point{m, 0} : Point{0, m};
}

RationalPoint compute_w(const ModularInequality& ineq) {
  Axis axis = strip_axis(ineq);
  auto i = static_cast<std::size_t>(axis);
  Rational t(ineq.b(), ineq.g()[i]);
  return axis == Axis::X ? RationalPoint{t, Rational(0)} : RationalPoint{Rational(0), t};
}

StripGeometry strip_geometry(const ModularInequality& ineq) {
  StripGeometry s;
  s.axis = strip_axis(ineq);
  s.u = compute_u(ineq);
  s.u_tilde = compute_u_tilde(ineq);
  s.w = compute_w(ineq);
  return s;
}

}  // namespace propmod
