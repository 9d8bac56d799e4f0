#include "propmod/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "propmod/gen2.hpp"
#include "propmod/region.hpp"

namespace propmod {

namespace {

PlanarCase require_simplicial(const ModularInequality& ineq) {
  if (ineq.dim() != 2) throw std::invalid_argument("ring properties are decided for p = 2");
  auto kind = classify_planar(ineq);
  if (kind == PlanarCase::Trivial || kind == PlanarCase::Ray)
    throw std::invalid_argument("ring properties need a nontrivial simplicial semigroup");
  return kind;
}

/// Gaps of L(S) cut down to representatives: in the strip case rows below
/// u (in the u~-axis frame) with 0 <= g < b; in the positive case every gap.
std::vector<Point> fundamental_gaps(const ModularInequality& ineq, PlanarCase kind) {
  std::vector<Point> out;
  const auto& g = ineq.g();
  const Int b = ineq.b();
  if (kind == PlanarCase::Positive) {
    for (Int x = 0; checked_mul(g[0], x) < b; ++x)
      for (Int y = 0; checked_add(checked_mul(g[0], x), checked_mul(g[1], y)) < b; ++y) {
        Point p{narrow(x), narrow(y)};
        if (!member(ineq, p)) out.push_back(p);
      }
  } else {
    StripGeometry geom = strip_geometry(ineq);
    const std::size_t ax = geom.axis == Axis::X ? 0 : 1, other = 1 - ax;
    const Int ga = g[ax], go = g[other];
    for (Int r = 0; r < geom.u[other]; ++r) {
      Int lo = ceil_div(checked_neg(checked_mul(go, r)), ga);
      Int hi = floor_div(checked_sub(checked_sub(b, 1), checked_mul(go, r)), ga);
      for (Int c = std::max<Int>(lo, 0); c <= hi; ++c) {
        Point p(2);
        p[ax] = narrow(c);
        p[other] = narrow(r);
        if (!member(ineq, p)) out.push_back(p);
      }
    }
  }
  sort_graded(out);
  return out;
}

std::pair<Point, Point> extremal_generators(const ModularInequality& ineq, PlanarCase kind) {
  if (kind == PlanarCase::Positive)
    return {Point{axis_min_member(ineq, Axis::X), 0}, Point{0, axis_min_member(ineq, Axis::Y)}};
  return {compute_u(ineq), compute_u_tilde(ineq)};
}

}  // namespace

bool s_order_leq(const ModularInequality& ineq, const Point& a, const Point& b) { return member(ineq, b - a); }

std::vector<Point> s_order_maximal(const ModularInequality& ineq, const std::vector<Point>& set) {
  std::vector<Point> out;
  for (const auto& a : set) {
    bool dominated = std::any_of(set.begin(), set.end(), [&](const Point& c) { return c != a && s_order_leq(ineq, a, c); });
    if (!dominated) out.push_back(a);
  }
  return out;
}

AperyData apery_intersection(const ModularInequality& ineq) {
  if (require_simplicial(ineq) != PlanarCase::Strip)
    throw std::invalid_argument("the Apery intersection is computed in the strip case g1 g2 <= 0");
  StripGeometry geom = strip_geometry(ineq);
  AperyData out;
  out.s1 = geom.u;
  out.s2 = geom.u_tilde;
  auto window = enumerate_region(ineq, strip_region(geom));
  window.insert(window.begin(), Point{0, 0});
  for (const auto& h : window)
    if (!member(ineq, h - geom.u) && !member(ineq, h - geom.u_tilde)) out.apery_restricted.push_back(h);
  out.maximal_elements = s_order_maximal(ineq, out.apery_restricted);
  return out;
}

CmResult is_cohen_macaulay(const ModularInequality& ineq) {
  auto kind = require_simplicial(ineq);
  auto [s1, s2] = extremal_generators(ineq, kind);
  CmResult out;
  out.value = true;
  for (const auto& v : fundamental_gaps(ineq, kind)) {
    ++out.gaps_checked;
    if (member(ineq, v + s1) && member(ineq, v + s2)) {
      out.value = false;
      out.counterexample = v;
      break;
    }
  }
  if (kind == PlanarCase::Strip && !out.value)
    throw ComputationError("strip-case semigroup failed the Cohen-Macaulay criterion: " + ineq.str());
  return out;
}

GorensteinResult is_gorenstein(const ModularInequality& ineq) {
  auto kind = require_simplicial(ineq);
  GorensteinResult out;
  if (!is_cohen_macaulay(ineq).value) {
    out.reason = "not Cohen-Macaulay";
    return out;
  }
  if (kind == PlanarCase::Positive) {
    // Cohen-Macaulay with a finite complement only happens for S = N^2,
    // where Ap(e1) n Ap(e2) = {0}.
    out.value = true;
    out.maximal_elements = {Point{0, 0}};
    out.reason = "S = N^2";
    return out;
  }
  auto ap = apery_intersection(ineq);
  out.maximal_elements = ap.maximal_elements;
  out.value = ap.maximal_elements.size() == 1;
  out.reason = out.value ? "unique maximal element" : "several maximal elements";
  return out;
}

BuchsbaumResult is_buchsbaum(const ModularInequality& ineq) {
  auto kind = require_simplicial(ineq);
  BuchsbaumResult out;
  auto gens = min_gens_n2(ineq);
  if (kind == PlanarCase::Positive) {
    if (gens.points.size() == 2 && gens.points[0] == Point{0, 1} && gens.points[1] == Point{1, 0}) {
      out.value = true;
      out.closure_equals_S = true;
      out.window = Point{0, 0};
      out.reason = "S = N^2";
    } else {
      out.reason = "not determined: finite complement lies outside the strip-case criterion";
    }
    return out;
  }
  // Compare the closure {s : s + s_i in S for all minimal generators s_i}
  // with S on the strip window widened by u and u~.
  StripGeometry geom = strip_geometry(ineq);
  Int xmax = 0, ymax = 0;
  for (const auto& v : strip_region(geom).vertices) {
    xmax = std::max(xmax, v[0].ceil());
    ymax = std::max(ymax, v[1].ceil());
  }
  xmax = checked_add(xmax, checked_add(geom.u[0], geom.u_tilde[0]));
  ymax = checked_add(ymax, checked_add(geom.u[1], geom.u_tilde[1]));
  out.window = Point{narrow(xmax), narrow(ymax)};
  out.closure_equals_S = true;
  for (Int x = 0; x <= xmax && out.closure_equals_S; ++x) {
    for (Int y = 0; y <= ymax; ++y) {
      Point s{narrow(x), narrow(y)};
      bool closure = std::all_of(gens.points.begin(), gens.points.end(),
                                 [&](const Point& gi) { return member(ineq, s + gi); });
      if (closure != member(ineq, s)) {
        out.closure_equals_S = false;
        break;
      }
    }
  }
  bool cm = is_cohen_macaulay(ineq).value;
  out.value = out.closure_equals_S && cm;
  out.reason = out.closure_equals_S ? "closure equals S and S is Cohen-Macaulay" : "closure differs from S";
  return out;
}

PropertyReport properties(const ModularInequality& ineq) {
  auto kind = require_simplicial(ineq);
  PropertyReport rep;
  auto cm = is_cohen_macaulay(ineq);
  rep.cohen_macaulay = cm.value;
  rep.cm_counterexample = cm.counterexample;
  auto gor = is_gorenstein(ineq);
  rep.gorenstein = gor.value;
  rep.apery_maximal = gor.maximal_elements;
  if (kind == PlanarCase::Strip) rep.apery_intersection = apery_intersection(ineq).apery_restricted;
  else if (gor.value) rep.apery_intersection = {Point{0, 0}};
  auto bb = is_buchsbaum(ineq);
  rep.buchsbaum = bb.value;
  rep.closure_equals_S = bb.closure_equals_S;
  rep.notes = bb.reason;
  return rep;
}

}  // namespace propmod
