#include "propmod/frob.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "propmod/region.hpp"

namespace propmod {

Int LatticeBasis::index() const { return checked_mul(first[0], second[1]); }

bool LatticeBasis::contains(const Point& x) const {
  if (x.dim() != 2) return false;
  if (x[0] % first[0] != 0) return false;
  Int k = x[0] / first[0];
  Int rest = checked_sub(x[1], checked_mul(k, first[1]));
  return mod_reduce(rest, second[1]) == 0;
}

LatticeBasis group_basis(std::span<const Point> gens) {
  struct Row {
    Int x, y;
  };
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.dim() != 2) throw std::invalid_argument("group_basis works in Z^2");
    if (!g.is_zero()) rows.push_back({g[0], g[1]});
  }
  // Euclid on the first column.
  while (true) {
    auto pivot = rows.end();
    for (auto it = rows.begin(); it != rows.end(); ++it)
      if (it->x != 0 && (pivot == rows.end() || (it->x < 0 ? -it->x : it->x) < (pivot->x < 0 ? -pivot->x : pivot->x)))
        pivot = it;
    if (pivot == rows.end()) break;
    bool changed = false;
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it == pivot || it->x == 0) continue;
      Int q = it->x / pivot->x;
      it->x = checked_sub(it->x, checked_mul(q, pivot->x));
      it->y = checked_sub(it->y, checked_mul(q, pivot->y));
      changed = true;
    }
    if (!changed) break;
  }
  Row lead{0, 0};
  Int d = 0;
  for (const auto& r : rows) {
    if (r.x != 0)
      lead = r;
    else
      d = gcd(d, r.y);
  }
  if (lead.x == 0 || d == 0) throw ComputationError("generators span a lattice of rank < 2");
  if (lead.x < 0) lead = {-lead.x, -lead.y};
  return {Point{narrow(lead.x), narrow(mod_reduce(lead.y, d))}, Point{0, narrow(d)}};
}

LatticeBasis group_basis(const GeneratorSet& gens) {
  if (gens.trivial) throw ComputationError("the trivial semigroup has no rank-2 group");
  return group_basis(std::span<const Point>(gens.points));
}

namespace {

Point swap(const Point& p) { return Point{p[1], p[0]}; }

bool strip_check(const ModularInequality& ineq, const Point& q, const LatticeBasis& group) {
  StripGeometry geom = strip_geometry(ineq);
  const bool flip = geom.axis == Axis::Y;
  // Work in the frame where u~ sits on the x-axis.
  Point u = flip ? swap(geom.u) : geom.u;
  Point qq = flip ? swap(q) : q;
  const std::size_t ax = flip ? 1 : 0, other = 1 - ax;
  const Int g1 = ineq.g()[ax], g2 = ineq.g()[other];
  const Int b = ineq.b();
  auto g_of = [&](Int x, Int y) { return checked_add(checked_mul(g1, x), checked_mul(g2, y)); };
  // Representatives t = q + z with z = alpha u + beta e1, 0 < alpha <= 1,
  // beta > 0 and g(t) < b.
  for (Int z2 = 1; z2 <= u[1]; ++z2) {
    Int z1 = checked_add(floor_div(checked_mul(z2, u[0]), u[1]), 1);
    while (g_of(qq[0] + z1, qq[1] + z2) < b) {
      Point t{narrow(qq[0] + z1), narrow(qq[1] + z2)};
      Point orig = flip ? swap(t) : t;
      if (group.contains(orig) && !member(ineq, orig)) return false;
      ++z1;
    }
  }
  return true;
}

bool positive_check(const ModularInequality& ineq, const Point& q, const LatticeBasis& group) {
  const auto& g = ineq.g();
  const Int b = ineq.b();
  for (Int z1 = 1; g(Point{narrow(q[0] + z1), narrow(q[1] + 1)}) < b; ++z1) {
    for (Int z2 = 1;; ++z2) {
      Point t{narrow(q[0] + z1), narrow(q[1] + z2)};
      if (g(t) >= b) break;
      if (group.contains(t) && !member(ineq, t)) return false;
    }
  }
  return true;
}

std::vector<Point> gaps_in(const ModularInequality& ineq, const Region2& region) {
  auto pts = lattice_points(region);
  std::erase_if(pts, [&](const Point& p) { return member(ineq, p); });
  return pts;
}

/// Strip case: points of N^2 just below {g = 0} with q - u outside N^2. A
/// passing q needs q + u + u~ in S, so g(q) >= -g(u~).
std::vector<Point> band_below_cone(const ModularInequality& ineq, const StripGeometry& geom) {
  const bool flip = geom.axis == Axis::Y;
  Point u = flip ? swap(geom.u) : geom.u;
  Point ut = flip ? swap(geom.u_tilde) : geom.u_tilde;
  const std::size_t ax = flip ? 1 : 0, other = 1 - ax;
  const Int g1 = ineq.g()[ax], g2 = ineq.g()[other];
  const Int depth = checked_mul(g1, ut[0]);
  std::vector<Point> out;
  if (u[0] == 0 || u[1] == 0) return out;  // g >= 0 on all of N^2
  const Int top = checked_add(u[1], ceil_div(checked_mul(ut[0], u[1]), u[0])) + 1;
  for (Int y = 0; y <= top; ++y) {
    Int lo = std::max<Int>(0, ceil_div(checked_sub(checked_neg(depth), checked_mul(g2, y)), g1));
    Int hi = floor_div(checked_sub(-1, checked_mul(g2, y)), g1);
    for (Int x = lo; x <= hi; ++x) {
      if (x >= u[0] && y >= u[1]) continue;
      Point p{narrow(x), narrow(y)};
      out.push_back(flip ? swap(p) : p);
    }
  }
  sort_graded(out);
  return out;
}

std::vector<Point> passing(const ModularInequality& ineq, const std::vector<Point>& cands, const LatticeBasis& group) {
  const auto n = static_cast<long long>(cands.size());
  std::vector<char> pass(cands.size(), 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) {
    try {
      pass[static_cast<std::size_t>(i)] = is_frobenius_vector(ineq, cands[static_cast<std::size_t>(i)], group);
    } catch (...) {
#pragma omp critical(propmod_frob_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Point> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (pass[i]) out.push_back(cands[i]);
  return out;
}

}  // namespace

bool is_frobenius_vector(const ModularInequality& ineq, const Point& q, const LatticeBasis& group) {
  if (ineq.dim() != 2 || q.dim() != 2) throw std::invalid_argument("Frobenius vectors are defined here for p = 2");
  if (!group.contains(q) || member(ineq, q)) return false;
  if (!q.nonnegative()) throw std::invalid_argument("candidate must lie in N^2");
  switch (classify_planar(ineq)) {
    case PlanarCase::Strip:
      return strip_check(ineq, q, group);
    case PlanarCase::Positive:
      return positive_check(ineq, q, group);
    default:
      throw std::invalid_argument("Frobenius vectors need a nontrivial simplicial semigroup");
  }
}

FrobeniusReport frobenius_vectors(const ModularInequality& ineq) {
  if (ineq.dim() != 2) throw std::invalid_argument("Frobenius vectors are computed for p = 2");
  FrobeniusReport rep;
  rep.kind = classify_planar(ineq);
  if (rep.kind == PlanarCase::Trivial || rep.kind == PlanarCase::Ray)
    throw std::invalid_argument("Frobenius vectors need a nontrivial simplicial semigroup");
  rep.group = group_basis(min_gens_n2(ineq));

  std::optional<StripGeometry> geom;
  if (rep.kind == PlanarCase::Strip) {
    geom = strip_geometry(ineq);
    rep.delta = gaps_in(ineq, gap_parallelogram(*geom));
  } else {
    RationalPoint o{Rational(0), Rational(0)};
    RationalPoint w1{Rational(ineq.b(), ineq.g()[0]), Rational(0)};
    RationalPoint w2{Rational(0), Rational(ineq.b(), ineq.g()[1])};
    rep.delta = gaps_in(ineq, Region2{{o, w1, w2}, RegionKind::Triangle});
  }
  rep.frobenius_vectors = passing(ineq, rep.delta, rep.group);
  std::vector<Point> all = rep.frobenius_vectors;
  if (geom) {
    std::vector<Point> band = band_below_cone(ineq, *geom);
    std::erase_if(band, [&](const Point& p) { return !rep.group.contains(p); });
    rep.below_cone = passing(ineq, band, rep.group);
    all.insert(all.end(), rep.below_cone.begin(), rep.below_cone.end());
  }
  rep.minimal = minimal_antichain(std::move(all));

  auto not_unique = [&](const std::vector<Point>& closest) {
    std::ostringstream os;
    os << "minimal Frobenius vector is not unique for " << ineq.str() << ": closest passing {";
    for (const auto& c : closest) os << ' ' << c.str();
    os << " }, minimal {";
    for (const auto& c : rep.minimal) os << ' ' << c.str();
    os << " }";
    throw ComputationError(os.str());
  };
  if (rep.kind == PlanarCase::Strip && !rep.delta.empty()) {
    Int best = ineq.g()(rep.delta.front());
    for (const auto& d : rep.delta) best = std::max(best, ineq.g()(d));
    std::vector<Point> closest;
    for (const auto& d : rep.delta)
      if (ineq.g()(d) == best) closest.push_back(d);
    closest = minimal_antichain(std::move(closest));
    std::vector<Point> pass;
    for (const auto& c : closest)
      if (is_frobenius_vector(ineq, c, rep.group)) pass.push_back(c);
    if (pass.size() != 1 || rep.minimal.size() != 1 || rep.minimal.front() != pass.front()) not_unique(pass);
    rep.closest = pass.front();
  } else if (rep.kind == PlanarCase::Strip && rep.minimal.size() > 1) {
    not_unique({});
  }
  return rep;
}

}  // namespace propmod
