#include "propmod/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace propmod::oracle {

namespace {

std::int64_t linear_index(const Window& w, const Point& x) {
  std::int64_t k = 0, stride = 1;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    k += x[i] * stride;
    stride *= w.bounds[i] + 1;
  }
  return k;
}

Point unindex(const Window& w, std::int64_t k) {
  Point x(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) {
    x[i] = k % (w.bounds[i] + 1);
    k /= w.bounds[i] + 1;
  }
  return x;
}

}  // namespace

std::int64_t Window::volume() const {
  if (bounds.empty() || bounds.size() > kMaxDim) throw std::invalid_argument("window dimension out of range");
  std::int64_t v = 1;
  for (auto b : bounds) {
    if (b < 0) throw std::invalid_argument("window bounds must be non-negative");
    v *= b + 1;
    if (v > kMaxWindowPoints) throw std::invalid_argument("window too large for exhaustive scan");
  }
  return v;
}

bool Window::contains(const Point& x) const {
  if (x.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] < 0 || x[i] > bounds[i]) return false;
  return true;
}

bool definition_member(const ModularInequality& ineq, const Point& x) {
  Int fx = 0, gx = 0;
  for (std::size_t i = 0; i < ineq.dim(); ++i) {
    if (x[i] < 0) return false;
    fx += Int(ineq.f()[i]) * x[i];
    gx += Int(ineq.g()[i]) * x[i];
  }
  Int r = fx % ineq.b();
  if (r < 0) r += ineq.b();
  return r <= gx;
}

std::vector<Point> brute_members_serial(const ModularInequality& ineq, const Window& window) {
  if (window.dim() != ineq.dim()) throw std::invalid_argument("window dimension mismatch");
  const auto n = window.volume();
  std::vector<Point> out;
  for (std::int64_t k = 0; k < n; ++k) {
    Point x = unindex(window, k);
    if (definition_member(ineq, x)) out.push_back(x);
  }
  sort_graded(out);
  return out;
}

std::vector<Point> brute_members(const ModularInequality& ineq, const Window& window) {
  if (window.dim() != ineq.dim()) throw std::invalid_argument("window dimension mismatch");
  const auto n = window.volume();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) in[static_cast<std::size_t>(k)] = definition_member(ineq, unindex(window, k));
  std::vector<Point> out;
  for (std::int64_t k = 0; k < n; ++k)
    if (in[static_cast<std::size_t>(k)]) out.push_back(unindex(window, k));
  sort_graded(out);
  return out;
}

std::vector<Point> closure_in_window(const std::vector<Point>& gens, const Window& window) {
  const auto n = window.volume();
  std::vector<char> reach(static_cast<std::size_t>(n), 0);
  reach[0] = 1;
  // Linear index order is compatible with the product order, so every
  // predecessor x - g is settled before x.
  for (std::int64_t k = 1; k < n; ++k) {
    Point x = unindex(window, k);
    for (const auto& g : gens) {
      if (g.dim() != window.dim()) throw std::invalid_argument("generator dimension mismatch");
      if (g.is_zero() || !g.precedes(x)) continue;
      if (reach[static_cast<std::size_t>(linear_index(window, x - g))]) {
        reach[static_cast<std::size_t>(k)] = 1;
        break;
      }
    }
  }
  std::vector<Point> out;
  for (std::int64_t k = 0; k < n; ++k)
    if (reach[static_cast<std::size_t>(k)]) out.push_back(unindex(window, k));
  sort_graded(out);
  return out;
}

std::vector<Point> brute_irreducibles(const std::function<bool(const Point&)>& in_set, const Window& window) {
  const auto n = window.volume();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (std::int64_t k = 0; k < n; ++k) in[static_cast<std::size_t>(k)] = in_set(unindex(window, k));
  std::vector<Point> members;
  for (std::int64_t k = 1; k < n; ++k)
    if (in[static_cast<std::size_t>(k)]) members.push_back(unindex(window, k));
  std::vector<Point> out;
  for (const auto& h : members) {
    bool split = false;
    for (const auto& s : members) {
      if (s == h || !s.precedes(h)) continue;
      if (in[static_cast<std::size_t>(linear_index(window, h - s))]) {
        split = true;
        break;
      }
    }
    if (!split) out.push_back(h);
  }
  sort_graded(out);
  return out;
}

std::vector<Point> brute_min_gens(const ModularInequality& ineq, const Window& window) {
  return brute_irreducibles([&](const Point& x) { return definition_member(ineq, x); }, window);
}

std::vector<Point> brute_cone_basis(const LinearForm& g, const Window& window) {
  return brute_irreducibles([&](const Point& x) { return g(x) >= 0; }, window);
}

std::vector<Point> brute_minimal(const std::function<bool(const Point&)>& pred, const Window& window) {
  const auto n = window.volume();
  std::vector<Point> sols;
  for (std::int64_t k = 1; k < n; ++k) {
    Point x = unindex(window, k);
    if (pred(x)) sols.push_back(x);
  }
  std::vector<Point> out;
  for (const auto& s : sols)
    if (std::none_of(sols.begin(), sols.end(), [&](const Point& t) { return t != s && t.precedes(s); }))
      out.push_back(s);
  sort_graded(out);
  return out;
}

namespace {

// Open cone of S from the sign pattern of g: positive quadrant when both
// coefficients are positive, otherwise the wedge between the axis with
// positive coefficient and the line g = 0.
bool in_open_cone(const ModularInequality& ineq, const Point& z) {
  const auto g1 = ineq.g()[0], g2 = ineq.g()[1];
  const Int gz = Int(g1) * z[0] + Int(g2) * z[1];
  if (g1 > 0 && g2 > 0) return z[0] > 0 && z[1] > 0;
  if (g1 > 0) return z[1] > 0 && gz > 0;
  return z[0] > 0 && gz > 0;
}

// Smallest nonzero member of S on the line g = 0, scanning multiples of
// the primitive direction.
std::int64_t period_extent(const ModularInequality& ineq) {
  const auto g1 = ineq.g()[0], g2 = ineq.g()[1];
  if (g1 > 0 && g2 > 0) return 0;
  std::int64_t d1 = g2 == 0 ? 0 : (g2 < 0 ? -g2 : g2);
  std::int64_t d2 = g1 == 0 ? 0 : (g1 < 0 ? -g1 : g1);
  if (g1 == 0) d1 = 1;
  if (g2 == 0) d2 = 1;
  std::int64_t t = std::gcd(d1, d2);
  d1 /= t;
  d2 /= t;
  for (std::int64_t k = 1;; ++k)
    if (definition_member(ineq, Point{k * d1, k * d2})) return k * (d1 + d2);
}

}  // namespace

std::int64_t required_frobenius_margin(const ModularInequality& ineq) {
  if (ineq.dim() != 2) throw std::invalid_argument("Frobenius oracle requires p = 2");
  return period_extent(ineq) + ineq.b() + 1;
}

FrobeniusOracleResult brute_min_frobenius(const ModularInequality& ineq, const Window& window, std::int64_t margin) {
  if (ineq.dim() != 2 || window.dim() != 2) throw std::invalid_argument("Frobenius oracle requires p = 2");
  const auto g1 = ineq.g()[0], g2 = ineq.g()[1];
  if (!(g1 > 0 || g2 > 0)) throw std::invalid_argument("Frobenius oracle needs a simplicial semigroup");
  if (margin < required_frobenius_margin(ineq))
    throw std::invalid_argument("margin too small to certify Frobenius vectors");
  window.volume();
  FrobeniusOracleResult out;
  for (std::int64_t x = 0; x + margin <= window.bounds[0]; ++x) {
    for (std::int64_t y = 0; y + margin <= window.bounds[1]; ++y) {
      Point q{x, y};
      if (definition_member(ineq, q)) continue;
      bool ok = true;
      for (std::int64_t tx = x; tx <= window.bounds[0] && ok; ++tx)
        for (std::int64_t ty = y; ty <= window.bounds[1]; ++ty) {
          Point t{tx, ty};
          if (in_open_cone(ineq, t - q) && !definition_member(ineq, t)) {
            ok = false;
            break;
          }
        }
      if (ok) out.passing.push_back(q);
    }
  }
  sort_graded(out.passing);
  for (const auto& q : out.passing)
    if (std::none_of(out.passing.begin(), out.passing.end(), [&](const Point& r) { return r != q && r.precedes(q); }))
      out.minimal.push_back(q);
  return out;
}

}  // namespace propmod::oracle
