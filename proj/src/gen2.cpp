#include "propmod/gen2.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

#include "propmod/lines.hpp"

namespace propmod {

namespace {

std::vector<Point> prepare(std::vector<Point> candidates, const ModularInequality& ineq) {
  std::erase_if(candidates, [&](const Point& p) {
    if (p.dim() != ineq.dim()) throw std::invalid_argument("candidate has the wrong dimension");
    return p.is_zero() || !member(ineq, p);
  });
  sort_unique_graded(candidates);
  return candidates;
}

bool box_step(Point& s, const Point& h) {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s[i] < h[i]) {
      ++s[i];
      return true;
    }
    s[i] = 0;
  }
  return false;
}

}  // namespace

bool decomposable(const Point& h, const ModularInequality& ineq) {
  Point s(h.dim());
  while (box_step(s, h)) {
    if (s == h) break;
    if (member(ineq, s) && member(ineq, h - s)) return true;
  }
  return false;
}

GeneratorSet minimalize_serial(std::vector<Point> candidates, const ModularInequality& ineq) {
  GeneratorSet out;
  out.minimal = true;
  for (const auto& h : prepare(std::move(candidates), ineq))
    if (!decomposable(h, ineq)) out.points.push_back(h);
  return out;
}

GeneratorSet minimalize(std::vector<Point> candidates, const ModularInequality& ineq) {
  auto cands = prepare(std::move(candidates), ineq);
  GeneratorSet out;
  out.minimal = true;
  std::size_t begin = 0;
  while (begin < cands.size()) {
    const auto level = cands[begin].norm1();
    std::size_t end = begin;
    while (end < cands.size() && cands[end].norm1() == level) ++end;
    const auto n = static_cast<long long>(end - begin);
    std::vector<char> keep(static_cast<std::size_t>(n), 0);
    const auto& found = out.points;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long k = 0; k < n; ++k) {
      const Point& h = cands[begin + static_cast<std::size_t>(k)];
      bool split = false;
      for (const auto& m : found) {
        if (m.precedes(h) && member(ineq, h - m)) {
          split = true;
          break;
        }
      }
      keep[static_cast<std::size_t>(k)] = !split;
    }
    for (long long k = 0; k < n; ++k)
      if (keep[static_cast<std::size_t>(k)]) out.points.push_back(cands[begin + static_cast<std::size_t>(k)]);
    begin = end;
  }
  return out;
}

GeneratorSet min_gens_n2(const ModularInequality& ineq) {
  if (ineq.dim() != 2) throw std::invalid_argument("the geometric method requires p = 2");
  switch (classify_planar(ineq)) {
    case PlanarCase::Trivial: {
      GeneratorSet t;
      t.minimal = true;
      t.trivial = true;
      return t;
    }
    case PlanarCase::Ray: {
      GeneratorSet t;
      t.minimal = true;
      t.points = {compute_u(ineq)};
      return t;
    }
    case PlanarCase::Positive:
      return minimalize(enumerate_region(ineq, triangle_region(ineq)), ineq);
    case PlanarCase::Strip:
      return minimalize(enumerate_region(ineq, strip_region(strip_geometry(ineq))), ineq);
  }
  throw std::logic_error("unreachable");
}

}  // namespace propmod
