#pragma once

#include <vector>

#include "propmod/core.hpp"
#include "propmod/region.hpp"

namespace propmod {

struct GeneratorSet {
  std::vector<Point> points;  // graded-sorted
  bool minimal = false;
  bool trivial = false;  // S = {0}; points is then empty
};

/// Keeps the candidates that are not a sum of two nonzero members of S.
///
/// Requires that the candidates generate S. Under that hypothesis a member
/// h decomposes iff h - m lies in S for some minimal generator m < h, and
/// minimal generators of smaller norm are settled before h is examined.
/// Candidates are processed one norm level at a time; the checks inside a
/// level run in parallel.
GeneratorSet minimalize(std::vector<Point> candidates, const ModularInequality& ineq);

/// Reference version: decomposition search over every lattice point below h.
GeneratorSet minimalize_serial(std::vector<Point> candidates, const ModularInequality& ineq);

/// True iff h is a sum of two nonzero members of S (searches the box [0, h]).
bool decomposable(const Point& h, const ModularInequality& ineq);

/// Minimal generating set of a proportionally modular semigroup of N^2 by
/// the geometric strip / triangle method.
GeneratorSet min_gens_n2(const ModularInequality& ineq);

}  // namespace propmod
