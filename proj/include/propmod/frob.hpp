#pragma once

// Frobenius vectors of proportionally modular semigroups of N^2.
//
// q is a Frobenius vector when q lies in G(S) \ S and every point of G(S)
// in q + (open cone of S) is a nonzero member of S. Candidates come from
// the finite set Delta of gaps inside the fundamental region of each case.

#include <optional>
#include <span>
#include <vector>

#include "propmod/core.hpp"
#include "propmod/gen2.hpp"
#include "propmod/lines.hpp"

namespace propmod {

/// Hermite basis {(a, c), (0, d)} of a rank-2 sublattice of Z^2, a, d > 0,
/// 0 <= c < d.
struct LatticeBasis {
  Point first;
  Point second;

  Int index() const;
  bool contains(const Point& x) const;
};

/// Basis of the group generated by the points. Throws ComputationError for
/// rank < 2.
LatticeBasis group_basis(std::span<const Point> gens);
LatticeBasis group_basis(const GeneratorSet& gens);

struct FrobeniusReport {
  PlanarCase kind = PlanarCase::Strip;
  std::vector<Point> delta;              // candidate gaps, graded-sorted
  std::vector<Point> frobenius_vectors;  // elements of delta passing the definition
  std::vector<Point> below_cone;         // strip case: passing points of N^2 with g < 0
  std::vector<Point> minimal;            // product-order-minimal Frobenius vectors
  std::optional<Point> closest;          // strip case: gap closest to {g = b}
  LatticeBasis group;
};

/// Exact definition check. The infinite quantifier is reduced to a finite
/// set: points with g >= b are members, and in the strip case the period u
/// maps the test set onto itself.
bool is_frobenius_vector(const ModularInequality& ineq, const Point& q, const LatticeBasis& group);

FrobeniusReport frobenius_vectors(const ModularInequality& ineq);

}  // namespace propmod
