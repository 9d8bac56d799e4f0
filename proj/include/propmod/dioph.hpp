#pragma once

// Minimal non-negative solutions of mixed systems of linear equations,
// congruences and lower bounds, and Hilbert bases of the cones
// { x in N^p : g(x) >= 0 }.
//
// Everything reduces to one homogeneous equation system over N^n solved by
// the Contejean-Devie completion procedure:
//   * f(x) = k (mod b)   becomes  f(x) - b t+ + b t- = k
//   * L(x) >= c          becomes  L(x) - s = c
//   * a right-hand side c becomes a column -c on an extra variable capped at 1.

#include <cstdint>
#include <vector>

#include "propmod/core.hpp"

namespace propmod {

struct Equality {
  LinearForm form;
  Int target = 0;
};

struct Congruence {
  LinearForm form;
  Int residue = 0;
  Int modulus = 1;
};

struct LowerBound {
  LinearForm form;
  Int bound = 0;
};

struct DiophSystem {
  std::size_t dim = 0;
  std::vector<Equality> equalities;
  std::vector<Congruence> congruences;
  std::vector<LowerBound> lower_bounds;

  bool homogeneous() const;
  /// Throws std::invalid_argument on broken invariants.
  void validate() const;
  bool satisfied_by(const Point& x) const;
};

struct MinimalSolutionSet {
  std::vector<Point> points;  // graded-sorted
  bool homogeneous = true;
  // Pottier bound on the 1-norm of minimal solutions of the lifted system.
  Int certified_bound = 0;
};

/// Product-order-minimal nonzero N-solutions. An infeasible system (or one
/// whose only solution is 0) yields an empty set.
MinimalSolutionSet minimal_solutions(const DiophSystem& sys);

/// Hilbert basis of { x in N^p : g(x) >= 0 }. Not an antichain in general:
/// for g = x - 3y it is {(1,0), (3,1)}.
MinimalSolutionSet cone_hilbert_basis(const LinearForm& g, std::size_t p);

/// A Hilbert basis split by the value of g: g = 0, g = i for 1 <= i < b,
/// and g >= b.
struct PartitionedBasis {
  std::vector<Point> zero;
  std::vector<std::vector<Point>> slab;  // slab[i] has g = i; slab[0] unused
  std::vector<Point> high;
};

PartitionedBasis partition_by_value(const std::vector<Point>& basis, const LinearForm& g, std::int64_t b);

/// Minimal nonzero solutions y in N^n of A y = 0 with y_j <= caps[j]
/// (caps[j] < 0 means unbounded). Rows are the equations.
std::vector<std::vector<std::int64_t>> completion_solve(const std::vector<std::vector<std::int64_t>>& rows,
                                                        const std::vector<std::int64_t>& caps);

}  // namespace propmod
