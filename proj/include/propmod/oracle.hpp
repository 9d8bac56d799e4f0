#pragma once

// Brute-force references. Nothing here calls the algorithm modules: each
// routine scans a finite box and applies the definition directly.

#include <cstdint>
#include <functional>
#include <vector>

#include "propmod/core.hpp"

namespace propmod::oracle {

inline constexpr std::int64_t kMaxWindowPoints = 10'000'000;

/// Inclusive box [0, B_1] x ... x [0, B_p].
struct Window {
  std::vector<std::int64_t> bounds;

  static Window cube(std::size_t p, std::int64_t side) { return {std::vector<std::int64_t>(p, side)}; }
  std::size_t dim() const { return bounds.size(); }
  std::int64_t volume() const;  // throws when above kMaxWindowPoints
  bool contains(const Point& x) const;
};

/// The defining inequality evaluated directly.
bool definition_member(const ModularInequality& ineq, const Point& x);

std::vector<Point> brute_members(const ModularInequality& ineq, const Window& window);
std::vector<Point> brute_members_serial(const ModularInequality& ineq, const Window& window);

/// All N-combinations of `gens` inside the window (dynamic programming).
std::vector<Point> closure_in_window(const std::vector<Point>& gens, const Window& window);

/// Members of a set that are not sums of two nonzero members, where the
/// set is given by a predicate on the window. Correct for any set closed
/// under addition when the window contains the generators.
std::vector<Point> brute_irreducibles(const std::function<bool(const Point&)>& in_set, const Window& window);

/// Minimal generators of S found inside the window.
std::vector<Point> brute_min_gens(const ModularInequality& ineq, const Window& window);

/// Hilbert basis of {x : g(x) >= 0} restricted to the window.
std::vector<Point> brute_cone_basis(const LinearForm& g, const Window& window);

/// Product-order-minimal nonzero points of the window satisfying `pred`.
std::vector<Point> brute_minimal(const std::function<bool(const Point&)>& pred, const Window& window);

struct FrobeniusOracleResult {
  std::vector<Point> passing;  // non-members q with q + margin inside the window that pass
  std::vector<Point> minimal;
};

/// Tests every non-member q of the window with q + margin inside it: q
/// passes when every point t of the window with t - q in the open cone of
/// S is a member. Requires p = 2 and a nontrivial simplicial semigroup.
/// Throws std::invalid_argument when the margin is too small to certify.
FrobeniusOracleResult brute_min_frobenius(const ModularInequality& ineq, const Window& window, std::int64_t margin);

/// Least margin the Frobenius oracle accepts for this inequality.
std::int64_t required_frobenius_margin(const ModularInequality& ineq);

}  // namespace propmod::oracle
