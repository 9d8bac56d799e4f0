#pragma once

// Generating sets in N^p from the constructive finite-generation argument:
// Hilbert basis of the cone g >= 0, slab-by-slab elimination of the values
// 1..b-1, the period solutions U, the boxes over V, and the minimal
// solutions M_dk of f(x) mod b = k, g(x) = d.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "propmod/core.hpp"
#include "propmod/dioph.hpp"
#include "propmod/gen2.hpp"

namespace propmod {

inline constexpr std::size_t kDefaultSetCap = 1'000'000;

struct ConstructionTrace {
  MinimalSolutionSet U;  // {g = 0, f = 0 mod b}
  MinimalSolutionSet V;  // {g = 0}
  PartitionedBasis C0;   // Hilbert basis of g >= 0 split by g-value
  std::vector<std::vector<Point>> Ck;  // Ck[k-1] = C_k, k = 1..b-1
  std::vector<Point> C;                // (C_{b-1} \ V) u U
  std::vector<Point> Ctilde;           // C plus the member boxes above it
  std::map<std::pair<std::int64_t, std::int64_t>, MinimalSolutionSet> Mdk;
  GeneratorSet generators;
};

/// Requires some pair g_i g_j <= 0 and p <= 3.
ConstructionTrace construction_trace(const ModularInequality& ineq, std::size_t cap = kDefaultSetCap);

/// Minimal generating set in N^p, p <= 3, by sign case:
/// all g_i < 0 trivial, all g_i > 0 bounded region, otherwise the trace.
GeneratorSet min_gens_np(const ModularInequality& ineq, std::size_t cap = kDefaultSetCap);

/// Candidate region of the all-positive case: every minimal generator x
/// satisfies, for each axis i, x_i < u~_i or g(x) < b + g_i u~_i.
std::vector<Point> positive_case_candidates(const ModularInequality& ineq, std::size_t cap = kDefaultSetCap);

}  // namespace propmod
