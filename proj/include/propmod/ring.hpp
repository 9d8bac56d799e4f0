#pragma once

// Cohen-Macaulay, Gorenstein and Buchsbaum decisions for simplicial
// proportionally modular semigroups of N^2, through their combinatorial
// criteria on the extremal generators (u and u~ in the strip case, the two
// axis generators in the all-positive case).

#include <optional>
#include <string>
#include <vector>

#include "propmod/core.hpp"
#include "propmod/lines.hpp"

namespace propmod {

/// a <=_S b iff b - a lies in S.
bool s_order_leq(const ModularInequality& ineq, const Point& a, const Point& b);

/// Elements of `set` with no strictly larger element of `set` under <=_S.
std::vector<Point> s_order_maximal(const ModularInequality& ineq, const std::vector<Point>& set);

struct AperyData {
  Point s1;  // u
  Point s2;  // u~
  std::vector<Point> apery_restricted;  // {h in G : h - u, h - u~ not in S}
  std::vector<Point> maximal_elements;
};

/// Ap(u) and Ap(u~) intersected, computed inside the strip window.
AperyData apery_intersection(const ModularInequality& ineq);

struct CmResult {
  bool value = false;
  // Gap v in L(S) with v + s1, v + s2 both in S, when one exists.
  std::optional<Point> counterexample;
  // Number of gaps the criterion was evaluated on.
  std::size_t gaps_checked = 0;
};

CmResult is_cohen_macaulay(const ModularInequality& ineq);

struct GorensteinResult {
  bool value = false;
  std::vector<Point> maximal_elements;
  std::string reason;
};

GorensteinResult is_gorenstein(const ModularInequality& ineq);

struct BuchsbaumResult {
  std::optional<bool> value;  // empty: not decided by the available criteria
  bool closure_equals_S = false;
  Point window;  // inclusive upper corner of the box the closure was compared on
  std::string reason;
};

BuchsbaumResult is_buchsbaum(const ModularInequality& ineq);

struct PropertyReport {
  bool cohen_macaulay = false;
  bool gorenstein = false;
  std::optional<bool> buchsbaum;
  std::vector<Point> apery_intersection;
  std::vector<Point> apery_maximal;
  std::optional<Point> cm_counterexample;
  bool closure_equals_S = false;
  std::string notes;
};

PropertyReport properties(const ModularInequality& ineq);

}  // namespace propmod
