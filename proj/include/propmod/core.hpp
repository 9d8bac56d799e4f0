#pragma once

// Data model for proportionally modular semigroups
//   S = { x in N^p : f(x) mod b <= g(x) }
// with integer linear forms f, g and a positive integer modulus b.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "propmod/integer.hpp"
#include "propmod/rational.hpp"

namespace propmod {

inline constexpr std::size_t kMaxDim = 4;

/// A lattice point of Z^p, p <= kMaxDim. Points of N^p are the
/// non-negative ones; signed points appear as differences.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim);
  Point(std::initializer_list<std::int64_t> coords);
  explicit Point(std::span<const std::int64_t> coords);

  std::size_t dim() const { return dim_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coords() const { return {c_.data(), dim_}; }

  bool is_zero() const;
  bool nonnegative() const;
  std::int64_t norm1() const;

  /// Product order: *this precedes other iff other - *this lies in N^p.
  bool precedes(const Point& other) const;

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point scaled(std::int64_t k) const;

  friend bool operator==(const Point& a, const Point& b) = default;

  std::string str() const;

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

/// Graded lexicographic order: by 1-norm, then lexicographically.
struct GradedLess {
  bool operator()(const Point& a, const Point& b) const;
};

struct PointHash {
  std::size_t operator()(const Point& p) const;
};

void sort_graded(std::vector<Point>& points);
void sort_unique_graded(std::vector<Point>& points);

/// The product-order-minimal elements of `points`, graded-sorted.
std::vector<Point> minimal_antichain(std::vector<Point> points);

class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}
  LinearForm(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

  std::size_t dim() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Int operator()(const Point& x) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// The inequality f(x) mod b <= g(x). Construction validates the
/// invariants: equal lengths, nonzero forms, b >= 1.
class ModularInequality {
 public:
  ModularInequality(LinearForm f, LinearForm g, std::int64_t b);

  const LinearForm& f() const { return f_; }
  const LinearForm& g() const { return g_; }
  std::int64_t b() const { return b_; }
  std::size_t dim() const { return f_.dim(); }

  bool contains(const Point& x) const;

  friend bool operator==(const ModularInequality&, const ModularInequality&) = default;

  std::string str() const;

 private:
  LinearForm f_;
  LinearForm g_;
  std::int64_t b_;
};

/// Scales rational data by the lcm of all denominators.
ModularInequality normalize(std::span<const Rational> f, std::span<const Rational> g,
                            const Rational& b);

/// Membership in S. Points with a negative coordinate are never members.
bool member(const ModularInequality& ineq, const Point& x);

}  // namespace propmod
