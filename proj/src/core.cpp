#include "propmod/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace propmod {

Point::Point(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("point dimension out of range");
  dim_ = static_cast<std::uint8_t>(dim);
}

Point::Point(std::initializer_list<std::int64_t> coords)
    : Point(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Point::Point(std::span<const std::int64_t> coords) : Point(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Point::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](auto v) { return v == 0; });
}

bool Point::nonnegative() const {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](auto v) { return v >= 0; });
}

std::int64_t Point::norm1() const {
  Int s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s = checked_add(s, c_[i] < 0 ? -Int(c_[i]) : Int(c_[i]));
  return narrow(s);
}

bool Point::precedes(const Point& other) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

Point Point::operator+(const Point& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  Point r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = narrow(checked_add(c_[i], o.c_[i]));
  return r;
}

Point Point::operator-(const Point& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  Point r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = narrow(checked_sub(c_[i], o.c_[i]));
  return r;
}

Point Point::scaled(std::int64_t k) const {
  Point r(*this);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = narrow(checked_mul(c_[i], k));
  return r;
}

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

bool GradedLess::operator()(const Point& a, const Point& b) const {
  auto na = a.norm1(), nb = b.norm1();
  if (na != nb) return na < nb;
  auto ca = a.coords(), cb = b.coords();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::size_t PointHash::operator()(const Point& p) const {
  std::size_t h = p.dim();
  for (auto v : p.coords()) h = h * 1000003u ^ std::hash<std::int64_t>{}(v);
  return h;
}

void sort_graded(std::vector<Point>& points) { std::sort(points.begin(), points.end(), GradedLess{}); }

void sort_unique_graded(std::vector<Point>& points) {
  sort_graded(points);
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::vector<Point> minimal_antichain(std::vector<Point> points) {
  sort_unique_graded(points);
  // Anything below p has a strictly smaller norm, so scanning in graded
  // order only needs to compare against survivors.
  std::vector<Point> out;
  for (const auto& p : points) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Point& m) { return m.precedes(p); });
    if (!dominated) out.push_back(p);
  }
  return out;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto v) { return v == 0; });
}

Int LinearForm::operator()(const Point& x) const {
  if (x.dim() != coeffs_.size()) throw std::invalid_argument("dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s = checked_add(s, checked_mul(coeffs_[i], x[i]));
  return s;
}

ModularInequality::ModularInequality(LinearForm f, LinearForm g, std::int64_t b)
    : f_(std::move(f)), g_(std::move(g)), b_(b) {
  if (f_.dim() == 0 || f_.dim() > kMaxDim) throw std::invalid_argument("dimension must be in [1, 4]");
  if (f_.dim() != g_.dim()) throw std::invalid_argument("f and g have different lengths");
  if (f_.is_zero()) throw std::invalid_argument("f is the zero form");
  if (g_.is_zero()) throw std::invalid_argument("g is the zero form");
  if (b_ < 1) throw std::invalid_argument("modulus b must be positive");
}

bool ModularInequality::contains(const Point& x) const { return member(*this, x); }

std::string ModularInequality::str() const {
  std::ostringstream os;
  auto form = [&](const LinearForm& l) {
    os << '(';
    for (std::size_t i = 0; i < l.dim(); ++i) os << (i ? "," : "") << l[i];
    os << ')';
  };
  os << "f=";
  form(f_);
  os << " g=";
  form(g_);
  os << " b=" << b_;
  return os.str();
}

ModularInequality normalize(std::span<const Rational> f, std::span<const Rational> g, const Rational& b) {
  if (f.size() != g.size()) throw std::invalid_argument("f and g have different lengths");
  if (b <= Rational(0)) throw std::invalid_argument("modulus b must be positive");
  Int d = b.den();
  for (const auto& r : f) d = lcm(d, r.den());
  for (const auto& r : g) d = lcm(d, r.den());
  auto scale = [&](std::span<const Rational> v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(narrow((r * Rational(d)).num()));
    return LinearForm(std::move(out));
  };
  return ModularInequality(scale(f), scale(g), narrow((b * Rational(d)).num()));
}

bool member(const ModularInequality& ineq, const Point& x) {
  if (x.dim() != ineq.dim()) throw std::invalid_argument("dimension mismatch");
  if (!x.nonnegative()) return false;
  Int gx = ineq.g()(x);
  if (gx >= ineq.b()) return true;
  if (gx < 0) return false;
  return mod_reduce(ineq.f()(x), ineq.b()) <= gx;
}

}  // namespace propmod
