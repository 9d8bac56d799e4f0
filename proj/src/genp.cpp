#include "propmod/genp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "propmod/lines.hpp"

namespace propmod {

namespace {

constexpr std::size_t kMaxGeneralDim = 3;

void check_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap)
    throw ComputationError(std::string("set ") + what + " has " + std::to_string(size) +
                           " elements, above the cap of " + std::to_string(cap));
}

bool all_negative(const LinearForm& g) {
  return std::all_of(g.coeffs().begin(), g.coeffs().end(), [](auto v) { return v < 0; });
}

bool all_positive(const LinearForm& g) {
  return std::all_of(g.coeffs().begin(), g.coeffs().end(), [](auto v) { return v > 0; });
}

/// Smallest nonzero member of S on axis i (requires g_i > 0).
std::int64_t axis_member(const ModularInequality& ineq, std::size_t i) {
  Int gi = ineq.g()[i], fi = ineq.f()[i], b = ineq.b();
  Int limit = ceil_div(b, gi);
  for (Int x = 1; x <= limit; ++x)
    if (mod_reduce(checked_mul(fi, x), b) <= checked_mul(gi, x)) return narrow(x);
  return narrow(limit);
}

/// Lattice points z with some w in `base`, w < z <= w + span (product
/// order, w != z), by prefix counts over the bounding box.
std::vector<Point> box_union(const std::vector<Point>& base, const Point& span, std::size_t cap) {
  if (base.empty()) return {};
  const std::size_t p = span.dim();
  std::array<std::int64_t, kMaxDim> ext{};
  for (const auto& w : base)
    for (std::size_t i = 0; i < p; ++i) ext[i] = std::max(ext[i], narrow(checked_add(w[i], span[i])) + 1);
  Int volume = 1;
  for (std::size_t i = 0; i < p; ++i) volume = checked_mul(volume, ext[i]);
  check_cap(static_cast<std::size_t>(std::min<Int>(volume / 16, Int(cap) + 1)), cap, "box grid (volume / 16)");
  const auto vol = static_cast<std::size_t>(volume);

  std::array<std::size_t, kMaxDim> stride{};
  stride[0] = 1;
  for (std::size_t i = 1; i < p; ++i) stride[i] = stride[i - 1] * static_cast<std::size_t>(ext[i - 1]);
  auto index = [&](const std::array<std::int64_t, kMaxDim>& c) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < p; ++i) k += static_cast<std::size_t>(c[i]) * stride[i];
    return k;
  };

  std::vector<std::int32_t> count(vol, 0);
  std::vector<char> is_base(vol, 0);
  for (const auto& w : base) {
    std::array<std::int64_t, kMaxDim> c{};
    for (std::size_t i = 0; i < p; ++i) c[i] = w[i];
    auto k = index(c);
    if (!is_base[k]) {
      is_base[k] = 1;
      count[k] = 1;
    }
  }
  // In-place p-dimensional prefix sums.
  for (std::size_t d = 0; d < p; ++d) {
    for (std::size_t k = 0; k < vol; ++k) {
      auto coord = static_cast<std::int64_t>((k / stride[d]) % static_cast<std::size_t>(ext[d]));
      if (coord > 0) count[k] += count[k - stride[d]];
    }
  }
  auto prefix = [&](std::array<std::int64_t, kMaxDim> hi) -> std::int64_t {
    for (std::size_t i = 0; i < p; ++i)
      if (hi[i] < 0) return 0;
    return count[index(hi)];
  };
  // Sum over the box [lo, hi] by inclusion-exclusion.
  auto box_sum = [&](const std::array<std::int64_t, kMaxDim>& lo, const std::array<std::int64_t, kMaxDim>& hi) {
    std::int64_t total = 0;
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      std::array<std::int64_t, kMaxDim> corner{};
      int sign = 1;
      for (std::size_t i = 0; i < p; ++i) {
        if (mask & (1u << i)) {
          corner[i] = lo[i] - 1;
          sign = -sign;
        } else {
          corner[i] = hi[i];
        }
      }
      total += sign * prefix(corner);
    }
    return total;
  };

  std::vector<Point> out;
  std::array<std::int64_t, kMaxDim> z{};
  for (std::size_t k = 0; k < vol; ++k) {
    for (std::size_t i = 0; i < p; ++i) z[i] = static_cast<std::int64_t>((k / stride[i]) % static_cast<std::size_t>(ext[i]));
    std::array<std::int64_t, kMaxDim> lo{};
    for (std::size_t i = 0; i < p; ++i) lo[i] = std::max<std::int64_t>(0, z[i] - span[i]);
    std::int64_t covering = box_sum(lo, z) - (is_base[k] ? 1 : 0);
    if (covering > 0) {
      Point pt(p);
      for (std::size_t i = 0; i < p; ++i) pt[i] = z[i];
      out.push_back(pt);
    }
  }
  return out;
}

std::vector<Point> as_sorted(std::set<Point, GradedLess> s) { return {s.begin(), s.end()}; }

}  // namespace

std::vector<Point> positive_case_candidates(const ModularInequality& ineq, std::size_t cap) {
  const std::size_t p = ineq.dim();
  const auto& g = ineq.g();
  if (!all_positive(g)) throw std::invalid_argument("positive case requires every g_i > 0");
  std::vector<std::int64_t> ut(p);
  Int reach = 0;  // max_i g_i u~_i
  for (std::size_t i = 0; i < p; ++i) {
    ut[i] = axis_member(ineq, i);
    reach = std::max(reach, checked_mul(g[i], ut[i]));
  }
  const Int level = checked_add(ineq.b(), reach);  // g(x) < level outside the box
  std::vector<std::int64_t> ext(p);
  Int volume = 1;
  for (std::size_t i = 0; i < p; ++i) {
    ext[i] = narrow(std::max<Int>(ceil_div(level, g[i]), ut[i]));
    volume = checked_mul(volume, ext[i] + 1);
  }
  check_cap(static_cast<std::size_t>(std::min<Int>(volume, Int(cap) + 1)), cap, "positive-case box");

  std::vector<Point> out;
  Point x(p);
  while (true) {
    if (!x.is_zero() && member(ineq, x)) {
      Int gx = g(x);
      bool keep = true;
      for (std::size_t i = 0; i < p && keep; ++i)
        keep = x[i] < ut[i] || gx < checked_add(ineq.b(), checked_mul(g[i], ut[i]));
      if (keep) out.push_back(x);
    }
    std::size_t i = 0;
    for (; i < p; ++i) {
      if (x[i] < ext[i]) {
        ++x[i];
        break;
      }
      x[i] = 0;
    }
    if (i == p) break;
  }
  sort_graded(out);
  return out;
}

ConstructionTrace construction_trace(const ModularInequality& ineq, std::size_t cap) {
  const std::size_t p = ineq.dim();
  if (p > kMaxGeneralDim) throw std::invalid_argument("the general method supports p <= 3");
  const auto& f = ineq.f();
  const auto& g = ineq.g();
  const std::int64_t b = ineq.b();
  if (all_negative(g) || all_positive(g))
    throw std::invalid_argument("the trace needs coefficients g_i, g_j with g_i g_j <= 0");

  ConstructionTrace t;
  {
    DiophSystem us{p, {{g, 0}}, {{f, 0, b}}, {}};
    t.U = minimal_solutions(us);
    DiophSystem vs{p, {{g, 0}}, {}, {}};
    t.V = minimal_solutions(vs);
  }
  auto hb = cone_hilbert_basis(g, p);
  t.C0 = partition_by_value(hb.points, g, b);

  std::set<Point, GradedLess> vset(t.V.points.begin(), t.V.points.end());
  std::set<Point, GradedLess> current(hb.points.begin(), hb.points.end());
  for (std::int64_t k = 1; k < b; ++k) {
    std::vector<Point> level;
    for (const auto& c : current)
      if (g(c) == k) level.push_back(c);
    std::set<Point, GradedLess> next;
    for (const auto& c : current)
      if (g(c) != k) next.insert(c);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Point& wk = level[i];
      next.insert(wk.scaled(2));
      next.insert(wk.scaled(3));
      for (const auto& s : current) {
        if (vset.count(s)) continue;
        next.insert(wk + s);
      }
      // mixed triples w_i + w_j + w_l of the level being removed
      for (std::size_t j = i; j < level.size(); ++j)
        for (std::size_t l = j; l < level.size(); ++l) next.insert(wk + level[j] + level[l]);
      check_cap(next.size(), cap, "C_k");
    }
    current = std::move(next);
    t.Ck.push_back(as_sorted(current));
  }

  std::set<Point, GradedLess> cset;
  for (const auto& c : current)
    if (!vset.count(c)) cset.insert(c);
  cset.insert(t.U.points.begin(), t.U.points.end());
  t.C = as_sorted(cset);

  // Boxes w < z <= w + sum_i b v_i over the elements with g(w) >= b; only
  // members of S are kept.
  Point span(p);
  for (const auto& v : t.V.points) span = span + v.scaled(b);
  std::vector<Point> high;
  for (const auto& c : t.C)
    if (g(c) >= b) high.push_back(c);
  std::unordered_set<Point, PointHash> ct(t.C.begin(), t.C.end());
  for (const auto& z : box_union(high, span, cap)) {
    if (member(ineq, z)) ct.insert(z);
    check_cap(ct.size(), cap, "C~");
  }
  t.Ctilde.assign(ct.begin(), ct.end());
  sort_graded(t.Ctilde);

  std::vector<Point> raw = t.Ctilde;
  for (std::int64_t d = 1; d < b; ++d) {
    for (std::int64_t k = 0; k <= d; ++k) {
      DiophSystem sys{p, {{g, d}}, {{f, k, b}}, {}};
      auto sols = minimal_solutions(sys);
      raw.insert(raw.end(), sols.points.begin(), sols.points.end());
      t.Mdk.emplace(std::make_pair(d, k), std::move(sols));
    }
  }
  t.generators = minimalize(std::move(raw), ineq);
  return t;
}

GeneratorSet min_gens_np(const ModularInequality& ineq, std::size_t cap) {
  const std::size_t p = ineq.dim();
  if (p > kMaxGeneralDim) throw std::invalid_argument("the general method supports p <= 3");
  if (all_negative(ineq.g())) {
    GeneratorSet t;
    t.minimal = true;
    t.trivial = true;
    return t;
  }
  if (all_positive(ineq.g())) return minimalize(positive_case_candidates(ineq, cap), ineq);
  return construction_trace(ineq, cap).generators;
}

}  // namespace propmod
