#include "propmod/dioph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace propmod {

namespace {

constexpr std::size_t kMaxSystemDim = 4;
// Frontier guard; far above anything the desk-scale systems produce.
constexpr std::size_t kMaxFrontier = 20'000'000;

using Vec = std::vector<std::int64_t>;

bool dominates(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

Int pottier_bound(const std::vector<Vec>& rows) {
  Int widest = 0;
  for (const auto& r : rows) {
    Int s = 0;
    for (auto v : r) s = checked_add(s, v < 0 ? -Int(v) : Int(v));
    widest = std::max(widest, s);
  }
  Int bound = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) bound = checked_mul(bound, widest + 1);
  return bound;
}

}  // namespace

std::vector<Vec> completion_solve(const std::vector<Vec>& rows, const Vec& caps) {
  const std::size_t m = rows.size();
  const std::size_t n = caps.size();
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("ragged system");

  // Column images A e_j.
  std::vector<Vec> col(n, Vec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) col[j][i] = rows[i][j];

  auto dot = [&](const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < m; ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
  };

  std::vector<Vec> solutions;
  // Frontier entries: (y, A y). Ordered set keeps levels deterministic.
  std::map<Vec, Vec> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    if (caps[j] == 0) continue;
    Vec y(n, 0);
    y[j] = 1;
    frontier.emplace(std::move(y), col[j]);
  }

  while (!frontier.empty()) {
    std::map<Vec, Vec> next;
    std::vector<const std::pair<const Vec, Vec>*> open;
    for (const auto& entry : frontier) {
      bool zero = std::all_of(entry.second.begin(), entry.second.end(), [](auto v) { return v == 0; });
      if (zero)
        solutions.push_back(entry.first);
      else
        open.push_back(&entry);
    }
    for (const auto* entry : open) {
      const Vec& y = entry->first;
      const Vec& ay = entry->second;
      for (std::size_t j = 0; j < n; ++j) {
        if (caps[j] >= 0 && y[j] >= caps[j]) continue;
        // Contejean-Devie criterion: only step towards the origin of Z^m.
        if (dot(ay, col[j]) >= 0) continue;
        Vec z = y;
        ++z[j];
        bool redundant = std::any_of(solutions.begin(), solutions.end(),
                                     [&](const Vec& s) { return dominates(z, s); });
        if (redundant || next.count(z)) continue;
        Vec az(m);
        for (std::size_t i = 0; i < m; ++i) az[i] = narrow(checked_add(ay[i], col[j][i]));
        next.emplace(std::move(z), std::move(az));
      }
    }
    if (next.size() > kMaxFrontier) throw ComputationError("Diophantine completion frontier exceeded its cap");
    frontier = std::move(next);
  }
  return solutions;
}

bool DiophSystem::homogeneous() const {
  return std::all_of(equalities.begin(), equalities.end(), [](const auto& e) { return e.target == 0; }) &&
         std::all_of(congruences.begin(), congruences.end(), [](const auto& c) { return c.residue == 0; }) &&
         std::all_of(lower_bounds.begin(), lower_bounds.end(), [](const auto& l) { return l.bound == 0; });
}

void DiophSystem::validate() const {
  if (dim == 0 || dim > kMaxSystemDim) throw std::invalid_argument("system dimension must be in [1, 4]");
  if (equalities.empty() && congruences.empty() && lower_bounds.empty())
    throw std::invalid_argument("system has no constraints");
  for (const auto& e : equalities)
    if (e.form.dim() != dim) throw std::invalid_argument("equality has the wrong length");
  for (const auto& c : congruences) {
    if (c.form.dim() != dim) throw std::invalid_argument("congruence has the wrong length");
    if (c.modulus < 1) throw std::invalid_argument("congruence modulus must be positive");
    if (c.residue < 0 || c.residue >= c.modulus) throw std::invalid_argument("residue must lie in [0, modulus)");
  }
  for (const auto& l : lower_bounds)
    if (l.form.dim() != dim) throw std::invalid_argument("lower bound has the wrong length");
}

bool DiophSystem::satisfied_by(const Point& x) const {
  if (x.dim() != dim || !x.nonnegative()) return false;
  for (const auto& e : equalities)
    if (e.form(x) != e.target) return false;
  for (const auto& c : congruences)
    if (mod_reduce(c.form(x), c.modulus) != c.residue) return false;
  for (const auto& l : lower_bounds)
    if (l.form(x) < l.bound) return false;
  return true;
}

namespace {

struct Lifted {
  std::vector<Vec> rows;
  Vec caps;
  std::size_t x0 = 0;  // index of the homogenizing variable (== n when absent)
};

Lifted lift(const DiophSystem& sys) {
  const std::size_t p = sys.dim;
  const std::size_t nc = sys.congruences.size();
  const std::size_t nl = sys.lower_bounds.size();
  const bool hom = sys.homogeneous();
  const std::size_t n = p + 2 * nc + nl + (hom ? 0 : 1);
  Lifted out;
  out.caps.assign(n, -1);
  out.x0 = hom ? n : n - 1;
  if (!hom) out.caps[out.x0] = 1;

  auto row_for = [&](const LinearForm& form, Int rhs) {
    Vec r(n, 0);
    for (std::size_t i = 0; i < p; ++i) r[i] = form[i];
    if (!hom) r[out.x0] = narrow(checked_neg(rhs));
    return r;
  };
  for (const auto& e : sys.equalities) out.rows.push_back(row_for(e.form, e.target));
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& cg = sys.congruences[c];
    Vec r = row_for(cg.form, cg.residue);
    r[p + 2 * c] = narrow(checked_neg(cg.modulus));
    r[p + 2 * c + 1] = narrow(cg.modulus);
    out.rows.push_back(std::move(r));
  }
  for (std::size_t l = 0; l < nl; ++l) {
    Vec r = row_for(sys.lower_bounds[l].form, sys.lower_bounds[l].bound);
    r[p + 2 * nc + l] = -1;
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace

MinimalSolutionSet minimal_solutions(const DiophSystem& sys) {
  sys.validate();
  const bool hom = sys.homogeneous();
  Lifted lifted = lift(sys);
  auto raw = completion_solve(lifted.rows, lifted.caps);

  MinimalSolutionSet out;
  out.homogeneous = hom;
  out.certified_bound = pottier_bound(lifted.rows);
  std::vector<Point> pts;
  for (const auto& y : raw) {
    Int norm = 0;
    for (auto v : y) norm = checked_add(norm, v);
    if (norm > out.certified_bound) throw ComputationError("minimal solution exceeds the certified bound");
    if (!hom && y[lifted.x0] != 1) continue;
    Point x(sys.dim);
    for (std::size_t i = 0; i < sys.dim; ++i) x[i] = y[i];
    if (x.is_zero()) continue;
    pts.push_back(x);
  }
  out.points = minimal_antichain(std::move(pts));
  return out;
}

MinimalSolutionSet cone_hilbert_basis(const LinearForm& g, std::size_t p) {
  if (p == 0 || p > kMaxSystemDim) throw std::invalid_argument("cone dimension must be in [1, 4]");
  if (g.dim() != p) throw std::invalid_argument("form has the wrong length");
  if (g.is_zero()) throw std::invalid_argument("cone form must be nonzero");
  // g(x) - s = 0 over (x, s). The slack is a function of x, so projection
  // is a monoid isomorphism and the basis maps to the basis.
  Vec row(p + 1, 0);
  for (std::size_t i = 0; i < p; ++i) row[i] = g[i];
  row[p] = -1;
  std::vector<Vec> rows{row};
  auto raw = completion_solve(rows, Vec(p + 1, -1));
  MinimalSolutionSet out;
  out.homogeneous = true;
  out.certified_bound = pottier_bound(rows);
  for (const auto& y : raw) {
    Point x(p);
    for (std::size_t i = 0; i < p; ++i) x[i] = y[i];
    out.points.push_back(x);
  }
  sort_unique_graded(out.points);
  return out;
}

PartitionedBasis partition_by_value(const std::vector<Point>& basis, const LinearForm& g, std::int64_t b) {
  PartitionedBasis out;
  out.slab.resize(static_cast<std::size_t>(std::max<std::int64_t>(b, 1)));
  for (const auto& x : basis) {
    Int v = g(x);
    if (v < 0) throw std::invalid_argument("basis element outside the cone g >= 0");
    if (v == 0)
      out.zero.push_back(x);
    else if (v < b)
      out.slab[static_cast<std::size_t>(v)].push_back(x);
    else
      out.high.push_back(x);
  }
  return out;
}

}  // namespace propmod
