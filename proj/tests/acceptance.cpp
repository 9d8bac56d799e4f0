// Acceptance suite: one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "propmod/cli.hpp"
#include "propmod/dioph.hpp"
#include "propmod/frob.hpp"
#include "propmod/gen2.hpp"
#include "propmod/genp.hpp"
#include "propmod/json_io.hpp"
#include "propmod/lines.hpp"
#include "propmod/oracle.hpp"
#include "propmod/ring.hpp"

using namespace propmod;
using propmod::testing::planar_corpus;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string note;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using PointSet = std::set<std::vector<std::int64_t>>;

PointSet as_set(const std::vector<Point>& pts) {
  PointSet s;
  for (const auto& p : pts) s.insert({p.coords().begin(), p.coords().end()});
  return s;
}

PointSet pairs(std::initializer_list<std::pair<std::int64_t, std::int64_t>> xs) {
  PointSet s;
  for (auto [a, c] : xs) s.insert({a, c});
  return s;
}

json cli_json(const std::vector<std::string>& args, Outcome& o) {
  auto r = cli::execute(args);
  if (r.status != 0) {
    o.fail("cli exit " + std::to_string(r.status) + ": " + r.err);
    return json::object();
  }
  return json::parse(r.out);
}

bool all_integers(const json& pts) {
  for (const auto& p : pts)
    for (const auto& c : p)
      if (!c.is_number_integer()) return false;
  return true;
}

bool antichain(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j && pts[i].precedes(pts[j])) return false;
  return true;
}

Outcome worked_example() {
  Outcome o;
  auto j = cli_json({"gens", "--f", "3,-2", "--g", "1,-3", "--b", "11", "--format", "json"}, o);
  if (!o.ok) return o;
  auto got = as_set(points_from_json(j["generators"]));
  auto want = pairs({{4, 0}, {5, 0}, {5, 1}, {8, 1}, {9, 2}, {11, 0}, {13, 3}, {14, 4}, {18, 5}, {19, 6}, {23, 7},
                     {28, 9}, {33, 11}});
  if (got != want) o.fail("generator set differs");
  if (j["trivial"] != false) o.fail("reported trivial");
  return o;
}

Outcome second_example() {
  Outcome o;
  std::vector<std::string> in = {"--f", "7,-1", "--g", "1,-14", "--b", "5", "--format", "json"};
  std::vector<std::string> gens_args = {"gens"}, prop_args = {"properties"};
  gens_args.insert(gens_args.end(), in.begin(), in.end());
  prop_args.insert(prop_args.end(), in.begin(), in.end());
  auto j = cli_json(gens_args, o);
  if (!o.ok) return o;
  auto want = pairs({{3, 0}, {4, 0}, {5, 0}, {16, 1}, {17, 1}, {18, 1}, {29, 2}, {31, 2}, {44, 3}, {57, 4}, {70, 5}});
  if (as_set(points_from_json(j["generators"])) != want) o.fail("generator set differs");
  if (!all_integers(j["generators"])) o.fail("non-integer output");
  auto p = cli_json(prop_args, o);
  if (!o.ok) return o;
  if (p["cohen_macaulay"] != true) o.fail("cohen_macaulay not true");
  if (p["gorenstein"] != true) o.fail("gorenstein not true");
  if (p["buchsbaum"] != true) o.fail("buchsbaum not true");
  return o;
}

Outcome frobenius_example() {
  Outcome o;
  ModularInequality ineq({3, 2}, {1, -1}, 10);
  auto geom = strip_geometry(ineq);
  if (!(geom.u == Point{2, 2})) o.fail("u = " + geom.u.str());
  if (!(geom.w[0] == Rational(10) && geom.w[1] == Rational(0))) o.fail("w differs");
  auto rep = frobenius_vectors(ineq);
  if (as_set(rep.minimal) != pairs({{9, 1}})) o.fail("minimal Frobenius vectors differ");
  auto cli = cli_json({"frobenius", "--f", "3,2", "--g", "1,-1", "--b", "10", "--format", "json"}, o);
  if (o.ok && as_set(points_from_json(cli["minimal"])) != pairs({{9, 1}})) o.fail("cli minimal differs");
  auto margin = oracle::required_frobenius_margin(ineq);
  auto brute = oracle::brute_min_frobenius(ineq, oracle::Window::cube(2, 40 + margin), margin);
  auto passing = as_set(brute.passing);
  for (std::int64_t lambda = 1; lambda <= 2; ++lambda) {
    Point q = Point{9, 1} + geom.u.scaled(lambda);
    if (!is_frobenius_vector(ineq, q, rep.group)) o.fail(q.str() + " fails the definition check");
    if (!passing.count({q[0], q[1]})) o.fail(q.str() + " not confirmed by the brute-force check");
  }
  if (as_set(brute.minimal) != pairs({{9, 1}})) o.fail("brute-force minimal differs");
  return o;
}

Outcome intermediate_objects() {
  Outcome o;
  ModularInequality ineq({3, -2}, {1, -3}, 11);
  auto geom = strip_geometry(ineq);
  if (!(geom.u == Point{33, 11})) o.fail("u = " + geom.u.str());
  if (!(geom.u_tilde == Point{4, 0})) o.fail("u~ = " + geom.u_tilde.str());
  if (!(geom.w[0] == Rational(11) && geom.w[1] == Rational(0))) o.fail("w differs");
  auto ray = restrict_to_ray(ineq, Point{1, 0});
  auto axis = numerical_min_gens(ray.a_prime, ray.b, ray.c_prime);
  if (axis != std::vector<std::int64_t>{4, 5, 11}) o.fail("axis generators differ");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto window = oracle::Window::cube(2, 60);
  for (const auto& e : planar_corpus()) {
    auto ineq = e.ineq();
    auto n2 = min_gens_n2(ineq);
    auto np = min_gens_np(ineq);
    auto members = oracle::brute_members(ineq, window);
    if (oracle::closure_in_window(n2.points, window) != members) o.fail("closure mismatch for " + ineq.str());
    if (as_set(n2.points) != as_set(np.points) || n2.trivial != np.trivial)
      o.fail("n2 and np disagree for " + ineq.str());
    for (std::size_t i = 0; i < n2.points.size(); ++i) {
      const Point& h = n2.points[i];
      std::vector<Point> rest = n2.points;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      oracle::Window box{{std::max<std::int64_t>(60, h[0]), std::max<std::int64_t>(60, h[1])}};
      auto reduced = oracle::closure_in_window(rest, box);
      if (std::binary_search(reduced.begin(), reduced.end(), h, GradedLess{}) ||
          std::find(reduced.begin(), reduced.end(), h) != reduced.end())
        o.fail("generator " + h.str() + " is redundant for " + ineq.str());
    }
  }
  return o;
}

Outcome spatial_example() {
  Outcome o;
  ModularInequality ineq({5, 2, 1}, {3, 1, -4}, 4);
  auto gens = min_gens_np(ineq);
  auto window = oracle::Window::cube(3, 12);
  if (oracle::closure_in_window(gens.points, window) != oracle::brute_members(ineq, window))
    o.fail("closure mismatch on [0,12]^3");
  return o;
}

Outcome invariants() {
  Outcome o;
  int strip = 0, frobenius_compared = 0;
  for (const auto& e : planar_corpus()) {
    auto ineq = e.ineq();
    auto kind = classify_planar(ineq);
    const std::string tag = ineq.str();

    // translation by u
    if (kind == PlanarCase::Strip || kind == PlanarCase::Ray) {
      Point u = compute_u(ineq);
      for (std::int64_t x = 0; x <= 60; ++x)
        for (std::int64_t y = 0; y <= 60; ++y) {
          Point v{x, y};
          if (oracle::definition_member(ineq, v) != member(ineq, v + u)) o.fail("translation fails at " + v.str() + " for " + tag);
        }
    }

    // half-space g >= b
    for (std::int64_t x = 0; x <= 60; ++x)
      for (std::int64_t y = 0; y <= 60; ++y) {
        Point v{x, y};
        if (ineq.g()(v) >= ineq.b() && !(member(ineq, v) && oracle::definition_member(ineq, v)))
          o.fail("half-space point " + v.str() + " not a member for " + tag);
      }

    // Dickson minimality and completeness of the Diophantine antichains
    if (kind == PlanarCase::Strip) {
      auto t = construction_trace(ineq);
      std::vector<const MinimalSolutionSet*> sets = {&t.U, &t.V};
      for (const auto& [key, m] : t.Mdk) sets.push_back(&m);
      for (const auto* s : sets)
        if (!antichain(s->points)) o.fail("dioph output not an antichain for " + tag);
      auto zero = [&](const Point& x) { return ineq.g()(x) == 0; };
      auto zero_mod = [&](const Point& x) { return zero(x) && ineq.f()(x) % ineq.b() == 0; };
      auto w = oracle::Window::cube(2, 200);
      auto vb = oracle::brute_minimal([&](const Point& x) { return !x.is_zero() && zero(x); }, w);
      auto ub = oracle::brute_minimal([&](const Point& x) { return !x.is_zero() && zero_mod(x); }, w);
      auto within = [&](const std::vector<Point>& pts) {
        std::vector<Point> r;
        for (const auto& p : pts)
          if (w.contains(p)) r.push_back(p);
        return as_set(r);
      };
      if (within(t.V.points) != as_set(vb)) o.fail("V differs from brute force for " + tag);
      if (within(t.U.points) != as_set(ub)) o.fail("U differs from brute force for " + tag);
    }

    // ring properties
    if (kind == PlanarCase::Trivial || kind == PlanarCase::Ray) {
      bool rejected = false;
      try {
        properties(ineq);
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      if (!rejected) o.fail("ring properties accepted a non-simplicial input " + tag);
    } else {
      auto props = properties(ineq);
      if (props.gorenstein && !props.cohen_macaulay) o.fail("gorenstein without cohen-macaulay for " + tag);
    }

    if (kind == PlanarCase::Strip) {
      ++strip;
      auto rep = frobenius_vectors(ineq);
      const bool whole_quadrant = as_set(min_gens_n2(ineq).points) == pairs({{1, 0}, {0, 1}});
      if (rep.minimal.size() != (whole_quadrant ? 0u : 1u)) o.fail("minimal Frobenius vector not unique for " + tag);
      if (rep.group.index() == 1) {
        auto margin = oracle::required_frobenius_margin(ineq);
        Int need = 0;
        for (const auto& q : rep.minimal) need = std::max<Int>(need, std::max(q[0], q[1]));
        auto side = static_cast<std::int64_t>(std::max<Int>(need + 2, 30)) + margin;
        if (oracle::Window::cube(2, side).volume() <= oracle::kMaxWindowPoints) {
          auto brute = oracle::brute_min_frobenius(ineq, oracle::Window::cube(2, side), margin);
          if (as_set(brute.minimal) != as_set(rep.minimal)) o.fail("Frobenius oracle disagrees for " + tag);
          ++frobenius_compared;
        }
      }

      // closure semigroup equals S
      auto gens = min_gens_n2(ineq);
      for (std::int64_t x = 0; x <= 60; ++x)
        for (std::int64_t y = 0; y <= 60; ++y) {
          Point s{x, y};
          bool in_closure = std::all_of(gens.points.begin(), gens.points.end(),
                                        [&](const Point& si) { return oracle::definition_member(ineq, s + si); });
          if (in_closure != oracle::definition_member(ineq, s)) o.fail("closure differs at " + s.str() + " for " + tag);
        }
      if (!is_buchsbaum(ineq).closure_equals_S) o.fail("closure check failed for " + tag);
    }
  }
  o.note = std::to_string(strip) + " strip cases, " + std::to_string(frobenius_compared) +
           " Frobenius results confirmed by brute force";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 worked example generators", 1.0, worked_example},
      {"2 second strip example generators and ring properties", 1.0, second_example},
      {"3 Frobenius vector example", 1.0, frobenius_example},
      {"4 intermediate objects u, u~, w, axis generators", 1.0, intermediate_objects},
      {"5 oracle equivalence over the planar corpus", 60.0, oracle_equivalence},
      {"6 N^3 closure check on [0,12]^3", 120.0, spatial_example},
      {"7 invariant suites over the planar corpus", 600.0, invariants},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.fail("took " + std::to_string(secs) + " s");
    const std::string& extra = o.ok ? o.note : o.detail;
    std::printf("%s criterion %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs, extra.empty() ? "" : ": ",
                extra.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
