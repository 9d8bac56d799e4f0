#include <gtest/gtest.h>

#include "corpus.hpp"
#include "propmod/gen2.hpp"
#include "propmod/genp.hpp"
#include "propmod/oracle.hpp"
#include "test_util.hpp"

using namespace propmod;
using namespace propmod::testing;

namespace {

const ModularInequality kSpatial({5, 2, 1}, {3, 1, -4}, 4);

std::vector<Point> cone_points_outside_slabs(const LinearForm& g, std::int64_t k, const oracle::Window& w) {
  std::vector<Point> out;
  Point x(w.dim());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.dim()) {
      Int v = g(x);
      if (v == 0 || v > k) out.push_back(x);
      return;
    }
    for (std::int64_t c = 0; c <= w.bounds[i]; ++c) {
      x[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  sort_graded(out);
  return out;
}

// Mixed-sign inequalities in N^3 with small coefficients.
std::vector<ModularInequality> spatial_corpus() {
  std::vector<ModularInequality> out = {kSpatial};
  std::mt19937_64 rng(17);
  while (out.size() < 12) {
    LinearForm f = random_form(rng, 3, -6, 6);
    LinearForm g = random_form(rng, 3, -4, 4);
    bool pos = false, neg = false;
    for (auto c : g.coeffs()) {
      pos = pos || c > 0;
      neg = neg || c < 0;
    }
    if (!pos || !neg) continue;
    out.emplace_back(f, g, draw(rng, 2, 5));
  }
  return out;
}

}  // namespace

TEST(Genp, AgreesWithPlanarMethod) {
  for (const auto& e : planar_corpus()) {
    auto ineq = e.ineq();
    auto a = min_gens_n2(ineq), c = min_gens_np(ineq);
    EXPECT_EQ(a.points, c.points) << ineq.str();
    EXPECT_EQ(a.trivial, c.trivial) << ineq.str();
  }
}

TEST(Genp, TraceOfWorkedExample) {
  auto t = construction_trace(ModularInequality({3, -2}, {1, -3}, 11));
  EXPECT_EQ(as_set(t.U.points), set_of({{33, 11}}));
  EXPECT_EQ(as_set(t.V.points), set_of({{3, 1}}));
  ASSERT_GE(t.C0.slab.size(), 2u);
  EXPECT_EQ(as_set(t.C0.slab[1]), set_of({{1, 0}}));
  EXPECT_EQ(t.Ck.size(), 10u);
  EXPECT_EQ(t.Mdk.size(), 65u);
}

TEST(Genp, SpatialExampleWindowClosure) {
  auto gens = min_gens_np(kSpatial);
  auto w = oracle::Window::cube(3, 12);
  EXPECT_EQ(oracle::closure_in_window(gens.points, w), oracle::brute_members(kSpatial, w));
}

TEST(Genp, SpatialWindowClosure) {
  auto w = oracle::Window::cube(3, 14);
  for (const auto& ineq : spatial_corpus()) {
    auto gens = min_gens_np(ineq);
    EXPECT_EQ(oracle::closure_in_window(gens.points, w), oracle::brute_members(ineq, w)) << ineq.str();
    for (const auto& h : gens.points) EXPECT_TRUE(member(ineq, h));
    auto in_window = gens.points;
    std::erase_if(in_window, [&](const Point& p) { return !w.contains(p); });
    EXPECT_EQ(as_set(in_window), as_set(oracle::brute_min_gens(ineq, w))) << ineq.str();
  }
}

TEST(Genp, PositiveSpatialCase) {
  ModularInequality ineq({4, -3, 2}, {2, 1, 3}, 7);
  auto gens = min_gens_np(ineq);
  auto w = oracle::Window::cube(3, 16);
  EXPECT_EQ(oracle::closure_in_window(gens.points, w), oracle::brute_members(ineq, w));
  EXPECT_EQ(as_set(gens.points), as_set(oracle::brute_min_gens(ineq, w)));
}

TEST(Genp, SlabProperty) {
  for (const auto& ineq : spatial_corpus()) {
    auto t = construction_trace(ineq);
    auto w = oracle::Window::cube(3, 8);
    for (std::size_t k = 1; k <= t.Ck.size(); ++k)
      EXPECT_EQ(oracle::closure_in_window(t.Ck[k - 1], w),
                cone_points_outside_slabs(ineq.g(), static_cast<std::int64_t>(k), w))
          << ineq.str() << " k=" << k;
  }
  for (const auto& e : planar_corpus()) {
    auto ineq = e.ineq();
    if (classify_planar(ineq) != PlanarCase::Strip) continue;
    auto t = construction_trace(ineq);
    auto w = oracle::Window::cube(2, 40);
    for (std::size_t k = 1; k <= t.Ck.size(); ++k)
      EXPECT_EQ(oracle::closure_in_window(t.Ck[k - 1], w),
                cone_points_outside_slabs(ineq.g(), static_cast<std::int64_t>(k), w))
          << ineq.str() << " k=" << k;
  }
}

TEST(Genp, RawSetsAreMembersAndUGeneratesMultiplesOfV) {
  for (const auto& ineq : spatial_corpus()) {
    auto t = construction_trace(ineq);
    for (const auto& z : t.Ctilde) EXPECT_TRUE(member(ineq, z)) << ineq.str() << " " << z.str();
    for (const auto& [key, sols] : t.Mdk)
      for (const auto& z : sols.points) EXPECT_TRUE(member(ineq, z)) << ineq.str() << " " << z.str();
    for (const auto& u : t.U.points) {
      EXPECT_EQ(ineq.g()(u), 0);
      EXPECT_EQ(mod_reduce(ineq.f()(u), ineq.b()), 0);
    }
    for (const auto& v : t.V.points) {
      Point bv = v.scaled(ineq.b());
      oracle::Window box{std::vector<std::int64_t>(bv.coords().begin(), bv.coords().end())};
      auto closure = oracle::closure_in_window(t.U.points, box);
      EXPECT_TRUE(std::find(closure.begin(), closure.end(), bv) != closure.end()) << ineq.str();
    }
  }
}

TEST(Genp, CapAndDimensionErrors) {
  EXPECT_THROW(min_gens_np(kSpatial, 10), ComputationError);
  EXPECT_THROW(min_gens_np(ModularInequality({1, 1, 1, 1}, {1, -1, 1, 1}, 3)), std::invalid_argument);
  EXPECT_THROW(construction_trace(ModularInequality({1, 1}, {1, 1}, 3)), std::invalid_argument);
  EXPECT_TRUE(min_gens_np(ModularInequality({1, 1, 1}, {-1, -2, -1}, 3)).trivial);
}
