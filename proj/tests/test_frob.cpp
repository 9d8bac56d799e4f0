#include <gtest/gtest.h>

#include "corpus.hpp"
#include "propmod/frob.hpp"
#include "propmod/gen2.hpp"
#include "propmod/oracle.hpp"
#include "test_util.hpp"

using namespace propmod;
using namespace propmod::testing;

TEST(Frob, GroupBasisExamples) {
  auto worked = group_basis(min_gens_n2(ModularInequality({3, -2}, {1, -3}, 11)));
  EXPECT_EQ(worked.index(), 1);
  std::vector<Point> unit{Point{1, 0}, Point{0, 1}};
  EXPECT_EQ(group_basis(unit).index(), 1);
  std::vector<Point> even{Point{2, 0}, Point{0, 2}, Point{1, 1}};
  auto b = group_basis(even);
  EXPECT_EQ(b.index(), 2);
  EXPECT_TRUE(b.contains(Point{3, 1}));
  EXPECT_FALSE(b.contains(Point{1, 0}));
  std::vector<Point> line{Point{1, 1}, Point{2, 2}};
  EXPECT_THROW(group_basis(line), ComputationError);
}

TEST(Frob, StripExample) {
  ModularInequality ineq({3, 2}, {1, -1}, 10);
  auto rep = frobenius_vectors(ineq);
  EXPECT_EQ(as_set(rep.minimal), set_of({{9, 1}}));
  ASSERT_TRUE(rep.closest.has_value());
  EXPECT_EQ(*rep.closest, (Point{9, 1}));
  EXPECT_EQ(rep.delta.size(), 13u);
  for (std::int64_t l = 0; l <= 4; ++l) EXPECT_TRUE(is_frobenius_vector(ineq, Point{9 + 2 * l, 1 + 2 * l}, rep.group));
}

TEST(Frob, PositiveExample) {
  ModularInequality ineq({1, 2}, {1, 1}, 3);
  auto rep = frobenius_vectors(ineq);
  EXPECT_EQ(as_set(rep.frobenius_vectors), set_of({{0, 1}}));
  EXPECT_EQ(as_set(rep.minimal), set_of({{0, 1}}));
  auto brute = oracle::brute_min_frobenius(ineq, oracle::Window::cube(2, 12 + oracle::required_frobenius_margin(ineq)),
                                           oracle::required_frobenius_margin(ineq));
  EXPECT_EQ(as_set(brute.minimal), set_of({{0, 1}}));
}

TEST(Frob, WholeQuadrantHasNone) {
  auto rep = frobenius_vectors(ModularInequality({0, -4}, {0, 11}, 11));
  EXPECT_TRUE(rep.delta.empty());
  EXPECT_TRUE(rep.minimal.empty());
}

TEST(Frob, SaturatedStripFindsVectorBelowCone) {
  ModularInequality ineq({11, 0}, {1, -3}, 11);
  auto rep = frobenius_vectors(ineq);
  EXPECT_TRUE(rep.delta.empty());
  EXPECT_EQ(as_set(rep.minimal), set_of({{2, 1}}));
  auto margin = oracle::required_frobenius_margin(ineq);
  auto brute = oracle::brute_min_frobenius(ineq, oracle::Window::cube(2, 30 + margin), margin);
  EXPECT_EQ(as_set(brute.minimal), set_of({{2, 1}}));
}

TEST(Frob, RejectsDegenerateInput) {
  EXPECT_THROW(frobenius_vectors(ModularInequality({1, 1}, {-1, -1}, 3)), std::invalid_argument);
  EXPECT_THROW(frobenius_vectors(ModularInequality({1, 1, 1}, {1, 1, 1}, 3)), std::invalid_argument);
}

TEST(Frob, CorpusAgainstDefinitionAndOracle) {
  for (const auto& e : planar_corpus()) {
    auto ineq = e.ineq();
    auto kind = classify_planar(ineq);
    if (kind != PlanarCase::Strip && kind != PlanarCase::Positive) continue;
    auto rep = frobenius_vectors(ineq);
    // every Delta element is classified by the definition check
    std::set<std::vector<std::int64_t>> passing = as_set(rep.frobenius_vectors);
    for (const auto& d : rep.delta) {
      EXPECT_FALSE(member(ineq, d));
      EXPECT_EQ(is_frobenius_vector(ineq, d, rep.group), passing.count({d[0], d[1]}) == 1);
    }
    if (kind == PlanarCase::Strip) {
      for (const auto& q : rep.minimal) EXPECT_TRUE(is_frobenius_vector(ineq, q + compute_u(ineq), rep.group));
    }
    if (rep.group.index() != 1) continue;
    auto margin = oracle::required_frobenius_margin(ineq);
    std::int64_t reach = 30;
    for (const auto& q : rep.minimal) reach = std::max({reach, q[0] + 2, q[1] + 2});
    oracle::Window w = oracle::Window::cube(2, reach + margin);
    if (w.volume() > 4'000'000) continue;
    auto brute = oracle::brute_min_frobenius(ineq, w, margin);
    EXPECT_EQ(as_set(brute.minimal), as_set(rep.minimal)) << ineq.str();
  }
}
