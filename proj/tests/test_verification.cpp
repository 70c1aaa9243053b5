// Copyright 2026 The latfree Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "latfree/flip_engine.hpp"
#include "latfree/verification.hpp"
#include "test_support.hpp"

namespace latfree {
namespace {

TEST(BruteForceTest, Examples) {
  const OptimumSet ellipse = brute_force_optimum(testing::ellipse_model(), IntegerBox::around(point(0, 0), 3));
  EXPECT_EQ(ellipse.value, 0);
  EXPECT_EQ(ellipse.points, (std::vector<LatticePoint>{point(0, -1), point(0, 0)}));

  const IntegerBox box{-1, -2, 5, 3};
  const OptimumSet circle = brute_force_optimum(testing::shifted_circle_model(), box);
  EXPECT_EQ(circle.value + Rational(BigInt(13), BigInt(2)), Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(circle.points,
            (std::vector<LatticePoint>{point(2, 0), point(2, 1), point(3, 0), point(3, 1)}));

  const QuadraticModel bowl(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{0, 0});
  const OptimumSet origin = brute_force_optimum(bowl, IntegerBox::around(point(0, 0), 2));
  EXPECT_EQ(origin.value, 0);
  EXPECT_EQ(origin.points, (std::vector<LatticePoint>{point(0, 0)}));
}

TEST(BruteForceTest, SmallBoxIsRejected) {
  try {
    brute_force_optimum(testing::shifted_circle_model(), IntegerBox::around(point(-20, -20), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBoxTooSmall);
  }
}

TEST(BruteForceTest, DerivedOptima) {
  const Json fx = testing::load_fixture("derived.json");
  ASSERT_GE(fx.at("optima").size(), 30u);
  for (const auto& e : fx.at("optima")) {
    const QuadraticModel m = testing::model_from_fixture(e.at("objective"));
    const OptimumSet opt = brute_force_optimum(m, sufficient_box(m));
    EXPECT_EQ(opt.value, rational_from_json(e.at("value")));
    std::vector<LatticePoint> want;
    for (const auto& p : e.at("points")) want.push_back(point_from_json(p));
    EXPECT_EQ(opt.points, want);
    const Certificate c = solve(m, set_from_json(e.at("initial")));
    EXPECT_EQ(c.argmin_value.exact(), opt.value);
    EXPECT_TRUE(opt.contains(c.argmin));
  }
}

TEST(BruteForceTest, GenericOracleScan) {
  const OptimumSet opt =
      brute_force_optimum(static_cast<const GradientOracle&>(testing::ellipse_model()),
                          IntegerBox::around(point(0, 0), 3));
  EXPECT_EQ(opt.value, 0);
  EXPECT_EQ(opt.points.size(), 2u);
}

TEST(LatticeFreeTest, TerminalSquarePasses) {
  const QuadraticModel ellipse = testing::ellipse_model();
  CutEvaluator eval(ellipse, SignPolicy::exact());
  const UnimodularSet s(point(-1, -1), UniMatrix());
  const LatticeFreeReport rep = check_lattice_free(GpSystem::of(s, eval), s, IntegerBox::around(s, 20));
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(rep.points_checked, 0);
}

TEST(LatticeFreeTest, StartingSetHasAWitness) {
  const QuadraticModel ellipse = testing::ellipse_model();
  CutEvaluator eval(ellipse, SignPolicy::exact());
  const UnimodularSet s(point(0, 1), UniMatrix(point(1, 0), point(1, 1)));
  const GpSystem gp = GpSystem::of(s, eval);
  const LatticeFreeReport rep = check_lattice_free(gp, s, IntegerBox::around(s, 20));
  ASSERT_FALSE(rep.pass);
  for (const auto& w : rep.witnesses) {
    EXPECT_TRUE(gp.interior(w));
    EXPECT_FALSE(s.contains(w));
  }
}

TEST(LatticeFreeTest, ZeroNormalPassesVacuously) {
  const QuadraticModel bowl(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{0, 0});
  CutEvaluator eval(bowl, SignPolicy::exact());
  const UnimodularSet s;
  const GpSystem gp = GpSystem::of(s, eval);
  EXPECT_TRUE(gp.has_zero_normal());
  EXPECT_TRUE(check_lattice_free(gp, s, IntegerBox::around(s, 5)).pass);
}

TEST(MonotoneTest, EllipseTracePasses) {
  const QuadraticModel m = testing::ellipse_model();
  const Certificate c = solve(m, UnimodularSet(point(0, 1), UniMatrix(point(1, 0), point(1, 1))));
  const OptimumSet opt = brute_force_optimum(m, sufficient_box(m));
  EXPECT_TRUE(check_monotone_measures(m, c.sets(), opt).pass);
}

TEST(MonotoneTest, UndoneFlipFails) {
  const QuadraticModel m = testing::ellipse_model();
  const Certificate c = solve(m, UnimodularSet(point(0, 1), UniMatrix(point(1, 0), point(1, 1))));
  std::vector<UnimodularSet> sets = c.sets();
  ASSERT_GE(sets.size(), 4u);
  sets[3] = sets[1];
  const MonotoneReport rep = check_monotone_measures(m, sets, brute_force_optimum(m, sufficient_box(m)));
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.step, 3);
}

TEST(MonotoneTest, SingleSetPassesVacuously) {
  const QuadraticModel m = testing::ellipse_model();
  EXPECT_TRUE(check_monotone_measures(m, {UnimodularSet()}, brute_force_optimum(m, sufficient_box(m))).pass);
}

TEST(MonotoneTest, StallOverTwoFlipsFails) {
  // Three relabelings of the same far-away square: no measure moves.
  const QuadraticModel m = testing::ellipse_model();
  const UnimodularSet s(point(5, 5), UniMatrix());
  const std::vector<UnimodularSet> sets = {s, relabel_at(s, 1, false), relabel_at(s, 3, true)};
  const MonotoneReport rep = check_monotone_measures(m, sets, brute_force_optimum(m, sufficient_box(m)));
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.step, 2);
}

TEST(ContainmentBoundTest, BowlFromFiveFive) {
  const QuadraticModel bowl(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{0, 0});
  const UnimodularSet start(point(5, 5), UniMatrix());
  const Certificate c = solve(bowl, start);
  const OptimumSet opt = brute_force_optimum(bowl, sufficient_box(bowl));
  const auto sets = c.sets();
  const StrongConvexityData sc = lipschitz_strongconvexity(bowl, trajectory_region(sets, opt));
  const PropositionReport rep = check_proposition_bound(start, sets, opt, sc);
  // (5,5) is the nearest member: |5| + |5|.
  EXPECT_EQ(rep.r0, 10);
  EXPECT_GE(rep.first_containment, 0);
  EXPECT_TRUE(rep.pass);
}

TEST(ContainmentBoundTest, OptimumAlreadyInside) {
  const QuadraticModel bowl(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{0, 0});
  const UnimodularSet start;
  const OptimumSet opt = brute_force_optimum(bowl, sufficient_box(bowl));
  const StrongConvexityData sc = lipschitz_strongconvexity(bowl, IntegerBox::around(start, 0));
  const PropositionReport rep = check_proposition_bound(start, {start}, opt, sc);
  EXPECT_EQ(rep.first_containment, 0);
  EXPECT_EQ(rep.r0, 0);
  EXPECT_TRUE(rep.pass);
}

TEST(ContainmentBoundTest, NonIdentityBasisIsNotApplicable) {
  const QuadraticModel bowl(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{0, 0});
  const UnimodularSet start(point(0, 1), UniMatrix(point(1, 0), point(1, 1)));
  const OptimumSet opt = brute_force_optimum(bowl, sufficient_box(bowl));
  const StrongConvexityData sc = lipschitz_strongconvexity(bowl, IntegerBox::around(start, 0));
  try {
    check_proposition_bound(start, {start}, opt, sc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotApplicable);
  }
}

}  // namespace
}  // namespace latfree
