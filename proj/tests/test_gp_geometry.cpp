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

#include <algorithm>

#include "latfree/gp_geometry.hpp"
#include "test_support.hpp"

namespace latfree {
namespace {

// Integer points of the line within |k| <= span; unbounded ends are clipped.
std::vector<long> integers_of(const HLineResult& h, long span = 300) {
  std::vector<long> out;
  if (h.empty()) return out;
  const BigInt lo = h.first ? std::max(*h.first, BigInt(-span)) : BigInt(-span);
  const BigInt hi = h.last ? std::min(*h.last, BigInt(span)) : BigInt(span);
  for (BigInt k = lo; k <= hi; ++k) out.push_back(k.get_si());
  return out;
}

TEST(CutTest, Examples) {
  const QuadraticModel m = testing::ellipse_model();
  const SignPolicy exact = SignPolicy::exact();
  EXPECT_TRUE(strictly_cuts(m, exact, point(0, 0), point(1, 0)));
  EXPECT_FALSE(strictly_cuts(m, exact, point(0, 0), point(0, 0)));
  EXPECT_FALSE(strictly_cuts(m, exact, point(0, 0), point(-1, 0)));
  CutEvaluator eval(m, exact);
  EXPECT_TRUE(eval.cuts(point(0, 0), point(0, 0)));
}

TEST(CutEvaluatorTest, CountsSignedDirectionsOnce) {
  const QuadraticModel ellipse = testing::ellipse_model();
  CutEvaluator eval(ellipse, SignPolicy::exact());
  eval.inner(point(0, 0), point(1, 0));
  eval.inner(point(0, 0), point(-1, 0));
  eval.inner(point(0, 0), point(0, 0));
  EXPECT_EQ(eval.inner_products(), 1);
  eval.inner(point(1, 0), point(1, 0));
  EXPECT_EQ(eval.inner_products(), 2);
  eval.begin_iteration();
  EXPECT_EQ(eval.inner_products(), 0);
}

TEST(CutEvaluatorTest, FloatOracleNeedsTolerance) {
  const FloatOracle f = float_adapter(testing::ellipse_model());
  EXPECT_THROW(CutEvaluator(f, SignPolicy::exact()), Error);
  CutEvaluator eval(f, SignPolicy::tolerance());
  EXPECT_TRUE(eval.strictly_cuts(point(0, 0), point(1, 0)));
}

TEST(ActiveSetTest, Examples) {
  const QuadraticModel ellipse = testing::ellipse_model();
  CutEvaluator eval(ellipse, SignPolicy::exact());
  const ActiveSet single = active_set(UnimodularSet(), eval);
  EXPECT_EQ(single.active, (std::array<bool, 4>{true, false, false, false}));
  EXPECT_EQ(single.pattern, Pattern::kSingle);
  const ActiveSet full = active_set(UnimodularSet(point(-1, -1), UniMatrix()), eval);
  EXPECT_EQ(full.pattern, Pattern::kFull);

  const QuadraticModel circle_model = testing::shifted_circle_model();
  CutEvaluator circle(circle_model, SignPolicy::exact());
  const ActiveSet pair = active_set(UnimodularSet(), circle);
  EXPECT_EQ(pair.active, (std::array<bool, 4>{false, true, false, true}));
  EXPECT_EQ(pair.pattern, Pattern::kAdjacentPair);
}

TEST(ActiveSetTest, MatchesNaiveDefinition) {
  testing::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const QuadraticModel m = testing::random_pd_quadratic(rng);
    const UnimodularSet s = testing::random_unimodular_set(rng);
    CutEvaluator eval(m, SignPolicy::exact());
    const ActiveSet a = active_set(s, eval);
    EXPECT_EQ(a.active, testing::naive_active(m, s));
    EXPECT_LE(eval.inner_products(), 12);
  }
}

TEST(ActiveSetTest, PatternClassification) {
  EXPECT_EQ(classify_pattern({true, true, false, false}), Pattern::kAdjacentPair);
  EXPECT_EQ(classify_pattern({false, true, true, false}), Pattern::kDiagonalPair);
  EXPECT_EQ(classify_pattern({true, true, true, false}), Pattern::kTriple);
  EXPECT_THROW(classify_pattern({false, false, false, false}), Error);
}

TEST(PreprocessTest, ShiftedCircleExample) {
  const QuadraticModel circle_model = testing::shifted_circle_model();
  CutEvaluator eval(circle_model, SignPolicy::exact());
  const Preprocessed p = preprocess(UnimodularSet(), eval);
  EXPECT_EQ(p.set.anchor(), point(1, 0));
  EXPECT_EQ(p.set.u1(), point(0, 1));
  EXPECT_EQ(p.set.u2(), point(-1, 0));
  EXPECT_TRUE(is_connected(p.activity));
}

TEST(PreprocessTest, DiagonalFixtures) {
  const Json fx = testing::load_fixture("derived.json");
  ASSERT_GE(fx.at("diagonal").size(), 1u);
  for (const auto& e : fx.at("diagonal")) {
    const QuadraticModel m = testing::model_from_fixture(e.at("objective"));
    CutEvaluator eval(m, SignPolicy::exact());
    const Preprocessed p = preprocess(set_from_json(e.at("set")), eval);
    EXPECT_EQ(p.activity.pattern, Pattern::kDiagonalPair);
    EXPECT_FALSE(is_connected(p.activity));
    bool listed = false;
    for (const auto& v : e.at("valid")) listed = listed || set_from_json(v) == p.set;
    EXPECT_TRUE(listed) << p.set;
    EXPECT_TRUE(eval.strictly_cuts(p.set.member(0), p.set.member(1)));
    EXPECT_TRUE(eval.strictly_cuts(p.set.member(3), p.set.member(2)));
  }
}

TEST(PreprocessTest, PostconditionsOnRandomSets) {
  testing::Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    const QuadraticModel m = testing::random_pd_quadratic(rng);
    const UnimodularSet s = testing::random_unimodular_set(rng);
    CutEvaluator eval(m, SignPolicy::exact());
    const Preprocessed p = preprocess(s, eval);
    ASSERT_TRUE(p.set.same_members(s));
    const auto act = testing::naive_active(m, p.set);
    EXPECT_EQ(act, p.activity.active);
    EXPECT_TRUE(act[0]);
    switch (p.activity.pattern) {
      case Pattern::kAdjacentPair: EXPECT_TRUE(act[1]); break;
      case Pattern::kTriple: EXPECT_TRUE(act[1] && act[2]); break;
      case Pattern::kDiagonalPair: EXPECT_TRUE(act[3]); break;
      default: break;
    }
    CutEvaluator again(m, SignPolicy::exact());
    EXPECT_EQ(preprocess(p.set, again).set, p.set);
  }
}

TEST(ConnectivityTest, ByPattern) {
  ActiveSet a;
  a.pattern = Pattern::kAdjacentPair;
  EXPECT_TRUE(is_connected(a));
  a.pattern = Pattern::kTriple;
  EXPECT_TRUE(is_connected(a));
  a.pattern = Pattern::kSingle;
  EXPECT_FALSE(is_connected(a));
  a.pattern = Pattern::kDiagonalPair;
  EXPECT_FALSE(is_connected(a));
}

TEST(HLineTest, ShiftedCircleExample) {
  const QuadraticModel circle_model = testing::shifted_circle_model();
  CutEvaluator eval(circle_model, SignPolicy::exact());
  const UnimodularSet s(point(1, 0), UniMatrix(point(0, 1), point(-1, 0)));
  const HLineResult plus = h_line(s, eval, 1);
  EXPECT_EQ(plus.cls, HLineClass::kEmpty);
  const HLineResult minus = h_line(s, eval, -1);
  ASSERT_TRUE(minus.lo && minus.hi);
  EXPECT_EQ(*minus.lo, -3);
  EXPECT_EQ(*minus.hi, 4);
  EXPECT_EQ(integers_of(minus), (std::vector<long>{-2, -1, 0, 1, 2, 3}));
  EXPECT_EQ(minus.cls, HLineClass::kTwoPlus);
  EXPECT_EQ(minus.k, 0);
}

TEST(HLineTest, ZeroGradientMemberEmptiesBothLines) {
  const QuadraticModel bowl(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{0, 0});
  CutEvaluator eval(bowl, SignPolicy::exact());
  const UnimodularSet s(point(0, 0), UniMatrix());
  EXPECT_TRUE(h_line(s, eval, 1).empty());
  EXPECT_TRUE(h_line(s, eval, -1).empty());
}

TEST(HLineTest, MatchesEnumerationOnAdjacentPairs) {
  testing::Rng rng(33);
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 300; ++i) {
    const QuadraticModel m = testing::random_pd_quadratic(rng);
    CutEvaluator eval(m, SignPolicy::exact());
    const Preprocessed p = preprocess(testing::random_unimodular_set(rng), eval);
    if (!is_connected(p.activity) || p.activity.pattern == Pattern::kFull) continue;
    ++checked;
    for (int side : {1, -1}) {
      const HLineResult h = h_line(p.set, eval, side);
      const std::vector<long> want = testing::naive_hline(m, p.set, side);
      EXPECT_EQ(integers_of(h), want);
      if (!want.empty()) {
        const long minabs = *std::min_element(want.begin(), want.end(), [](long a, long b) {
          return std::abs(a) < std::abs(b);
        });
        EXPECT_EQ(h.k, minabs);
        EXPECT_EQ(h.cls, want.size() == 1 ? HLineClass::kOne : HLineClass::kTwoPlus);
      }
    }
  }
  EXPECT_EQ(checked, 300);
}

TEST(GpSystemTest, InteriorAndBoundary) {
  const QuadraticModel ellipse = testing::ellipse_model();
  CutEvaluator eval(ellipse, SignPolicy::exact());
  const GpSystem gp = GpSystem::of(UnimodularSet(), eval);
  EXPECT_TRUE(gp.contains(point(0, 0)));
  EXPECT_FALSE(gp.interior(point(0, 0)));
  EXPECT_TRUE(gp.interior(RationalPoint{Rational(BigInt(-1), BigInt(6)), Rational(BigInt(-1), BigInt(2))}));
  EXPECT_FALSE(gp.has_zero_normal());
}

}  // namespace
}  // namespace latfree
