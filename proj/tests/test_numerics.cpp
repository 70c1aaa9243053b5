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

#include <cmath>
#include <limits>

#include "latfree/numerics.hpp"

namespace latfree {
namespace {

TEST(RationalTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(BigInt(3), BigInt(2)));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("-0.4"), Rational(BigInt(-2), BigInt(5)));
  EXPECT_EQ(Rational::parse("2.5e-3"), Rational(BigInt(1), BigInt(400)));
  EXPECT_EQ(Rational::parse("1/-2"), Rational(BigInt(-1), BigInt(2)));
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1//2", "0x10", "1.2.3"}) {
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
  }
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(RationalTest, CanonicalText) {
  EXPECT_EQ(Rational(BigInt(4), BigInt(-6)).to_string(), "-2/3");
  EXPECT_EQ(Rational(BigInt(8), BigInt(4)).to_string(), "2");
  EXPECT_EQ(Rational().to_string(), "0");
}

TEST(RationalTest, FloorAndCeil) {
  const Rational r(BigInt(-7), BigInt(2));
  EXPECT_EQ(r.floor(), -4);
  EXPECT_EQ(r.ceil(), -3);
  EXPECT_EQ(Rational(5).floor(), 5);
  EXPECT_EQ(Rational(5).ceil(), 5);
}

TEST(RationalTest, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.5), Rational(BigInt(1), BigInt(2)));
  const Rational tenth = Rational::from_double(0.1);
  EXPECT_NE(tenth, Rational(BigInt(1), BigInt(10)));
  EXPECT_EQ(tenth.to_double(), 0.1);
  EXPECT_THROW(Rational::from_double(std::numeric_limits<double>::infinity()), Error);
  EXPECT_THROW(Rational::from_double(std::nan("")), Error);
}

TEST(RationalTest, FieldIdentitiesOnSmallGrid) {
  for (int a = -4; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Rational x{BigInt(a), BigInt(b)};
      const Rational y{BigInt(b), BigInt(a == 0 ? 1 : a)};
      EXPECT_EQ(x + y - y, x);
      EXPECT_EQ((x * y) * Rational(3), x * (y * Rational(3)));
      if (!y.is_zero()) {
        EXPECT_EQ(x / y * y, x);
      }
      EXPECT_EQ(Rational::parse(x.to_string()), x);
    }
  }
}

TEST(ScalarTest, MixingDegradesToDouble) {
  const Scalar exact = Rational(BigInt(1), BigInt(3));
  EXPECT_TRUE(exact.is_exact());
  const Scalar mixed = exact + Scalar(0.5);
  EXPECT_FALSE(mixed.is_exact());
  EXPECT_NEAR(mixed.to_double(), 1.0 / 3 + 0.5, 1e-15);
  EXPECT_THROW(mixed.exact(), Error);
}

TEST(ScalarTest, DoubleTextIsExactExpansion) {
  EXPECT_EQ(Scalar(0.25).to_string(), "1/4");
}

TEST(ClassifySignTest, ExactPolicy) {
  EXPECT_EQ(classify_sign(Scalar(0), SignPolicy::exact()), 0);
  EXPECT_EQ(classify_sign(Scalar(Rational(BigInt(1), BigInt(3))), SignPolicy::exact()), 1);
  EXPECT_EQ(classify_sign(Scalar(Rational(-2)), SignPolicy::exact()), -1);
}

TEST(ClassifySignTest, ToleranceBand) {
  const SignPolicy p = SignPolicy::tolerance(1e-9);
  EXPECT_EQ(classify_sign(Scalar(5e-10), p), 0);
  EXPECT_EQ(classify_sign(Scalar(-5e-10), p), 0);
  EXPECT_EQ(classify_sign(Scalar(2e-9), p), 1);
  EXPECT_EQ(classify_sign(Scalar(-2e-9), p), -1);
}

TEST(ClassifySignTest, FloatUnderExactPolicyIsRejected) {
  EXPECT_THROW(classify_sign(Scalar(0.5), SignPolicy::exact()), Error);
}

TEST(ClassifySignTest, NonFiniteIsRejected) {
  const SignPolicy p = SignPolicy::tolerance();
  EXPECT_THROW(classify_sign(Scalar(std::numeric_limits<double>::infinity()), p), Error);
  EXPECT_THROW(SignPolicy::tolerance(-1.0), Error);
}

}  // namespace
}  // namespace latfree
