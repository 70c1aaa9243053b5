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

// Gradient oracles: exact rational quadratics, mixed-integer quadratics
// reduced over their continuous block, and a double-valued black box.

#ifndef LATFREE_ORACLE_HPP_
#define LATFREE_ORACLE_HPP_

#include <array>
#include <functional>
#include <vector>

#include "latfree/lattice.hpp"
#include "latfree/numerics.hpp"

namespace latfree {

using ScalarPoint = Vec2<Scalar>;
using Mat2 = std::array<std::array<Rational, 2>, 2>;  // row-major
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

class GradientOracle {
 public:
  virtual ~GradientOracle() = default;

  virtual ScalarKind scalar_kind() const = 0;
  virtual Scalar value(const RationalPoint& p) const = 0;
  virtual ScalarPoint gradient(const RationalPoint& p) const = 0;

  Scalar value(const LatticePoint& p) const { return value(to_rational(p)); }
  ScalarPoint gradient(const LatticePoint& p) const { return gradient(to_rational(p)); }
};

// f(x) = 1/2 x'Qx + c'x with Q symmetric positive definite.
class QuadraticModel final : public GradientOracle {
 public:
  // Throws kInvalidModel if Q is not symmetric and
  // kLevelSetAssumptionViolated if Q is not positive definite.
  QuadraticModel(Mat2 q, RationalPoint c);

  const Mat2& Q() const { return q_; }
  const RationalPoint& c() const { return c_; }

  Rational exact_value(const RationalPoint& p) const;
  RationalPoint exact_gradient(const RationalPoint& p) const;
  Rational exact_value(const LatticePoint& p) const { return exact_value(to_rational(p)); }
  RationalPoint exact_gradient(const LatticePoint& p) const {
    return exact_gradient(to_rational(p));
  }

  // Unconstrained minimizer -Q^-1 c.
  RationalPoint continuous_minimizer() const;

  ScalarKind scalar_kind() const override { return ScalarKind::kExact; }
  Scalar value(const RationalPoint& p) const override { return exact_value(p); }
  ScalarPoint gradient(const RationalPoint& p) const override;
  using GradientOracle::gradient;
  using GradientOracle::value;

 private:
  Mat2 q_;
  RationalPoint c_;
};

RationalPoint quadratic_gradient(const QuadraticModel& model, const RationalPoint& p);

// f(x, z) = 1/2 x'Ax + x'Bz + 1/2 z'Cz + a'x + c'z, x in R^d, z in Z^2.
class MixedQuadraticModel {
 public:
  // Checks dimensions and symmetry of A and C (kInvalidModel).
  MixedQuadraticModel(RationalMatrix a_mat, RationalMatrix b_mat, Mat2 c_mat, RationalVector a_vec,
                      RationalPoint c_vec);

  std::size_t d() const { return a_vec_.size(); }
  const RationalMatrix& A() const { return a_mat_; }
  const RationalMatrix& B() const { return b_mat_; }
  const Mat2& C() const { return c_mat_; }
  const RationalVector& a() const { return a_vec_; }
  const RationalPoint& c() const { return c_vec_; }

  Rational value(const RationalVector& x, const RationalPoint& z) const;

 private:
  RationalMatrix a_mat_;
  RationalMatrix b_mat_;
  Mat2 c_mat_;
  RationalVector a_vec_;
  RationalPoint c_vec_;
};

struct MixedReduction {
  QuadraticModel reduced;
  // f^min(z) = reduced(z) + constant_offset.
  Rational constant_offset;
  RationalMatrix a_inv_b;  // A^-1 B, d x 2
  RationalVector a_inv_a;  // A^-1 a

  RationalVector recover_x(const RationalPoint& z) const;
  Rational fmin(const RationalPoint& z) const {
    return reduced.exact_value(z) + constant_offset;
  }
};

// Throws kNotStronglyConvexInX if A is not positive definite and
// kLevelSetAssumptionViolated if C - B'A^-1 B is not.
MixedReduction reduce_mixed(const MixedQuadraticModel& model);

// Symmetric positive definiteness by exact Gaussian elimination.
bool is_positive_definite(const RationalMatrix& m);
RationalMatrix invert(const RationalMatrix& m);

// Wraps double-valued callables; comparisons must use a tolerance policy.
class FloatOracle final : public GradientOracle {
 public:
  using ValueFn = std::function<double(double, double)>;
  using GradientFn = std::function<std::array<double, 2>(double, double)>;

  FloatOracle(ValueFn value, GradientFn gradient)
      : value_(std::move(value)), gradient_(std::move(gradient)) {}

  ScalarKind scalar_kind() const override { return ScalarKind::kFloat; }
  Scalar value(const RationalPoint& p) const override;
  ScalarPoint gradient(const RationalPoint& p) const override;
  using GradientOracle::gradient;
  using GradientOracle::value;

 private:
  ValueFn value_;
  GradientFn gradient_;
};

// Double projection of an exact quadratic, for exercising tolerance mode.
FloatOracle float_adapter(const QuadraticModel& model);

enum class LipschitzProvenance { kGlobalGiven, kTrajectoryEstimated };

struct StrongConvexityData {
  Rational c_modulus;  // lower bound on lambda_min(Q) / 2
  double l_estimate = 0.0;
  LipschitzProvenance provenance = LipschitzProvenance::kTrajectoryEstimated;
};

StrongConvexityData lipschitz_strongconvexity(const QuadraticModel& model,
                                              const IntegerBox& region);

}  // namespace latfree

#endif  // LATFREE_ORACLE_HPP_
