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

#include "latfree/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace latfree {

namespace {

RationalMatrix to_matrix(const Mat2& m) {
  return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
}

bool symmetric(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) return false;
    }
  }
  return true;
}

double to_d(const Rational& r) { return r.to_double(); }

}  // namespace

bool is_positive_definite(const RationalMatrix& m) {
  // Without pivoting, all elimination pivots of a symmetric matrix are
  // positive iff it is positive definite.
  RationalMatrix w = m;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (w[k][k].sign() <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational factor = w[i][k] / w[k][k];
      if (factor.is_zero()) continue;
      for (std::size_t j = k; j < n; ++j) w[i][j] -= factor * w[k][j];
    }
  }
  return true;
}

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix w = m;
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kInvalidModel, "singular matrix");
    std::swap(w[pivot], w[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = w[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      w[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w[i][col].is_zero()) continue;
      const Rational f = w[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        w[i][j] -= f * w[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

QuadraticModel::QuadraticModel(Mat2 q, RationalPoint c) : q_(std::move(q)), c_(std::move(c)) {
  if (q_[0][1] != q_[1][0]) throw Error(ErrorCode::kInvalidModel, "Q is not symmetric");
  if (!is_positive_definite(to_matrix(q_))) {
    throw Error(ErrorCode::kLevelSetAssumptionViolated, "Q is not positive definite");
  }
}

Rational QuadraticModel::exact_value(const RationalPoint& p) const {
  const Rational qx = q_[0][0] * p.x + q_[0][1] * p.y;
  const Rational qy = q_[1][0] * p.x + q_[1][1] * p.y;
  return Rational(1, 2) * (p.x * qx + p.y * qy) + c_.x * p.x + c_.y * p.y;
}

RationalPoint QuadraticModel::exact_gradient(const RationalPoint& p) const {
  return {q_[0][0] * p.x + q_[0][1] * p.y + c_.x, q_[1][0] * p.x + q_[1][1] * p.y + c_.y};
}

RationalPoint QuadraticModel::continuous_minimizer() const {
  const Rational det = q_[0][0] * q_[1][1] - q_[0][1] * q_[1][0];
  // -Q^-1 c with Q^-1 = adj(Q) / det.
  return {-(q_[1][1] * c_.x - q_[0][1] * c_.y) / det, -(-q_[1][0] * c_.x + q_[0][0] * c_.y) / det};
}

ScalarPoint QuadraticModel::gradient(const RationalPoint& p) const {
  const RationalPoint g = exact_gradient(p);
  return {Scalar(g.x), Scalar(g.y)};
}

RationalPoint quadratic_gradient(const QuadraticModel& model, const RationalPoint& p) {
  return model.exact_gradient(p);
}

MixedQuadraticModel::MixedQuadraticModel(RationalMatrix a_mat, RationalMatrix b_mat, Mat2 c_mat,
                                         RationalVector a_vec, RationalPoint c_vec)
    : a_mat_(std::move(a_mat)),
      b_mat_(std::move(b_mat)),
      c_mat_(std::move(c_mat)),
      a_vec_(std::move(a_vec)),
      c_vec_(std::move(c_vec)) {
  const std::size_t d = a_vec_.size();
  if (a_mat_.size() != d || b_mat_.size() != d) {
    throw Error(ErrorCode::kInvalidModel, "A, B and a must have d rows");
  }
  for (const auto& row : a_mat_) {
    if (row.size() != d) throw Error(ErrorCode::kInvalidModel, "A must be d x d");
  }
  for (const auto& row : b_mat_) {
    if (row.size() != 2) throw Error(ErrorCode::kInvalidModel, "B must be d x 2");
  }
  if (!symmetric(a_mat_)) throw Error(ErrorCode::kInvalidModel, "A is not symmetric");
  if (c_mat_[0][1] != c_mat_[1][0]) throw Error(ErrorCode::kInvalidModel, "C is not symmetric");
}

Rational MixedQuadraticModel::value(const RationalVector& x, const RationalPoint& z) const {
  const std::size_t d = a_vec_.size();
  if (x.size() != d) throw Error(ErrorCode::kInvalidModel, "x has wrong dimension");
  Rational total = 0;
  for (std::size_t i = 0; i < d; ++i) {
    Rational ax = 0;
    for (std::size_t j = 0; j < d; ++j) ax += a_mat_[i][j] * x[j];
    total += Rational(1, 2) * x[i] * ax;
    total += x[i] * (b_mat_[i][0] * z.x + b_mat_[i][1] * z.y);
    total += a_vec_[i] * x[i];
  }
  const Rational cz0 = c_mat_[0][0] * z.x + c_mat_[0][1] * z.y;
  const Rational cz1 = c_mat_[1][0] * z.x + c_mat_[1][1] * z.y;
  total += Rational(1, 2) * (z.x * cz0 + z.y * cz1) + c_vec_.x * z.x + c_vec_.y * z.y;
  return total;
}

RationalVector MixedReduction::recover_x(const RationalPoint& z) const {
  RationalVector x(a_inv_a.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = -(a_inv_b[i][0] * z.x + a_inv_b[i][1] * z.y + a_inv_a[i]);
  }
  return x;
}

MixedReduction reduce_mixed(const MixedQuadraticModel& model) {
  const std::size_t d = model.d();
  Mat2 reduced_q = model.C();
  RationalPoint reduced_c = model.c();
  RationalMatrix a_inv_b(d, RationalVector(2, Rational(0)));
  RationalVector a_inv_a(d, Rational(0));
  Rational offset = 0;
  if (d > 0) {
    if (!is_positive_definite(model.A())) {
      throw Error(ErrorCode::kNotStronglyConvexInX, "A is not positive definite");
    }
    const RationalMatrix a_inv = invert(model.A());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        a_inv_b[i][0] += a_inv[i][j] * model.B()[j][0];
        a_inv_b[i][1] += a_inv[i][j] * model.B()[j][1];
        a_inv_a[i] += a_inv[i][j] * model.a()[j];
      }
    }
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) {
        Rational bab = 0;
        for (std::size_t i = 0; i < d; ++i) bab += model.B()[i][r] * a_inv_b[i][s];
        reduced_q[r][s] -= bab;
      }
    }
    Rational ba0 = 0, ba1 = 0;
    for (std::size_t i = 0; i < d; ++i) {
      ba0 += model.B()[i][0] * a_inv_a[i];
      ba1 += model.B()[i][1] * a_inv_a[i];
      offset -= Rational(1, 2) * model.a()[i] * a_inv_a[i];
    }
    reduced_c = {reduced_c.x - ba0, reduced_c.y - ba1};
  }
  if (!is_positive_definite(to_matrix(reduced_q))) {
    throw Error(ErrorCode::kLevelSetAssumptionViolated,
                "reduced matrix C - B'A^-1 B is not positive definite");
  }
  return MixedReduction{QuadraticModel(reduced_q, reduced_c), offset, std::move(a_inv_b),
                        std::move(a_inv_a)};
}

Scalar FloatOracle::value(const RationalPoint& p) const {
  const double v = value_(p.x.to_double(), p.y.to_double());
  if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteValue, "oracle returned non-finite f");
  return Scalar(v);
}

ScalarPoint FloatOracle::gradient(const RationalPoint& p) const {
  const auto g = gradient_(p.x.to_double(), p.y.to_double());
  if (!std::isfinite(g[0]) || !std::isfinite(g[1])) {
    throw Error(ErrorCode::kNonFiniteValue, "oracle returned non-finite gradient");
  }
  return {Scalar(g[0]), Scalar(g[1])};
}

FloatOracle float_adapter(const QuadraticModel& model) {
  const double q00 = to_d(model.Q()[0][0]), q01 = to_d(model.Q()[0][1]);
  const double q11 = to_d(model.Q()[1][1]);
  const double c0 = to_d(model.c().x), c1 = to_d(model.c().y);
  return FloatOracle(
      [=](double x, double y) {
        return 0.5 * (q00 * x * x + 2 * q01 * x * y + q11 * y * y) + c0 * x + c1 * y;
      },
      [=](double x, double y) {
        return std::array<double, 2>{q00 * x + q01 * y + c0, q01 * x + q11 * y + c1};
      });
}

namespace {

// Smallest rational of the form n / 2^64 that is >= sqrt(v), exact when v is
// the square of such a rational.
Rational sqrt_upper(const Rational& v) {
  const BigInt num = v.numerator() * v.denominator();
  BigInt scaled = num << 128;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root < scaled) root += 1;
  return Rational(root, BigInt(v.denominator()) << 64);
}

}  // namespace

StrongConvexityData lipschitz_strongconvexity(const QuadraticModel& model,
                                              const IntegerBox& region) {
  const Mat2& q = model.Q();
  const Rational tr = q[0][0] + q[1][1];
  const Rational det = q[0][0] * q[1][1] - q[0][1] * q[1][0];
  const Rational diff = q[0][0] - q[1][1];
  const Rational disc = diff * diff + Rational(4) * q[0][1] * q[0][1];
  // lambda_min = (tr - sqrt(disc)) / 2; det / tr is a cruder lower bound that
  // stays positive when rounding the root swallows a tiny eigenvalue.
  Rational c_mod = (tr - sqrt_upper(disc)) / Rational(4);
  const Rational fallback = det / (Rational(2) * tr);
  if (c_mod < fallback) c_mod = fallback;

  double l = 0.0;
  for (const auto& corner : region.corners()) {
    const RationalPoint g = model.exact_gradient(corner);
    l = std::max(l, std::hypot(g.x.to_double(), g.y.to_double()));
  }
  return {c_mod, l, LipschitzProvenance::kTrajectoryEstimated};
}

}  // namespace latfree
