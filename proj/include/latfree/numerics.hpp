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

// Exact scalars and the three-way sign classification used by every cut test.
//
// Two scalar flavors flow through the solver: exact rationals (built-in
// models) and doubles (black-box oracles). Scalar holds either one; mixing
// the two degrades to double. classify_sign() is the only place where a
// scalar is turned into a decision, and it does so under a SignPolicy.

#ifndef LATFREE_NUMERICS_HPP_
#define LATFREE_NUMERICS_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "latfree/error.hpp"

namespace latfree {

using BigInt = mpz_class;

std::string to_string(const BigInt& v);

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : value_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  // Exact value of a finite double (every double is a dyadic rational).
  static Rational from_double(double v);

  // Accepts "p/q", "p", and finite decimals such as "-0.4" or "2.5e-3".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const { return Rational(::abs(value_)); }
  double to_double() const { return value_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

enum class ScalarKind { kExact, kFloat };

// Either an exact Rational or a double.
class Scalar {
 public:
  Scalar() : value_(Rational()) {}
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double v) : value_(v) {}               // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}        // NOLINT(google-explicit-constructor)

  ScalarKind kind() const {
    return std::holds_alternative<Rational>(value_) ? ScalarKind::kExact : ScalarKind::kFloat;
  }
  bool is_exact() const { return kind() == ScalarKind::kExact; }
  bool is_finite() const;

  // Throws kPolicyMismatch for float scalars.
  const Rational& exact() const;
  double to_double() const;

  // Exact rational text; doubles are expanded exactly.
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

 private:
  std::variant<Rational, double> value_;
};

class SignPolicy {
 public:
  enum class Mode { kExact, kTolerance };

  static SignPolicy exact() { return SignPolicy(Mode::kExact, 0.0); }
  // Throws kNonFiniteValue for a negative or non-finite tau.
  static SignPolicy tolerance(double tau = kDefaultTau);

  Mode mode() const { return mode_; }
  double tau() const { return tau_; }
  bool is_exact() const { return mode_ == Mode::kExact; }

  static constexpr double kDefaultTau = 1e-9;

 private:
  SignPolicy(Mode mode, double tau) : mode_(mode), tau_(tau) {}
  Mode mode_;
  double tau_;
};

// Returns -1, 0 or +1. Exact mode requires an exact scalar; tolerance mode
// treats |v| <= tau as zero.
int classify_sign(const Scalar& v, const SignPolicy& policy);

}  // namespace latfree

#endif  // LATFREE_NUMERICS_HPP_
