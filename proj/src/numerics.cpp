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

#include "latfree/numerics.hpp"

#include <cctype>
#include <cmath>

namespace latfree {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kPolicyMismatch: return "PolicyMismatch";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kInvalidRelabel: return "InvalidRelabel";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kNotStronglyConvexInX: return "NotStronglyConvexInX";
    case ErrorCode::kLevelSetAssumptionViolated: return "LevelSetAssumptionViolated";
    case ErrorCode::kNonConvexOracleDetected: return "NonConvexOracleDetected";
    case ErrorCode::kInternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kBoxTooSmall: return "BoxTooSmall";
    case ErrorCode::kNotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::kParse, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteValue, "cannot convert non-finite double");
  return Rational(mpq_class(v));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
}

BigInt parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_rational(whole);
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_rational(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_signed_integer(s.substr(0, slash), text);
    BigInt den = parse_signed_integer(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  // Decimal with optional fraction and exponent.
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ex = parse_signed_integer(s.substr(e + 1), text);
    if (!ex.fits_slong_p() || ::abs(ex) > 100000) bad_rational(text);
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_rational(text);
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) bad_rational(text);
    digits = std::string(s);
  }
  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mantissa, scale) : Rational(BigInt(mantissa * scale));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInternalInvariantViolation, "division by zero");
  value_ /= o.value_;
  return *this;
}

bool Scalar::is_finite() const {
  if (const double* d = std::get_if<double>(&value_)) return std::isfinite(*d);
  return true;
}

const Rational& Scalar::exact() const {
  if (const Rational* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorCode::kPolicyMismatch, "float scalar where an exact rational is required");
}

double Scalar::to_double() const {
  if (const double* d = std::get_if<double>(&value_)) return *d;
  return std::get<Rational>(value_).to_double();
}

std::string Scalar::to_string() const {
  if (const Rational* r = std::get_if<Rational>(&value_)) return r->to_string();
  return Rational::from_double(std::get<double>(value_)).to_string();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() + b.exact();
  return a.to_double() + b.to_double();
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() - b.exact();
  return a.to_double() - b.to_double();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() * b.exact();
  return a.to_double() * b.to_double();
}

Scalar operator-(const Scalar& a) {
  if (a.is_exact()) return -a.exact();
  return -a.to_double();
}

SignPolicy SignPolicy::tolerance(double tau) {
  if (!std::isfinite(tau) || tau < 0) {
    throw Error(ErrorCode::kNonFiniteValue, "tolerance must be finite and nonnegative");
  }
  return SignPolicy(Mode::kTolerance, tau);
}

int classify_sign(const Scalar& v, const SignPolicy& policy) {
  if (!v.is_finite()) throw Error(ErrorCode::kNonFiniteValue, "cannot classify a non-finite value");
  if (policy.is_exact()) return v.exact().sign();
  if (v.is_exact()) {
    // Compare exactly against tau so that classify(-v) == -classify(v).
    const Rational tau = Rational::from_double(policy.tau());
    const Rational& r = v.exact();
    if (r > tau) return 1;
    if (r < -tau) return -1;
    return 0;
  }
  const double d = v.to_double();
  if (d > policy.tau()) return 1;
  if (d < -policy.tau()) return -1;
  return 0;
}

}  // namespace latfree
