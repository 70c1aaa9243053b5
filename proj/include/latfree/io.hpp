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

// JSON forms of problems and certificates. Scalars travel as rational text
// ("p" or "p/q"); integers as JSON numbers, or strings beyond 64 bits.

#ifndef LATFREE_IO_HPP_
#define LATFREE_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "latfree/flip_engine.hpp"
#include "latfree/lattice.hpp"
#include "latfree/oracle.hpp"

namespace latfree {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& r);
BigInt integer_from_json(const Json& j);
Json integer_to_json(const BigInt& v);
LatticePoint point_from_json(const Json& j);
Json point_to_json(const LatticePoint& p);
// {"z": [x, y], "U": [u1, u2]}
UnimodularSet set_from_json(const Json& j);
Json set_to_json(const UnimodularSet& s);
SignPolicy policy_from_json(const Json& j);

struct Problem {
  std::optional<QuadraticModel> quadratic;
  std::optional<MixedQuadraticModel> mixed;
  std::optional<MixedReduction> reduction;
  UnimodularSet initial;
  SignPolicy policy = SignPolicy::exact();
  std::string hash;

  // The objective over Z^2: the reduced model for mixed problems.
  const QuadraticModel& model() const;
  // f^min(z) - model()(z); zero for pure quadratics.
  Rational offset() const;
  Rational objective(const LatticePoint& z) const { return model().exact_value(z) + offset(); }
};

// Throws kParse for malformed documents; model validation errors keep their
// own codes.
Problem parse_problem(const Json& doc);
// FNV-1a over the canonical objective, 16 hex digits.
std::string problem_hash(const Json& objective);

// Values and gradients are written from the exact model, whatever policy the
// run used.
Json certificate_to_json(const Certificate& cert, const Problem& problem);
Json trace_to_json(const FlipTrace& t, const Problem& problem);
Json budget_to_json(const BudgetExhausted& e, const Problem& problem);

struct HalfspaceDoc {
  LatticePoint w;
  RationalPoint grad;
};

struct TraceDoc {
  int iteration = 0;
  std::string pattern;
  std::string case_id;
  int side = 0;
  std::optional<BigInt> k;
  UnimodularSet before;
  UnimodularSet after;
  Rational f_before;
  Rational f_after;
  int inner_products = 0;
  std::vector<HalfspaceDoc> halfspaces;
};

struct CertificateDoc {
  std::string status;
  std::string problem_hash;
  UnimodularSet final_set;
  LatticePoint argmin;
  Rational argmin_f;
  std::vector<HalfspaceDoc> halfspaces;
  int iterations = 0;
  std::vector<TraceDoc> trace;

  std::vector<UnimodularSet> sets() const;
};

CertificateDoc parse_certificate(const Json& doc);

}  // namespace latfree

#endif  // LATFREE_IO_HPP_
