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

// The five flip rules and the solve loop that applies them until a member
// has zero gradient or the gradient polyhedron is lattice-free.

#ifndef LATFREE_FLIP_ENGINE_HPP_
#define LATFREE_FLIP_ENGINE_HPP_

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "latfree/gp_geometry.hpp"
#include "latfree/lattice.hpp"
#include "latfree/oracle.hpp"

namespace latfree {

enum class CaseId {
  kCase1,
  kCase2Uprime,
  kCase2Udoubleprime,
  kCase2Reflect,
  kCase3,
  kCase4,
  kCase5,
  kNoCase,
};

std::string_view case_name(CaseId id);

enum class FlipCase { kCase1, kCase2, kCase3, kCase4, kCase5, kNone };

struct Dispatch {
  FlipCase flip = FlipCase::kNone;
  int side = 0;  // 0 when the case has no side
  BigInt k;      // H-line witness for cases 3 and 4
};

// Picks the rule for a preprocessed set. Among sides, a single-point line
// beats a longer one, then +1 beats -1 unless prefer_minus is set.
Dispatch dispatch_case(const ActiveSet& activity, const std::optional<HLineResult>& h_plus,
                       const std::optional<HLineResult>& h_minus, bool prefer_minus = false);

UnimodularSet flip_case1(const UnimodularSet& set, CutEvaluator& eval);
std::pair<UnimodularSet, CaseId> flip_case2(const UnimodularSet& set, CutEvaluator& eval);
UnimodularSet flip_case3(const UnimodularSet& set, int side, const BigInt& k);
// On the -1 side with k in {0, 1} the flip defaults to (u1, -u2), the set
// mirrored across the active edge. The literal rule (u1, k u1 - u2) for k = 1
// can move the set away from every optimum; `literal` restores it.
UnimodularSet flip_case4(const UnimodularSet& set, int side, const BigInt& k,
                         bool literal = false);
// Checks that only `side` has integer points, that the -1 line holds just
// z + u1 - u2 and that the +1 line stays at k <= -1.
UnimodularSet flip_case5(const UnimodularSet& set, int side, const HLineResult& h_plus,
                         const HLineResult& h_minus);

struct FlipTrace {
  int iteration = 0;
  UnimodularSet before;  // preprocessed
  Pattern pattern = Pattern::kSingle;
  CaseId case_id = CaseId::kNoCase;
  int side = 0;
  std::optional<BigInt> k;
  UnimodularSet after;
  Scalar f_before;  // min f over members
  Scalar f_after;
  int inner_products = 0;
  std::vector<Halfspace> halfspaces;  // of `before`
  std::optional<HLineResult> h_plus;
  std::optional<HLineResult> h_minus;
};

enum class Status { kGradientZeroOptimum, kLatticeFree };

std::string_view status_name(Status s);

struct Certificate {
  Status status = Status::kLatticeFree;
  UnimodularSet final_set;
  LatticePoint argmin;
  Scalar argmin_value;
  GpSystem gp;
  Pattern pattern = Pattern::kSingle;
  std::optional<HLineResult> h_plus;
  std::optional<HLineResult> h_minus;
  int terminal_inner_products = 0;
  int iterations = 0;
  std::vector<FlipTrace> trace;

  // Initial set followed by the set after every flip.
  std::vector<UnimodularSet> sets() const;
};

struct SolveConfig {
  SignPolicy policy = SignPolicy::exact();
  int max_iterations = 10000;
  bool prefer_minus_side = false;
  bool literal_case4 = false;
  std::function<void(const FlipTrace&)> on_flip;
};

// Carries the partial trace when the flip budget runs out.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& message, std::vector<FlipTrace> trace)
      : Error(ErrorCode::kBudgetExhausted, message), trace_(std::move(trace)) {}
  const std::vector<FlipTrace>& trace() const { return trace_; }

 private:
  std::vector<FlipTrace> trace_;
};

Certificate solve(const GradientOracle& oracle, const UnimodularSet& initial,
                  const SolveConfig& config = {});

}  // namespace latfree

#endif  // LATFREE_FLIP_ENGINE_HPP_
