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

#include "latfree/flip_engine.hpp"

#include <sstream>

namespace latfree {

std::string_view case_name(CaseId id) {
  switch (id) {
    case CaseId::kCase1: return "Case1";
    case CaseId::kCase2Uprime: return "Case2_Uprime";
    case CaseId::kCase2Udoubleprime: return "Case2_Udoubleprime";
    case CaseId::kCase2Reflect: return "Case2_Reflect";
    case CaseId::kCase3: return "Case3";
    case CaseId::kCase4: return "Case4";
    case CaseId::kCase5: return "Case5";
    case CaseId::kNoCase: return "NoCase";
  }
  return "Unknown";
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kGradientZeroOptimum: return "GradientZeroOptimum";
    case Status::kLatticeFree: return "LatticeFree";
  }
  return "Unknown";
}

std::vector<UnimodularSet> Certificate::sets() const {
  std::vector<UnimodularSet> out;
  if (trace.empty()) {
    out.push_back(final_set);
    return out;
  }
  out.push_back(trace.front().before);
  for (const auto& t : trace) out.push_back(t.after);
  return out;
}

Dispatch dispatch_case(const ActiveSet& activity, const std::optional<HLineResult>& h_plus,
                       const std::optional<HLineResult>& h_minus, bool prefer_minus) {
  switch (activity.pattern) {
    case Pattern::kFull: return {};
    case Pattern::kSingle: return {FlipCase::kCase1, 0, 0};
    case Pattern::kDiagonalPair: return {FlipCase::kCase2, 0, 0};
    default: break;
  }
  const std::optional<HLineResult>* order[2] = {&h_plus, &h_minus};
  if (prefer_minus) std::swap(order[0], order[1]);
  if (activity.pattern == Pattern::kAdjacentPair) {
    for (HLineClass wanted : {HLineClass::kOne, HLineClass::kTwoPlus}) {
      for (const auto* h : order) {
        if (*h && (*h)->cls == wanted) {
          return {wanted == HLineClass::kOne ? FlipCase::kCase3 : FlipCase::kCase4, (*h)->side,
                  (*h)->k};
        }
      }
    }
    return {};
  }
  for (const auto* h : order) {
    if (*h && !(*h)->empty()) return {FlipCase::kCase5, (*h)->side, (*h)->k};
  }
  return {};
}

namespace {

UnimodularSet make_set(const LatticePoint& z, const LatticePoint& b1, const LatticePoint& b2) {
  const UniMatrix basis(b1, b2);
  if (!basis.is_unimodular()) {
    throw Error(ErrorCode::kInternalInvariantViolation,
                "flip produced basis with determinant " + to_string(basis.det()));
  }
  return UnimodularSet(z, basis);
}

bool only_member(const ActiveSet& a, int index) {
  return a.count() == 1 && a.is_active(index);
}

}  // namespace

UnimodularSet flip_case1(const UnimodularSet& set, CutEvaluator& eval) {
  const LatticePoint& z = set.anchor();
  const int s1 = classify_sign(eval.inner(z, set.u1()), eval.policy()) <= 0 ? 1 : -1;
  const int s2 = classify_sign(eval.inner(z, set.u2()), eval.policy()) <= 0 ? 1 : -1;
  if (s1 == 1 && s2 == 1) {
    std::ostringstream msg;
    msg << "single active anchor of " << set << " has no descent side";
    throw Error(ErrorCode::kNonConvexOracleDetected, msg.str());
  }
  return make_set(z, s1 == 1 ? set.u1() : -set.u1(), s2 == 1 ? set.u2() : -set.u2());
}

std::pair<UnimodularSet, CaseId> flip_case2(const UnimodularSet& set, CutEvaluator& eval) {
  const LatticePoint& z = set.anchor();
  const LatticePoint& u1 = set.u1();
  const LatticePoint& u2 = set.u2();
  const LatticePoint d = z + u1 + u2;
  const LatticePoint e = d + u1;  // z + 2u1 + u2
  const LatticePoint f = z - u1;

  const UnimodularSet prime = make_set(z, u1, u1 + u2);
  const ActiveSet prime_act = active_set(prime, eval);
  if (is_connected(prime_act) || only_member(prime_act, 3) ||
      (eval.strictly_cuts(d, f) && eval.strictly_cuts(f, z))) {
    return {prime, CaseId::kCase2Uprime};
  }
  const UnimodularSet dprime = make_set(z, -u1, u1 + u2);
  const ActiveSet dprime_act = active_set(dprime, eval);
  if (is_connected(dprime_act) || only_member(dprime_act, 1) ||
      (eval.strictly_cuts(z, e) && eval.strictly_cuts(e, d))) {
    return {dprime, CaseId::kCase2Udoubleprime};
  }
  return {make_set(z, -u1, u1 + u1 + u2), CaseId::kCase2Reflect};
}

UnimodularSet flip_case3(const UnimodularSet& set, int side, const BigInt& k) {
  const LatticePoint su2 = side > 0 ? set.u2() : -set.u2();
  return make_set(set.anchor(), scale(k, set.u1()) + su2, scale(1 - k, set.u1()) - su2);
}

UnimodularSet flip_case4(const UnimodularSet& set, int side, const BigInt& k, bool literal) {
  const LatticePoint su2 = side > 0 ? set.u2() : -set.u2();
  BigInt m = k >= 0 ? k : BigInt(k - 1);
  if (!literal && side < 0 && (k == 0 || k == 1)) m = 0;
  return make_set(set.anchor(), set.u1(), scale(m, set.u1()) + su2);
}

UnimodularSet flip_case5(const UnimodularSet& set, int side, const HLineResult& h_plus,
                         const HLineResult& h_minus) {
  const HLineResult& mine = side > 0 ? h_plus : h_minus;
  const HLineResult& other = side > 0 ? h_minus : h_plus;
  if (!other.empty()) {
    std::ostringstream msg;
    msg << "both lines of triple-active " << set << " contain integer points";
    throw Error(ErrorCode::kNonConvexOracleDetected, msg.str());
  }
  // The -1 line can only hold z + u1 - u2. The +1 line runs through
  // z + u2 and z + u1 + u2, so its points all have k <= -1, and there may
  // be more than one of them.
  const bool ok = mine.empty() ? false
                  : side < 0   ? mine.cls == HLineClass::kOne && mine.k == 1
                               : mine.last && *mine.last <= -1;
  if (!ok) {
    std::ostringstream msg;
    msg << "line " << side << " of triple-active " << set
        << " holds integer points outside the admissible range";
    throw Error(ErrorCode::kNonConvexOracleDetected, msg.str());
  }
  if (side > 0) return make_set(set.anchor(), set.u1(), set.u2() - set.u1());
  return make_set(set.anchor(), set.u1() - set.u2(), set.u2());
}

namespace {

struct MinValue {
  int index;
  Scalar value;
};

MinValue min_over(const UnimodularSet& set, CutEvaluator& eval) {
  MinValue best{0, eval.value(set.member(0))};
  for (int i = 1; i < 4; ++i) {
    const Scalar& v = eval.value(set.member(i));
    if (classify_sign(v - best.value, eval.policy()) < 0) best = {i, v};
  }
  return best;
}

[[noreturn]] void invariant_failure(const GradientOracle& oracle, const std::string& what) {
  throw Error(oracle.scalar_kind() == ScalarKind::kExact ? ErrorCode::kInternalInvariantViolation
                                                         : ErrorCode::kNonConvexOracleDetected,
              what);
}

}  // namespace

Certificate solve(const GradientOracle& oracle, const UnimodularSet& initial,
                  const SolveConfig& config) {
  if (config.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidModel, "max_iterations must be at least 1");
  }
  CutEvaluator eval(oracle, config.policy);
  Certificate cert;
  UnimodularSet current = initial;

  for (int iteration = 0;; ++iteration) {
    eval.begin_iteration();
    for (int i = 0; i < 4; ++i) {
      if (!eval.is_zero_gradient(current.member(i))) continue;
      cert.status = Status::kGradientZeroOptimum;
      cert.final_set = current;
      cert.argmin = current.member(i);
      cert.argmin_value = eval.value(cert.argmin);
      cert.gp = GpSystem::of(current, eval);
      cert.pattern = active_set(current, eval).pattern;
      cert.terminal_inner_products = eval.inner_products();
      cert.iterations = iteration;
      return cert;
    }

    Preprocessed pre = preprocess(current, eval);
    std::optional<HLineResult> h_plus, h_minus;
    if (is_connected(pre.activity) && pre.activity.pattern != Pattern::kFull) {
      h_plus = h_line(pre.set, eval, 1);
      h_minus = h_line(pre.set, eval, -1);
    }
    const Dispatch dispatch =
        dispatch_case(pre.activity, h_plus, h_minus, config.prefer_minus_side);

    if (dispatch.flip == FlipCase::kNone) {
      const MinValue best = min_over(pre.set, eval);
      cert.status = Status::kLatticeFree;
      cert.final_set = pre.set;
      cert.argmin = pre.set.member(best.index);
      cert.argmin_value = best.value;
      cert.gp = GpSystem::of(pre.set, eval);
      cert.pattern = pre.activity.pattern;
      cert.h_plus = h_plus;
      cert.h_minus = h_minus;
      cert.terminal_inner_products = eval.inner_products();
      cert.iterations = iteration;
      return cert;
    }
    if (iteration >= config.max_iterations) {
      throw BudgetExhausted("no certificate after " + std::to_string(iteration) + " flips",
                            std::move(cert.trace));
    }

    FlipTrace t;
    t.iteration = iteration;
    t.before = pre.set;
    t.pattern = pre.activity.pattern;
    t.side = dispatch.side;
    t.h_plus = h_plus;
    t.h_minus = h_minus;
    switch (dispatch.flip) {
      case FlipCase::kCase1:
        t.after = flip_case1(pre.set, eval);
        t.case_id = CaseId::kCase1;
        break;
      case FlipCase::kCase2:
        std::tie(t.after, t.case_id) = flip_case2(pre.set, eval);
        break;
      case FlipCase::kCase3:
        t.after = flip_case3(pre.set, dispatch.side, dispatch.k);
        t.case_id = CaseId::kCase3;
        t.k = dispatch.k;
        break;
      case FlipCase::kCase4:
        t.after = flip_case4(pre.set, dispatch.side, dispatch.k, config.literal_case4);
        t.case_id = CaseId::kCase4;
        t.k = dispatch.k;
        break;
      case FlipCase::kCase5:
        t.after = flip_case5(pre.set, dispatch.side, *h_plus, *h_minus);
        t.case_id = CaseId::kCase5;
        t.k = dispatch.k;
        break;
      case FlipCase::kNone:
        break;
    }
    t.inner_products = eval.inner_products();
    for (const auto& w : pre.set.members()) t.halfspaces.push_back({w, eval.gradient(w)});

    for (int i = 0; i < 4; ++i) {
      if (pre.activity.is_active(i) && !t.after.contains(pre.set.member(i))) {
        std::ostringstream msg;
        msg << case_name(t.case_id) << " dropped active member " << pre.set.member(i)
            << " of " << pre.set;
        invariant_failure(oracle, msg.str());
      }
    }
    t.f_before = min_over(pre.set, eval).value;
    t.f_after = min_over(t.after, eval).value;
    if (classify_sign(t.f_after - t.f_before, config.policy) > 0) {
      std::ostringstream msg;
      msg << case_name(t.case_id) << " increased min f from " << t.f_before.to_string()
          << " to " << t.f_after.to_string();
      invariant_failure(oracle, msg.str());
    }

    current = t.after;
    if (config.on_flip) config.on_flip(t);
    cert.trace.push_back(std::move(t));
  }
}

}  // namespace latfree
