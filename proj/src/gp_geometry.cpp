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

#include "latfree/gp_geometry.hpp"

#include <sstream>

namespace latfree {

namespace {

Scalar dot(const ScalarPoint& g, const LatticePoint& d) {
  return g.x * Scalar(Rational(d.x)) + g.y * Scalar(Rational(d.y));
}

Scalar dot(const ScalarPoint& g, const RationalPoint& d) {
  return g.x * Scalar(d.x) + g.y * Scalar(d.y);
}

bool positive_direction(const LatticePoint& d) { return d.x > 0 || (d.x == 0 && d.y > 0); }

Rational as_rational(const Scalar& s) {
  return s.is_exact() ? s.exact() : Rational::from_double(s.to_double());
}

}  // namespace

CutEvaluator::CutEvaluator(const GradientOracle& oracle, SignPolicy policy)
    : oracle_(oracle), policy_(policy) {
  if (oracle.scalar_kind() == ScalarKind::kFloat && policy.is_exact()) {
    throw Error(ErrorCode::kPolicyMismatch, "a float oracle needs a tolerance policy");
  }
}

const ScalarPoint& CutEvaluator::gradient(const LatticePoint& w) {
  auto it = gradients_.find(w);
  if (it == gradients_.end()) it = gradients_.emplace(w, oracle_.gradient(w)).first;
  return it->second;
}

const Scalar& CutEvaluator::value(const LatticePoint& w) {
  auto it = values_.find(w);
  if (it == values_.end()) it = values_.emplace(w, oracle_.value(w)).first;
  return it->second;
}

bool CutEvaluator::is_zero_gradient(const LatticePoint& w) {
  const ScalarPoint& g = gradient(w);
  return classify_sign(g.x, policy_) == 0 && classify_sign(g.y, policy_) == 0;
}

Scalar CutEvaluator::inner(const LatticePoint& w, const LatticePoint& d) {
  if (d.x == 0 && d.y == 0) return Scalar(0);
  const bool flip = !positive_direction(d);
  const LatticePoint key_dir = flip ? -d : d;
  auto key = std::make_pair(w, key_dir);
  auto it = inner_memo_.find(key);
  if (it == inner_memo_.end()) {
    it = inner_memo_.emplace(std::move(key), dot(gradient(w), key_dir)).first;
  }
  return flip ? -it->second : it->second;
}

bool CutEvaluator::has_inner(const LatticePoint& w, const LatticePoint& d) const {
  if (d.x == 0 && d.y == 0) return true;
  return inner_memo_.count({w, positive_direction(d) ? d : -d}) > 0;
}

int CutEvaluator::cut_sign(const LatticePoint& w, const LatticePoint& v) {
  return classify_sign(inner(w, v - w), policy_);
}

void CutEvaluator::begin_iteration() { inner_memo_.clear(); }

bool strictly_cuts(const GradientOracle& oracle, const SignPolicy& policy, const LatticePoint& w,
                   const LatticePoint& v) {
  return classify_sign(dot(oracle.gradient(w), v - w), policy) > 0;
}

GpSystem GpSystem::of(const UnimodularSet& set, CutEvaluator& eval) {
  std::vector<Halfspace> hs;
  for (const auto& w : set.members()) hs.push_back({w, eval.gradient(w)});
  return GpSystem(std::move(hs), eval.policy());
}

bool GpSystem::contains(const RationalPoint& x) const {
  for (const auto& h : halfspaces_) {
    if (classify_sign(dot(h.normal, x - to_rational(h.base)), policy_) > 0) return false;
  }
  return true;
}

bool GpSystem::interior(const RationalPoint& x) const {
  for (const auto& h : halfspaces_) {
    if (classify_sign(dot(h.normal, x - to_rational(h.base)), policy_) >= 0) return false;
  }
  return true;
}

bool GpSystem::has_zero_normal() const {
  for (const auto& h : halfspaces_) {
    if (classify_sign(h.normal.x, policy_) == 0 && classify_sign(h.normal.y, policy_) == 0) {
      return true;
    }
  }
  return false;
}

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::kSingle: return "Single";
    case Pattern::kAdjacentPair: return "AdjacentPair";
    case Pattern::kDiagonalPair: return "DiagonalPair";
    case Pattern::kTriple: return "Triple";
    case Pattern::kFull: return "Full";
  }
  return "Unknown";
}

int ActiveSet::count() const {
  int n = 0;
  for (bool a : active) n += a ? 1 : 0;
  return n;
}

Pattern classify_pattern(const std::array<bool, 4>& active) {
  int n = 0, first = -1, second = -1;
  for (int i = 0; i < 4; ++i) {
    if (!active[i]) continue;
    ++n;
    (first < 0 ? first : second) = i;
  }
  switch (n) {
    case 1: return Pattern::kSingle;
    case 2: return (first ^ second) == 3 ? Pattern::kDiagonalPair : Pattern::kAdjacentPair;
    case 3: return Pattern::kTriple;
    case 4: return Pattern::kFull;
    default: break;
  }
  throw Error(ErrorCode::kNonConvexOracleDetected, "no member of the set is active");
}

ActiveSet active_set(const UnimodularSet& set, CutEvaluator& eval) {
  ActiveSet out;
  const auto m = set.members();
  for (int v = 0; v < 4; ++v) {
    // Products already in the memo are tried first; the verdict is the same
    // either way but fewer new products get evaluated.
    bool active = true;
    for (bool memoized : {true, false}) {
      for (int w = 0; w < 4 && active; ++w) {
        if (w == v || eval.has_inner(m[w], m[v] - m[w]) != memoized) continue;
        if (eval.strictly_cuts(m[w], m[v])) active = false;
      }
    }
    out.active[v] = active;
  }
  try {
    out.pattern = classify_pattern(out.active);
  } catch (const Error&) {
    std::ostringstream msg;
    msg << "every member of " << set << " is strictly cut";
    throw Error(ErrorCode::kNonConvexOracleDetected, msg.str());
  }
  return out;
}

namespace {

bool satisfies(const UnimodularSet& cand, const std::array<bool, 4>& act, Pattern pattern,
               CutEvaluator& eval) {
  switch (pattern) {
    case Pattern::kSingle:
    case Pattern::kFull:
      return act[0];
    case Pattern::kAdjacentPair:
      return act[0] && act[1];
    case Pattern::kTriple:
      return act[0] && act[1] && act[2];
    case Pattern::kDiagonalPair:
      return act[0] && act[3] && eval.strictly_cuts(cand.member(0), cand.member(1)) &&
             eval.strictly_cuts(cand.member(3), cand.member(2));
  }
  return false;
}

}  // namespace

Preprocessed preprocess(const UnimodularSet& set, CutEvaluator& eval) {
  const ActiveSet activity = active_set(set, eval);
  for (int anchor = 0; anchor < 4; ++anchor) {
    for (bool swap : {false, true}) {
      UnimodularSet cand = relabel_at(set, anchor, swap);
      std::array<bool, 4> act{};
      for (int i = 0; i < 4; ++i) act[i] = activity.active[set.index_of(cand.member(i))];
      if (!satisfies(cand, act, activity.pattern, eval)) continue;
      if (activity.pattern == Pattern::kDiagonalPair) {
        const UnimodularSet twin = relabel_at(set, anchor, !swap);
        std::array<bool, 4> twin_act{};
        for (int i = 0; i < 4; ++i) twin_act[i] = activity.active[set.index_of(twin.member(i))];
        if (satisfies(twin, twin_act, activity.pattern, eval)) {
          std::ostringstream msg;
          msg << "both diagonal orientations of " << set << " qualify";
          throw Error(ErrorCode::kNonConvexOracleDetected, msg.str());
        }
      }
      return {std::move(cand), ActiveSet{act, activity.pattern}};
    }
  }
  std::ostringstream msg;
  msg << "no relabeling of " << set << " meets the " << pattern_name(activity.pattern)
      << " preprocessing conditions";
  throw Error(ErrorCode::kNonConvexOracleDetected, msg.str());
}

bool is_connected(const ActiveSet& activity) {
  return activity.pattern == Pattern::kAdjacentPair || activity.pattern == Pattern::kTriple ||
         activity.pattern == Pattern::kFull;
}

std::string_view hline_class_name(HLineClass c) {
  switch (c) {
    case HLineClass::kEmpty: return "Empty";
    case HLineClass::kOne: return "One";
    case HLineClass::kTwoPlus: return "TwoPlus";
  }
  return "Unknown";
}

HLineResult h_line(const UnimodularSet& set, CutEvaluator& eval, int side) {
  if (side != 1 && side != -1) throw Error(ErrorCode::kInternalInvariantViolation, "side must be +-1");
  const SignPolicy& policy = eval.policy();
  const LatticePoint& z = set.anchor();
  HLineResult out;
  out.side = side;

  // Member w contributes a k + b < 0 with a = g'u1 and
  // b = g'(z - w) + side g'u2, all products already in the memo.
  std::array<Scalar, 4> a, b;
  bool infeasible = false;
  for (int j = 0; j < 4; ++j) {
    const LatticePoint& w = set.member(j);
    a[j] = eval.inner(w, set.u1());
    b[j] = eval.inner(w, z - w) + Scalar(side) * eval.inner(w, set.u2());
    const int sa = classify_sign(a[j], policy);
    if (sa == 0) {
      if (classify_sign(b[j], policy) >= 0) infeasible = true;
      continue;
    }
    const Rational bound = -as_rational(b[j]) / as_rational(a[j]);
    if (sa > 0) {
      if (!out.hi || bound < *out.hi) out.hi = bound;
    } else {
      if (!out.lo || bound > *out.lo) out.lo = bound;
    }
  }
  if (infeasible) return out;

  auto interior_at = [&](const BigInt& k) {
    const Scalar kk(Rational{k});
    for (int j = 0; j < 4; ++j) {
      if (classify_sign(a[j] * kk + b[j], policy) >= 0) return false;
    }
    return true;
  };

  if (out.lo) out.first = out.lo->floor() + 1;
  if (out.hi) out.last = out.hi->ceil() - 1;
  auto nonempty = [&] { return !out.first || !out.last || *out.first <= *out.last; };
  // Under a tolerance band the integers next to an endpoint may fail the
  // direct test; shrink until both ends pass.
  while (out.first && nonempty() && !interior_at(*out.first)) *out.first += 1;
  while (out.last && nonempty() && !interior_at(*out.last)) *out.last -= 1;
  if (!nonempty()) return out;

  if (out.first && out.last && *out.first == *out.last) {
    out.cls = HLineClass::kOne;
    out.k = *out.first;
    return out;
  }
  out.cls = HLineClass::kTwoPlus;
  if (out.first && *out.first > 0) {
    out.k = *out.first;
  } else if (out.last && *out.last < 0) {
    out.k = *out.last;
  } else {
    out.k = 0;
  }
  return out;
}

}  // namespace latfree
