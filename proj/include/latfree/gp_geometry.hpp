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

// Cut relations, gradient polyhedra, active sets, preprocessing and the
// integer points of the two lines z + k u1 +- u2 inside the polyhedron.

#ifndef LATFREE_GP_GEOMETRY_HPP_
#define LATFREE_GP_GEOMETRY_HPP_

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "latfree/lattice.hpp"
#include "latfree/numerics.hpp"
#include "latfree/oracle.hpp"

namespace latfree {

// Evaluates inner products grad f(w)'d through a memo. Gradients are cached
// for the evaluator's lifetime; inner products are cached per iteration and
// keyed by (w, +-d), so a product and its negation count once. Products along
// other directions are derived by linearity where the caller can.
class CutEvaluator {
 public:
  CutEvaluator(const GradientOracle& oracle, SignPolicy policy);

  const GradientOracle& oracle() const { return oracle_; }
  const SignPolicy& policy() const { return policy_; }

  const ScalarPoint& gradient(const LatticePoint& w);
  const Scalar& value(const LatticePoint& w);
  bool is_zero_gradient(const LatticePoint& w);

  // grad f(w)' d; d == 0 yields 0 without counting.
  Scalar inner(const LatticePoint& w, const LatticePoint& d);
  bool has_inner(const LatticePoint& w, const LatticePoint& d) const;
  // Sign of grad f(w)'(v - w) under the policy.
  int cut_sign(const LatticePoint& w, const LatticePoint& v);
  bool cuts(const LatticePoint& w, const LatticePoint& v) { return cut_sign(w, v) >= 0; }
  bool strictly_cuts(const LatticePoint& w, const LatticePoint& v) { return cut_sign(w, v) > 0; }

  // Starts a new accounting window for inner products.
  void begin_iteration();
  int inner_products() const { return static_cast<int>(inner_memo_.size()); }

 private:
  const GradientOracle& oracle_;
  SignPolicy policy_;
  std::map<LatticePoint, ScalarPoint> gradients_;
  std::map<LatticePoint, Scalar> values_;
  std::map<std::pair<LatticePoint, LatticePoint>, Scalar> inner_memo_;
};

// Convenience form without memoization.
bool strictly_cuts(const GradientOracle& oracle, const SignPolicy& policy, const LatticePoint& w,
                   const LatticePoint& v);

struct Halfspace {
  LatticePoint base;
  ScalarPoint normal;
};

// { x : normal'(x - base) <= 0 for every halfspace }.
class GpSystem {
 public:
  GpSystem() : policy_(SignPolicy::exact()) {}
  GpSystem(std::vector<Halfspace> halfspaces, SignPolicy policy)
      : halfspaces_(std::move(halfspaces)), policy_(policy) {}

  static GpSystem of(const UnimodularSet& set, CutEvaluator& eval);

  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const SignPolicy& policy() const { return policy_; }

  bool contains(const RationalPoint& x) const;
  bool interior(const RationalPoint& x) const;
  bool contains(const LatticePoint& x) const { return contains(to_rational(x)); }
  bool interior(const LatticePoint& x) const { return interior(to_rational(x)); }
  bool has_zero_normal() const;

 private:
  std::vector<Halfspace> halfspaces_;
  SignPolicy policy_;
};

enum class Pattern { kSingle, kAdjacentPair, kDiagonalPair, kTriple, kFull };

std::string_view pattern_name(Pattern p);

struct ActiveSet {
  std::array<bool, 4> active{};  // by canonical member index
  Pattern pattern = Pattern::kSingle;

  int count() const;
  bool is_active(int index) const { return active.at(index); }
};

// Throws kNonConvexOracleDetected if no member is active.
ActiveSet active_set(const UnimodularSet& set, CutEvaluator& eval);
Pattern classify_pattern(const std::array<bool, 4>& active);

struct Preprocessed {
  UnimodularSet set;
  ActiveSet activity;
};

// Relabels so the anchor is active and an active pair or triple sits at the
// canonical positions (see README). Idempotent on its own output.
Preprocessed preprocess(const UnimodularSet& set, CutEvaluator& eval);

bool is_connected(const ActiveSet& activity);

enum class HLineClass { kEmpty, kOne, kTwoPlus };

std::string_view hline_class_name(HLineClass c);

struct HLineResult {
  int side = 1;
  // Open interval (lo, hi) in k; nullopt means unbounded.
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  // First and last admissible integer k; nullopt means unbounded.
  std::optional<BigInt> first;
  std::optional<BigInt> last;
  HLineClass cls = HLineClass::kEmpty;
  BigInt k;  // the unique or minimal-|k| integer; meaningless when empty

  bool empty() const { return cls == HLineClass::kEmpty; }
};

// Integer points of { z + k u1 + side u2 } strictly inside GP(set).
HLineResult h_line(const UnimodularSet& set, CutEvaluator& eval, int side);

}  // namespace latfree

#endif  // LATFREE_GP_GEOMETRY_HPP_
