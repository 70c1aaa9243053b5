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

// Independent checks: exhaustive integer minimization, box-bounded
// lattice-freeness, monotonicity of the two progress measures and the
// first-containment bound for identity-basis starts.

#ifndef LATFREE_VERIFICATION_HPP_
#define LATFREE_VERIFICATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "latfree/gp_geometry.hpp"
#include "latfree/lattice.hpp"
#include "latfree/oracle.hpp"

namespace latfree {

struct OptimumSet {
  Rational value;
  std::vector<LatticePoint> points;  // sorted

  bool contains(const LatticePoint& p) const;
  bool intersects(const UnimodularSet& set) const;
};

// Exact minimization over the box. Throws kBoxTooSmall unless the sublevel
// set of the best boxed value lies inside the box, so the result is global.
OptimumSet brute_force_optimum(const QuadraticModel& model, const IntegerBox& box);
// Plain exhaustive scan for other exact oracles; only box-optimal.
OptimumSet brute_force_optimum(const GradientOracle& oracle, const IntegerBox& box);

// A box that passes the margin rule of brute_force_optimum.
IntegerBox sufficient_box(const QuadraticModel& model);

struct LatticeFreeReport {
  bool pass = true;
  std::vector<LatticePoint> witnesses;  // first few, sorted
  long long points_checked = 0;
};

LatticeFreeReport check_lattice_free(const GpSystem& gp, const UnimodularSet& set,
                                     const IntegerBox& box, std::size_t max_witnesses = 8);

struct MonotoneReport {
  bool pass = true;
  int step = -1;  // offending index into the set sequence
  std::string reason;
};

// sets[i] is the set before flip i; the last entry is the terminal set.
MonotoneReport check_monotone_measures(const QuadraticModel& model,
                                       const std::vector<UnimodularSet>& sets,
                                       const OptimumSet& optima);

// min over optima of r_metric(set, z*).
BigInt r_measure(const UnimodularSet& set, const OptimumSet& optima);
Rational f_measure(const QuadraticModel& model, const UnimodularSet& set);

struct PropositionReport {
  int first_containment = -1;  // -1 if no set contains an optimum
  BigInt r0;
  double bound = 0.0;
  bool pass = false;
};

// `initial` is the set as given to the solver; throws kNotApplicable unless
// its basis is the identity. `sets` is the trajectory.
PropositionReport check_proposition_bound(const UnimodularSet& initial,
                                          const std::vector<UnimodularSet>& sets,
                                          const OptimumSet& optima,
                                          const StrongConvexityData& sc);

// Smallest box holding every member of every set and every optimum.
IntegerBox trajectory_region(const std::vector<UnimodularSet>& sets, const OptimumSet& optima);

}  // namespace latfree

#endif  // LATFREE_VERIFICATION_HPP_
