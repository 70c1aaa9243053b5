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

#include "latfree/verification.hpp"

#include <algorithm>
#include <cmath>

namespace latfree {

bool OptimumSet::contains(const LatticePoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

bool OptimumSet::intersects(const UnimodularSet& set) const {
  for (const auto& m : set.members()) {
    if (contains(m)) return true;
  }
  return false;
}

namespace {

struct Scan {
  Rational best;
  std::vector<LatticePoint> points;

  void offer(const LatticePoint& p, const Rational& v) {
    if (points.empty() || v < best) {
      best = v;
      points.assign(1, p);
    } else if (v == best) {
      points.push_back(p);
    }
  }
};

BigInt clamp(const BigInt& v, std::int64_t lo, std::int64_t hi) {
  if (v < lo) return BigInt(lo);
  if (v > hi) return BigInt(hi);
  return v;
}

BigInt round_half_up(const Rational& r) { return (r + Rational(1, 2)).floor(); }

Rational inverse_diag(const QuadraticModel& model, int j) {
  const Mat2& q = model.Q();
  const Rational det = q[0][0] * q[1][1] - q[0][1] * q[1][0];
  return (j == 0 ? q[1][1] : q[0][0]) / det;
}

}  // namespace

OptimumSet brute_force_optimum(const QuadraticModel& model, const IntegerBox& box) {
  if (!box.valid()) throw Error(ErrorCode::kBoxTooSmall, "empty box");
  const RationalPoint xs = model.continuous_minimizer();
  Scan scan;
  const LatticePoint seed{clamp(round_half_up(xs.x), box.lower_x, box.upper_x),
                          clamp(round_half_up(xs.y), box.lower_y, box.upper_y)};
  scan.offer(seed, model.exact_value(seed));

  // f is convex along each column, so walking away from the column minimizer
  // can stop at the first value above the incumbent.
  const Rational& q11 = model.Q()[1][1];
  for (std::int64_t x = box.lower_x; x <= box.upper_x; ++x) {
    const Rational ystar = -(model.Q()[0][1] * Rational(x) + model.c().y) / q11;
    const BigInt up_start = ystar.ceil();
    for (BigInt y = up_start < box.lower_y ? BigInt(box.lower_y) : up_start; y <= box.upper_y;
         ++y) {
      const LatticePoint p{BigInt(x), y};
      const Rational v = model.exact_value(p);
      if (v > scan.best) break;
      scan.offer(p, v);
    }
    const BigInt down_start = up_start - 1;
    for (BigInt y = down_start > box.upper_y ? BigInt(box.upper_y) : down_start;
         y >= box.lower_y; --y) {
      const LatticePoint p{BigInt(x), y};
      const Rational v = model.exact_value(p);
      if (v > scan.best) break;
      scan.offer(p, v);
    }
  }

  // Along x_j = t the minimum of f is f* + (t - x*_j)^2 / (2 (Q^-1)_jj); the
  // lines just outside the box must stay strictly above the best value.
  const Rational gap = scan.best - model.exact_value(xs);
  const std::int64_t lows[2] = {box.lower_x, box.lower_y};
  const std::int64_t highs[2] = {box.upper_x, box.upper_y};
  const Rational centers[2] = {xs.x, xs.y};
  for (int j = 0; j < 2; ++j) {
    const Rational reach = Rational(2) * gap * inverse_diag(model, j);
    const Rational below = Rational(lows[j] - 1) - centers[j];
    const Rational above = Rational(highs[j] + 1) - centers[j];
    if (below.sign() >= 0 || below * below <= reach || above.sign() <= 0 ||
        above * above <= reach) {
      throw Error(ErrorCode::kBoxTooSmall,
                  "sublevel set of the best boxed value leaves the box along axis " +
                      std::to_string(j));
    }
  }
  std::sort(scan.points.begin(), scan.points.end());
  scan.points.erase(std::unique(scan.points.begin(), scan.points.end()), scan.points.end());
  return {scan.best, std::move(scan.points)};
}

OptimumSet brute_force_optimum(const GradientOracle& oracle, const IntegerBox& box) {
  if (const auto* q = dynamic_cast<const QuadraticModel*>(&oracle)) {
    return brute_force_optimum(*q, box);
  }
  if (!box.valid()) throw Error(ErrorCode::kBoxTooSmall, "empty box");
  Scan scan;
  for (std::int64_t x = box.lower_x; x <= box.upper_x; ++x) {
    for (std::int64_t y = box.lower_y; y <= box.upper_y; ++y) {
      const LatticePoint p = point(x, y);
      scan.offer(p, oracle.value(p).exact());
    }
  }
  return {scan.best, std::move(scan.points)};
}

IntegerBox sufficient_box(const QuadraticModel& model) {
  const RationalPoint xs = model.continuous_minimizer();
  const LatticePoint seed{round_half_up(xs.x), round_half_up(xs.y)};
  const Rational gap = model.exact_value(seed) - model.exact_value(xs);
  IntegerBox box;
  const Rational centers[2] = {xs.x, xs.y};
  std::int64_t lo[2], hi[2];
  for (int j = 0; j < 2; ++j) {
    const double r = std::sqrt((Rational(2) * gap * inverse_diag(model, j)).to_double());
    lo[j] = static_cast<std::int64_t>(std::floor(centers[j].to_double() - r)) - 2;
    hi[j] = static_cast<std::int64_t>(std::ceil(centers[j].to_double() + r)) + 2;
  }
  box.lower_x = lo[0];
  box.lower_y = lo[1];
  box.upper_x = hi[0];
  box.upper_y = hi[1];
  return box;
}

LatticeFreeReport check_lattice_free(const GpSystem& gp, const UnimodularSet& set,
                                     const IntegerBox& box, std::size_t max_witnesses) {
  IntegerBox scan_box = box;
  for (const auto& m : set.members()) scan_box = scan_box.hull(m);
  LatticeFreeReport report;
  for (std::int64_t x = scan_box.lower_x; x <= scan_box.upper_x; ++x) {
    for (std::int64_t y = scan_box.lower_y; y <= scan_box.upper_y; ++y) {
      ++report.points_checked;
      const LatticePoint p = point(x, y);
      if (!gp.interior(p)) continue;
      report.pass = false;
      if (report.witnesses.size() < max_witnesses) report.witnesses.push_back(p);
    }
  }
  return report;
}

Rational f_measure(const QuadraticModel& model, const UnimodularSet& set) {
  Rational best = model.exact_value(set.member(0));
  for (int i = 1; i < 4; ++i) best = std::min(best, model.exact_value(set.member(i)));
  return best;
}

BigInt r_measure(const UnimodularSet& set, const OptimumSet& optima) {
  if (optima.points.empty()) throw Error(ErrorCode::kNotApplicable, "empty optimum set");
  BigInt best = r_metric(set, optima.points.front());
  for (const auto& p : optima.points) {
    const BigInt r = r_metric(set, p);
    if (r < best) best = r;
  }
  return best;
}

MonotoneReport check_monotone_measures(const QuadraticModel& model,
                                       const std::vector<UnimodularSet>& sets,
                                       const OptimumSet& optima) {
  MonotoneReport report;
  const std::size_t n = sets.size();
  std::vector<Rational> f(n);
  std::vector<BigInt> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = f_measure(model, sets[i]);
    r[i] = r_measure(sets[i], optima);
  }
  auto fail = [&](std::size_t step, std::string reason) {
    report.pass = false;
    report.step = static_cast<int>(step);
    report.reason = std::move(reason);
    return report;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (f[i + 1] > f[i]) {
      return fail(i + 1, "f-measure rose from " + f[i].to_string() + " to " +
                             f[i + 1].to_string());
    }
    if (r[i + 1] > r[i]) {
      return fail(i + 1, "r-measure rose from " + to_string(r[i]) + " to " + to_string(r[i + 1]));
    }
    for (const auto& m : sets[i].members()) {
      if (optima.contains(m) && !sets[i + 1].contains(m)) {
        return fail(i + 1, "optimum " + to_string(m) + " left the set");
      }
    }
  }
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (f[i + 1] != f[i] || r[i + 1] != r[i] || optima.intersects(sets[i])) continue;
    if (f[i + 2] < f[i + 1] || r[i + 2] < r[i + 1]) continue;
    return fail(i + 2, "neither measure decreased over two flips");
  }
  return report;
}

IntegerBox trajectory_region(const std::vector<UnimodularSet>& sets, const OptimumSet& optima) {
  IntegerBox box = IntegerBox::around(sets.front().anchor(), 0);
  for (const auto& s : sets) {
    for (const auto& m : s.members()) box = box.hull(m);
  }
  for (const auto& p : optima.points) box = box.hull(p);
  return box;
}

PropositionReport check_proposition_bound(const UnimodularSet& initial,
                                          const std::vector<UnimodularSet>& sets,
                                          const OptimumSet& optima,
                                          const StrongConvexityData& sc) {
  if (!(initial.basis() == UniMatrix::identity())) {
    throw Error(ErrorCode::kNotApplicable, "initial basis is not the identity");
  }
  PropositionReport report;
  report.r0 = r_measure(initial, optima);
  report.bound =
      (6.0 * sc.l_estimate / sc.c_modulus.to_double() + 2.0) * report.r0.get_d();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (optima.intersects(sets[i])) {
      report.first_containment = static_cast<int>(i);
      break;
    }
  }
  report.pass = report.first_containment >= 0 &&
                static_cast<double>(report.first_containment) <= report.bound;
  return report;
}

}  // namespace latfree
