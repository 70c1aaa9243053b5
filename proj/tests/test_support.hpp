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

// Seeded instance generators and naive reference computations for tests.
// The reference functions work from the definitions directly and avoid the
// library's memoized or pruned paths.

#ifndef LATFREE_TESTS_TEST_SUPPORT_HPP_
#define LATFREE_TESTS_TEST_SUPPORT_HPP_

#include <array>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "latfree/io.hpp"
#include "latfree/lattice.hpp"
#include "latfree/oracle.hpp"

#ifndef LATFREE_FIXTURE_DIR
#define LATFREE_FIXTURE_DIR "tests/fixtures"
#endif

namespace latfree::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

inline Rational random_rational(Rng& rng, bool positive = false) {
  const long num = positive ? rng.uniform(1, 20) : rng.uniform(-20, 20);
  return Rational(BigInt(num), BigInt(rng.uniform(1, 20)));
}

// Entries p/q with |p|, q <= 20; the continuous minimizer is kept within
// `max_minimizer` of the origin so trajectories stay desk-sized.
inline QuadraticModel random_pd_quadratic(Rng& rng, long max_minimizer = 25) {
  for (;;) {
    const Rational a = random_rational(rng, true), d = random_rational(rng, true);
    const Rational b = random_rational(rng);
    if ((a * d - b * b).sign() <= 0) continue;
    QuadraticModel m(Mat2{{{a, b}, {b, d}}}, RationalPoint{random_rational(rng), random_rational(rng)});
    const RationalPoint xs = m.continuous_minimizer();
    if (xs.x.abs() <= Rational(max_minimizer) && xs.y.abs() <= Rational(max_minimizer)) return m;
  }
}

// Basis from a few random elementary column operations; all members lie in
// [-radius, radius]^2.
inline UnimodularSet random_unimodular_set(Rng& rng, long radius = 10) {
  for (;;) {
    LatticePoint u1 = point(1, 0), u2 = point(0, 1);
    const long ops = rng.uniform(0, 4);
    for (long i = 0; i < ops; ++i) {
      const long m = rng.uniform(-3, 3);
      switch (rng.uniform(0, 3)) {
        case 0: u1 = u1 + scale(BigInt(m), u2); break;
        case 1: u2 = u2 + scale(BigInt(m), u1); break;
        case 2: std::swap(u1, u2); break;
        default: u1 = -u1; break;
      }
    }
    const LatticePoint z = point(rng.uniform(-radius, radius), rng.uniform(-radius, radius));
    UnimodularSet s(z, UniMatrix(u1, u2));
    bool inside = true;
    for (const auto& p : s.members()) {
      if (abs(p.x) > radius || abs(p.y) > radius) inside = false;
    }
    if (inside) return s;
  }
}

inline MixedQuadraticModel random_mixed(Rng& rng, int d) {
  for (;;) {
    // A = L L' + I/4 keeps A positive definite.
    RationalMatrix l(d, RationalVector(d, Rational(0)));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j <= i; ++j) l[i][j] = Rational(BigInt(rng.uniform(-4, 4)), BigInt(rng.uniform(1, 4)));
    }
    RationalMatrix a(d, RationalVector(d, Rational(0)));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) a[i][j] += l[i][k] * l[j][k];
      }
      a[i][i] += Rational(1, 4);
    }
    RationalMatrix b(d, RationalVector(2));
    RationalVector av(d);
    for (int i = 0; i < d; ++i) {
      b[i][0] = Rational(BigInt(rng.uniform(-3, 3)), BigInt(rng.uniform(1, 4)));
      b[i][1] = Rational(BigInt(rng.uniform(-3, 3)), BigInt(rng.uniform(1, 4)));
      av[i] = random_rational(rng);
    }
    const QuadraticModel base = random_pd_quadratic(rng);
    // Add B'A^-1 B to the z-block so the reduced matrix is base.Q().
    const RationalMatrix ainv = invert(a);
    Mat2 c = base.Q();
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) {
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) c[r][s] += b[i][r] * ainv[i][j] * b[j][s];
        }
      }
    }
    MixedQuadraticModel m(a, b, c, av, base.c());
    const RationalPoint xs = reduce_mixed(m).reduced.continuous_minimizer();
    if (xs.x.abs() <= Rational(25) && xs.y.abs() <= Rational(25)) return m;
  }
}

// grad f(p) = Qp + c written out independently of QuadraticModel.
inline RationalPoint naive_gradient(const QuadraticModel& m, const LatticePoint& p) {
  const Rational x(p.x), y(p.y);
  return {m.Q()[0][0] * x + m.Q()[0][1] * y + m.c().x, m.Q()[1][0] * x + m.Q()[1][1] * y + m.c().y};
}

inline Rational naive_cut(const QuadraticModel& m, const LatticePoint& w, const LatticePoint& v) {
  const RationalPoint g = naive_gradient(m, w);
  return g.x * Rational(BigInt(v.x - w.x)) + g.y * Rational(BigInt(v.y - w.y));
}

inline std::array<bool, 4> naive_active(const QuadraticModel& m, const UnimodularSet& s) {
  std::array<bool, 4> out{};
  const auto pts = s.members();
  for (int v = 0; v < 4; ++v) {
    out[v] = true;
    for (int w = 0; w < 4; ++w) {
      if (w != v && naive_cut(m, pts[w], pts[v]).sign() > 0) out[v] = false;
    }
  }
  return out;
}

inline bool naive_interior(const QuadraticModel& m, const UnimodularSet& s, const LatticePoint& x) {
  for (const auto& w : s.members()) {
    if (naive_cut(m, w, x).sign() >= 0) return false;
  }
  return true;
}

// min over members of ||U^-1 (x - w)||_1 by Cramer's rule.
inline BigInt naive_r_metric(const UnimodularSet& s, const LatticePoint& x) {
  const BigInt det = s.u1().x * s.u2().y - s.u2().x * s.u1().y;
  BigInt best = -1;
  for (const auto& w : s.members()) {
    const LatticePoint d = x - w;
    const BigInt r1 = (d.x * s.u2().y - s.u2().x * d.y) / det;
    const BigInt r2 = (s.u1().x * d.y - d.x * s.u1().y) / det;
    const BigInt n = abs(r1) + abs(r2);
    if (best < 0 || n < best) best = n;
  }
  return best;
}

inline std::vector<long> naive_hline(const QuadraticModel& m, const UnimodularSet& s, int side,
                                     long span = 300) {
  std::vector<long> out;
  for (long k = -span; k <= span; ++k) {
    const LatticePoint x = s.anchor() + scale(BigInt(k), s.u1()) + (side > 0 ? s.u2() : -s.u2());
    if (naive_interior(m, s, x)) out.push_back(k);
  }
  return out;
}

inline Json load_fixture(const std::string& name) {
  std::ifstream in(std::string(LATFREE_FIXTURE_DIR) + "/" + name);
  return Json::parse(in);
}

inline QuadraticModel model_from_fixture(const Json& objective) {
  Json doc = {{"objective", objective}};
  doc["objective"]["type"] = "quadratic";
  return *parse_problem(doc).quadratic;
}

inline QuadraticModel ellipse_model() {
  return QuadraticModel(Mat2{{{6, 0}, {0, 2}}}, RationalPoint{1, 1});
}

// (x1 - 5/2)^2 + (x2 - 1/2)^2 without its constant.
inline QuadraticModel shifted_circle_model() {
  return QuadraticModel(Mat2{{{2, 0}, {0, 2}}}, RationalPoint{-5, -1});
}

}  // namespace latfree::testing

#endif  // LATFREE_TESTS_TEST_SUPPORT_HPP_
