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

// Integer points in the plane, unimodular bases and four-point unimodular
// sets {z + U e : e in {0,1}^2}.

#ifndef LATFREE_LATTICE_HPP_
#define LATFREE_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "latfree/numerics.hpp"

namespace latfree {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Vec2& a, const Vec2& b) {
    if (a.x < b.x) return true;
    if (b.x < a.x) return false;
    return a.y < b.y;
  }
};

using LatticePoint = Vec2<BigInt>;
using RationalPoint = Vec2<Rational>;

inline LatticePoint point(long x, long y) { return {BigInt(x), BigInt(y)}; }
inline LatticePoint scale(const BigInt& k, const LatticePoint& v) { return {k * v.x, k * v.y}; }
inline RationalPoint to_rational(const LatticePoint& p) { return {Rational(p.x), Rational(p.y)}; }

std::string to_string(const LatticePoint& p);
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

// Integer 2x2 matrix stored by columns (u1, u2). Need not be unimodular;
// UnimodularSet is where that is enforced.
class UniMatrix {
 public:
  UniMatrix() : u1_(point(1, 0)), u2_(point(0, 1)) {}
  UniMatrix(LatticePoint u1, LatticePoint u2) : u1_(std::move(u1)), u2_(std::move(u2)) {}

  static UniMatrix identity() { return {}; }

  const LatticePoint& u1() const { return u1_; }
  const LatticePoint& u2() const { return u2_; }

  BigInt det() const { return u1_.x * u2_.y - u2_.x * u1_.y; }
  bool is_unimodular() const { return abs(det()) == 1; }

  // Integer inverse; throws kNotUnimodular when |det| != 1.
  UniMatrix inverse() const;

  LatticePoint apply(const LatticePoint& r) const {
    return {u1_.x * r.x + u2_.x * r.y, u1_.y * r.x + u2_.y * r.y};
  }
  UniMatrix operator*(const UniMatrix& o) const { return {apply(o.u1_), apply(o.u2_)}; }

  friend bool operator==(const UniMatrix& a, const UniMatrix& b) {
    return a.u1_ == b.u1_ && a.u2_ == b.u2_;
  }

 private:
  LatticePoint u1_;
  LatticePoint u2_;
};

// Canonical member order: anchor, anchor+u1, anchor+u2, anchor+u1+u2. Member
// index i corresponds to e = (i & 1, i >> 1).
class UnimodularSet {
 public:
  // Unit square at the origin.
  UnimodularSet() : UnimodularSet(point(0, 0), UniMatrix()) {}
  // Throws kNotUnimodular unless |det(basis)| == 1.
  UnimodularSet(LatticePoint anchor, UniMatrix basis);

  const LatticePoint& anchor() const { return anchor_; }
  const UniMatrix& basis() const { return basis_; }
  const LatticePoint& u1() const { return basis_.u1(); }
  const LatticePoint& u2() const { return basis_.u2(); }

  std::array<LatticePoint, 4> members() const;
  const LatticePoint& member(int index) const;
  // Index of p in members(), or -1.
  int index_of(const LatticePoint& p) const;
  bool contains(const LatticePoint& p) const { return index_of(p) >= 0; }
  // Same four points irrespective of labeling.
  bool same_members(const UnimodularSet& other) const;

  friend bool operator==(const UnimodularSet& a, const UnimodularSet& b) {
    return a.anchor_ == b.anchor_ && a.basis_ == b.basis_;
  }

 private:
  LatticePoint anchor_;
  UniMatrix basis_;
  std::array<LatticePoint, 4> members_;
};

std::ostream& operator<<(std::ostream& os, const UnimodularSet& set);

struct OrthantLabel {
  int index = 0;  // member index of the corner
  LatticePoint corner;
  LatticePoint offset;  // U^-1 (x - corner)
};

// The unique corner w with x in the orthant of w.
OrthantLabel orthant_of(const UnimodularSet& set, const LatticePoint& x);

// min over members w of ||U^-1 (x - w)||_1.
BigInt r_metric(const UnimodularSet& set, const LatticePoint& x);

// Re-anchors at member new_anchor_index, optionally negating u1/u2 and then
// swapping them. Throws kInvalidRelabel if the member set would change.
UnimodularSet relabel(const UnimodularSet& set, int new_anchor_index, bool negate1,
                      bool negate2, bool swap);

// The relabeling anchored at member `anchor_index` whose basis points into
// the set, with u1/u2 swapped when `swap` is set.
UnimodularSet relabel_at(const UnimodularSet& set, int anchor_index, bool swap);

// Closed integer box [lower, upper].
struct IntegerBox {
  std::int64_t lower_x = 0, lower_y = 0, upper_x = 0, upper_y = 0;

  static IntegerBox around(const LatticePoint& center, std::int64_t radius);
  static IntegerBox around(const UnimodularSet& set, std::int64_t radius);
  static IntegerBox covering(const LatticePoint& a, const LatticePoint& b);

  bool valid() const { return lower_x <= upper_x && lower_y <= upper_y; }
  bool contains(const LatticePoint& p) const;
  IntegerBox hull(const IntegerBox& o) const;
  IntegerBox hull(const LatticePoint& p) const;
  std::array<LatticePoint, 4> corners() const;
};

}  // namespace latfree

#endif  // LATFREE_LATTICE_HPP_
