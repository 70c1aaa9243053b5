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

#include "latfree/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace latfree {

std::string to_string(const LatticePoint& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << to_string(p); }

UniMatrix UniMatrix::inverse() const {
  const BigInt d = det();
  if (abs(d) != 1) throw Error(ErrorCode::kNotUnimodular, "determinant is " + to_string(d));
  // inv = (1/d) [[u2.y, -u2.x], [-u1.y, u1.x]]; columns below.
  return {LatticePoint{d * u2_.y, -d * u1_.y}, LatticePoint{-d * u2_.x, d * u1_.x}};
}

UnimodularSet::UnimodularSet(LatticePoint anchor, UniMatrix basis)
    : anchor_(std::move(anchor)), basis_(std::move(basis)) {
  if (!basis_.is_unimodular()) {
    throw Error(ErrorCode::kNotUnimodular, "basis determinant is " + to_string(basis_.det()));
  }
  members_ = {anchor_, anchor_ + basis_.u1(), anchor_ + basis_.u2(),
              anchor_ + basis_.u1() + basis_.u2()};
}

std::array<LatticePoint, 4> UnimodularSet::members() const { return members_; }

const LatticePoint& UnimodularSet::member(int index) const { return members_.at(index); }

int UnimodularSet::index_of(const LatticePoint& p) const {
  for (int i = 0; i < 4; ++i) {
    if (members_[i] == p) return i;
  }
  return -1;
}

bool UnimodularSet::same_members(const UnimodularSet& other) const {
  return std::all_of(other.members_.begin(), other.members_.end(),
                     [this](const LatticePoint& p) { return contains(p); });
}

std::ostream& operator<<(std::ostream& os, const UnimodularSet& set) {
  os << "{z=" << set.anchor() << ", u1=" << set.u1() << ", u2=" << set.u2() << "}";
  return os;
}

OrthantLabel orthant_of(const UnimodularSet& set, const LatticePoint& x) {
  const LatticePoint r = set.basis().inverse().apply(x - set.anchor());
  // Integer coordinates never sit strictly between 0 and 1, so each component
  // is either <= 0 (low corner) or >= 1 (high corner).
  const int e1 = r.x >= 1 ? 1 : 0;
  const int e2 = r.y >= 1 ? 1 : 0;
  OrthantLabel label;
  label.index = e1 + 2 * e2;
  label.corner = set.member(label.index);
  label.offset = LatticePoint{r.x - e1, r.y - e2};
  return label;
}

BigInt r_metric(const UnimodularSet& set, const LatticePoint& x) {
  const OrthantLabel label = orthant_of(set, x);
  return abs(label.offset.x) + abs(label.offset.y);
}

UnimodularSet relabel(const UnimodularSet& set, int new_anchor_index, bool negate1, bool negate2,
                      bool swap) {
  if (new_anchor_index < 0 || new_anchor_index > 3) {
    throw Error(ErrorCode::kInvalidRelabel, "anchor index out of range");
  }
  LatticePoint b1 = negate1 ? -set.u1() : set.u1();
  LatticePoint b2 = negate2 ? -set.u2() : set.u2();
  if (swap) std::swap(b1, b2);
  UnimodularSet out(set.member(new_anchor_index), UniMatrix(b1, b2));
  if (!out.same_members(set)) {
    std::ostringstream msg;
    msg << "relabeling " << set << " to " << out << " changes the member set";
    throw Error(ErrorCode::kInvalidRelabel, msg.str());
  }
  return out;
}

UnimodularSet relabel_at(const UnimodularSet& set, int anchor_index, bool swap) {
  return relabel(set, anchor_index, (anchor_index & 1) != 0, (anchor_index & 2) != 0, swap);
}

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::kBoxTooSmall, "coordinate exceeds 64-bit range");
  return v.get_si();
}

}  // namespace

IntegerBox IntegerBox::around(const LatticePoint& center, std::int64_t radius) {
  const std::int64_t x = to_int64(center.x), y = to_int64(center.y);
  return {x - radius, y - radius, x + radius, y + radius};
}

IntegerBox IntegerBox::around(const UnimodularSet& set, std::int64_t radius) {
  IntegerBox box = around(set.member(0), 0);
  for (const auto& m : set.members()) box = box.hull(m);
  box.lower_x -= radius;
  box.lower_y -= radius;
  box.upper_x += radius;
  box.upper_y += radius;
  return box;
}

IntegerBox IntegerBox::covering(const LatticePoint& a, const LatticePoint& b) {
  return around(a, 0).hull(b);
}

bool IntegerBox::contains(const LatticePoint& p) const {
  return p.x >= lower_x && p.x <= upper_x && p.y >= lower_y && p.y <= upper_y;
}

IntegerBox IntegerBox::hull(const IntegerBox& o) const {
  return {std::min(lower_x, o.lower_x), std::min(lower_y, o.lower_y),
          std::max(upper_x, o.upper_x), std::max(upper_y, o.upper_y)};
}

IntegerBox IntegerBox::hull(const LatticePoint& p) const { return hull(around(p, 0)); }

std::array<LatticePoint, 4> IntegerBox::corners() const {
  return {point(lower_x, lower_y), point(upper_x, lower_y), point(lower_x, upper_y),
          point(upper_x, upper_y)};
}

}  // namespace latfree
