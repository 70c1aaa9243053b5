# Copyright 2026 The latfree Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent reference computations, frozen into tests/fixtures/derived.json.

Written from the definitions only (fractions, exhaustive scans), sharing no
code with the C++ library. Rerun with a fixed seed to regenerate.
"""

import argparse
import itertools
import json
import math
import random
from fractions import Fraction as F


def rat(rng, lo=-20, hi=20, positive=False):
    num = rng.randint(1 if positive else lo, hi)
    return F(num, rng.randint(1, 20))


def text(q):
    q = F(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Quad:
    def __init__(self, q, c):
        self.q, self.c = q, c

    def grad(self, p):
        (a, b), (_, d) = self.q
        return (a * p[0] + b * p[1] + self.c[0], b * p[0] + d * p[1] + self.c[1])

    def f(self, p):
        (a, b), (_, d) = self.q
        x, y = p
        return F(1, 2) * (a * x * x + 2 * b * x * y + d * y * y) + self.c[0] * x + self.c[1] * y

    def minimizer(self):
        (a, b), (_, d) = self.q
        det = a * d - b * b
        return (-(d * self.c[0] - b * self.c[1]) / det, -(-b * self.c[0] + a * self.c[1]) / det)

    def doc(self):
        return {"Q": [[text(v) for v in row] for row in self.q], "c": [text(v) for v in self.c]}


def random_quad(rng, max_minimizer=25):
    while True:
        a, d = rat(rng, positive=True), rat(rng, positive=True)
        b = rat(rng)
        if a * d - b * b <= 0:
            continue
        m = Quad(((a, b), (b, d)), (rat(rng), rat(rng)))
        if all(abs(v) <= max_minimizer for v in m.minimizer()):
            return m


def add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def neg(p):
    return (-p[0], -p[1])


def members(z, u1, u2):
    return [z, add(z, u1), add(z, u2), add(add(z, u1), u2)]


def random_set(rng, radius=10):
    while True:
        u1, u2 = (1, 0), (0, 1)
        for _ in range(rng.randint(0, 4)):
            op = rng.randint(0, 3)
            m = rng.randint(-3, 3)
            if op == 0:
                u1 = (u1[0] + m * u2[0], u1[1] + m * u2[1])
            elif op == 1:
                u2 = (u2[0] + m * u1[0], u2[1] + m * u1[1])
            elif op == 2:
                u1, u2 = u2, u1
            else:
                u1 = neg(u1)
        z = (rng.randint(-radius, radius), rng.randint(-radius, radius))
        if all(abs(c) <= radius for p in members(z, u1, u2) for c in p):
            return z, u1, u2


def dot(g, d):
    return g[0] * d[0] + g[1] * d[1]


def strictly_cuts(m, w, v):
    return dot(m.grad(w), sub(v, w)) > 0


def active(m, pts):
    return [all(not strictly_cuts(m, w, v) for w in pts if w != v) for v in pts]


def pattern(act):
    idx = [i for i, a in enumerate(act) if a]
    if len(idx) == 1:
        return "Single"
    if len(idx) == 2:
        return "DiagonalPair" if idx[0] ^ idx[1] == 3 else "AdjacentPair"
    return {3: "Triple", 4: "Full"}[len(idx)]


def relabelings(z, u1, u2):
    pts = members(z, u1, u2)
    for anchor in range(4):
        b1 = neg(u1) if anchor & 1 else u1
        b2 = neg(u2) if anchor & 2 else u2
        for swap in (False, True):
            yield (pts[anchor],) + ((b2, b1) if swap else (b1, b2))


def preprocess(m, z, u1, u2):
    """First relabeling (anchor order, then swap) meeting the conditions."""
    pts = members(z, u1, u2)
    act = active(m, pts)
    pat = pattern(act)
    on = {p for p, a in zip(pts, act) if a}
    valid = []
    for cand in relabelings(z, u1, u2):
        c = members(*cand)
        ca = [p in on for p in c]
        ok = {
            "Single": ca[0],
            "Full": ca[0],
            "AdjacentPair": ca[0] and ca[1],
            "Triple": ca[0] and ca[1] and ca[2],
            "DiagonalPair": ca[0] and ca[3] and strictly_cuts(m, c[0], c[1])
            and strictly_cuts(m, c[3], c[2]),
        }[pat]
        if ok:
            valid.append(cand)
    return pat, valid


def hline(m, z, u1, u2, side, span=400):
    pts = members(z, u1, u2)
    out = []
    for k in range(-span, span + 1):
        x = add(add(z, (k * u1[0], k * u1[1])), (side * u2[0], side * u2[1]))
        if all(dot(m.grad(w), sub(x, w)) < 0 for w in pts):
            out.append(k)
    return out


def connected(m, pts):
    return pattern(active(m, pts)) in ("AdjacentPair", "Triple", "Full")


def case2(m, z, u1, u2):
    d = add(add(z, u1), u2)
    e = add(d, u1)
    f = sub(z, u1)
    prime = members(z, u1, add(u1, u2))
    pa = active(m, prime)
    if connected(m, prime):
        return "Case2_Uprime", "connected", (z, u1, add(u1, u2))
    if pa == [False, False, False, True]:
        return "Case2_Uprime", "singleton", (z, u1, add(u1, u2))
    if strictly_cuts(m, d, f) and strictly_cuts(m, f, z):
        return "Case2_Uprime", "chain", (z, u1, add(u1, u2))
    dprime = members(z, neg(u1), add(u1, u2))
    da = active(m, dprime)
    if connected(m, dprime):
        return "Case2_Udoubleprime", "connected", (z, neg(u1), add(u1, u2))
    if da == [False, True, False, False]:
        return "Case2_Udoubleprime", "singleton", (z, neg(u1), add(u1, u2))
    if strictly_cuts(m, z, e) and strictly_cuts(m, e, d):
        return "Case2_Udoubleprime", "chain", (z, neg(u1), add(u1, u2))
    return "Case2_Reflect", "reflect", (z, neg(u1), add(add(u1, u1), u2))


def brute_min(m, extra=3):
    xs = m.minimizer()
    seed = (math.floor(xs[0] + F(1, 2)), math.floor(xs[1] + F(1, 2)))
    gap = m.f(seed) - m.f(xs)
    (a, b), (_, d) = m.q
    det = a * d - b * b
    rx = math.sqrt(2 * gap * d / det)
    ry = math.sqrt(2 * gap * a / det)
    best, pts = None, []
    for x in range(math.floor(xs[0] - rx) - extra, math.ceil(xs[0] + rx) + extra + 1):
        for y in range(math.floor(xs[1] - ry) - extra, math.ceil(xs[1] + ry) + extra + 1):
            v = m.f((x, y))
            if best is None or v < best:
                best, pts = v, [(x, y)]
            elif v == best:
                pts.append((x, y))
    return best, sorted(pts)


def set_doc(s):
    z, u1, u2 = s
    return {"z": list(z), "U": [list(u1), list(u2)]}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20260101)
    ap.add_argument("--out", default="tests/fixtures/derived.json")
    ap.add_argument("--trials", type=int, default=400000)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    wanted_case2 = {
        ("Case2_Uprime", "connected"), ("Case2_Uprime", "singleton"), ("Case2_Uprime", "chain"),
        ("Case2_Udoubleprime", "connected"), ("Case2_Udoubleprime", "singleton"),
        ("Case2_Udoubleprime", "chain"), ("Case2_Reflect", "reflect"),
    }
    diagonal, case2_found, triples = [], {}, []
    for _ in range(args.trials):
        m = random_quad(rng)
        s = random_set(rng)
        pat, valid = preprocess(m, *s)
        if pat == "DiagonalPair":
            assert len(valid) == 2, "diagonal orientation must be unique up to the twin anchor"
            if len(diagonal) < 5:
                diagonal.append({"objective": m.doc(), "set": set_doc(s),
                                 "valid": [set_doc(v) for v in valid]})
            branch, why, out = case2(m, *valid[0])
            key = (branch, why)
            if key in wanted_case2 and key not in case2_found:
                case2_found[key] = {"objective": m.doc(), "set": set_doc(valid[0]),
                                    "branch": branch, "reason": why,
                                    "members": sorted(list(p) for p in members(*out))}
        elif pat == "Triple" and len(triples) < 5:
            z, u1, u2 = valid[0]
            hp, hm = hline(m, z, u1, u2, 1), hline(m, z, u1, u2, -1)
            if hp or hm:
                triples.append({"objective": m.doc(), "set": set_doc(valid[0]),
                                "h_plus": hp, "h_minus": hm})
        if len(case2_found) == len(wanted_case2) and len(diagonal) >= 5 and len(triples) >= 5:
            break

    optima = []
    for _ in range(30):
        m = random_quad(rng)
        s = random_set(rng)
        value, pts = brute_min(m)
        optima.append({"objective": m.doc(), "initial": set_doc(s), "value": text(value),
                       "points": [list(p) for p in pts]})

    doc = {
        "seed": args.seed,
        "diagonal": diagonal,
        "case2": sorted(case2_found.values(), key=lambda e: (e["branch"], e["reason"])),
        "case5": triples,
        "optima": optima,
    }
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    print(f"diagonal={len(diagonal)} case2={sorted(case2_found)} case5={len(triples)}")


if __name__ == "__main__":
    main()
