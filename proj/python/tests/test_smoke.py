# Copyright 2026 The latfree Authors
#
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

import json
import os
import pathlib

import pytest

import latfree

FIXTURES = pathlib.Path(
    os.environ.get("LATFREE_FIXTURE_DIR",
                   pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_members_and_r_metric():
    assert latfree.members((0, 1), ((1, 0), (1, 1))) == [(0, 1), (1, 1), (1, 2), (2, 2)]
    assert latfree.r_metric((0, 0), ((1, 0), (0, 1)), (3, 2)) == 3
    with pytest.raises(latfree.LatfreeError):
        latfree.members((0, 0), ((2, 0), (0, 1)))


def test_normalize_rational():
    assert latfree.normalize_rational("6/-4") == "-3/2"
    assert latfree.normalize_rational("0.25") == "1/4"
    with pytest.raises(latfree.LatfreeError):
        latfree.normalize_rational("1/0")


def test_ellipse_solve_and_verify():
    problem = load("ellipse.json")
    cert = latfree.solve(problem)
    assert cert["status"] == "LatticeFree"
    assert cert["argmin"]["f"] == "0"
    final = latfree.members(tuple(cert["final_set"]["z"]),
                            tuple(tuple(u) for u in cert["final_set"]["U"]))
    assert sorted(final) == [(-1, -1), (-1, 0), (0, -1), (0, 0)]
    report = latfree.verify(problem, cert)
    assert report["pass"] is True


def test_literal_sequence_and_emit():
    cert = latfree.solve(load("ellipse.json"), literal_case4=True)
    assert cert["iterations"] == 3
    csv = latfree.emit(cert, "csv")
    assert len(csv.strip().splitlines()) == 5
    assert latfree.emit(cert, "svg").count("<line") == 16


def test_budget_exhaustion_keeps_partial_trace():
    with pytest.raises(latfree.BudgetExhausted) as info:
        latfree.solve(load("ellipse.json"), mode="tolerance", max_iterations=1)
    assert len(info.value.partial["trace"]) == 1


def test_tampered_certificate_fails():
    problem = load("shifted_circle.json")
    cert = latfree.solve(problem)
    cert["final_set"] = {"z": [0, 0], "U": [[1, 0], [0, 1]]}
    report = latfree.verify(problem, cert)
    assert report["pass"] is False
    assert report["witnesses"]


def test_bad_problem_raises():
    with pytest.raises(latfree.LatfreeError):
        latfree.solve({"objective": {"type": "quadratic", "Q": [["1", "2"], ["2", "1"]],
                                     "c": ["0", "0"]}})
