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
"""Exact convex minimization over Z^2 with lattice-free certificates."""

import json

from latfree._core import (
    EXIT_BUDGET_EXHAUSTED,
    EXIT_OK,
    LatfreeError,
    __version__,
    members,
    normalize_rational,
    r_metric,
)
from latfree import _core

__all__ = [
    "BudgetExhausted",
    "LatfreeError",
    "emit",
    "members",
    "normalize_rational",
    "r_metric",
    "solve",
    "verify",
]


class BudgetExhausted(LatfreeError):
    """Raised when the flip budget runs out; `partial` holds the trace so far."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def solve(problem, mode=None, tau=None, max_iterations=10000, literal_case4=False):
    """Solves a problem document (dict or JSON text) and returns the certificate."""
    code, document, error = _core.solve_json(
        _text(problem), mode, tau, max_iterations, literal_case4)
    if code == EXIT_OK:
        return json.loads(document)
    if code == EXIT_BUDGET_EXHAUSTED:
        raise BudgetExhausted(error, json.loads(document) if document else None)
    raise LatfreeError(error)


def verify(problem, certificate, box_radius=50):
    """Returns the verification report; report["pass"] is the verdict."""
    code, report, error = _core.verify_json(_text(problem), _text(certificate), box_radius)
    if code in (_core.EXIT_OK, _core.EXIT_VERIFY_FAILED, _core.EXIT_HASH_MISMATCH):
        return json.loads(report)
    raise LatfreeError(error)


def emit(certificate, fmt="csv"):
    return _core.emit(_text(certificate), fmt)
