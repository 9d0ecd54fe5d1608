"""Acceptance criteria 1-15, one test each, with a PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time

import pytest

from eis4.suite import CLAIMS

# criterion number -> (suite claim id, wall-time budget in seconds or None)
CRITERIA = {
    1: ("shuffle", 60),
    2: ("eisenstein", None),
    3: ("theta", None),
    4: ("c-independence", None),
    5: ("rank", 30),
    6: ("im-rank", None),
    7: ("im-vanishing", None),
    8: ("period-det", 10),
    9: ("period-symmetry", None),
    10: ("kernel", None),
    11: ("examples", None),
    12: ("conjecture-dims", None),
    13: ("numeric-relations", 300),
    14: ("lattice", None),
    15: ("identities", None),
}
_BY_ID = {c.id: c for c in CLAIMS}


def run_criterion(n: int) -> tuple[bool, float, dict]:
    claim_id, budget = CRITERIA[n]
    t0 = time.perf_counter()
    ok, details = _BY_ID[claim_id].run(False)
    dt = time.perf_counter() - t0
    if n == 13:
        # the absolute threshold is loose next to the size of the T-values, so the
        # relative residual is also required to sit at rounding level
        ok = ok and all(r["relative_residual"] < 1e-9 for r in details["relations"])
    if budget is not None and dt > budget:
        details = {**details, "over_budget": dt}
        ok = False
    return ok, dt, details


def _report(n: int, ok: bool, dt: float, stream) -> None:
    claim_id = CRITERIA[n][0]
    stream.write(f"criterion {n:2d} [{claim_id}]: {'PASS' if ok else 'FAIL'} ({dt:.2f}s)\n")
    stream.flush()


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, dt, details = run_criterion(n)
    with capsys.disabled():
        sys.stdout.write("\n")
        _report(n, ok, dt, sys.stdout)
    assert ok, details


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        ok, dt, _ = run_criterion(n)
        _report(n, ok, dt, sys.stdout)
        failed += not ok
    sys.exit(1 if failed else 0)
