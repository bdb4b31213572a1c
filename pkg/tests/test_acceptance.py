"""Acceptance suite: the eleven verification criteria, each with its runtime
budget.  One pass/fail line is printed per criterion (run pytest with -s to
see them as they complete)."""

import time

import pytest

from rootspace import cli

LIMITS = {
    "01 A6 example": 1,
    "02 finite PSP exhaustive": 120,
    "03 affine PSP windowed": 120,
    "04 minimal generation": 60,
    "05 hull-lattice recovery": 60,
    "06 two-cones agreement": 60,
    "07 finite 212 classification": 300,
    "08 affine lift correspondence": 300,
    "09 weight-set faces": 120,
    "10 Lie words": 180,
    "11 property suite": 300,
}


@pytest.mark.parametrize("name,fn", cli.CRITERIA, ids=[n for n, _ in cli.CRITERIA])
def test_criterion(name, fn):
    t0 = time.time()
    ok = bool(fn(False))
    elapsed = time.time() - t0
    print(f"criterion {name}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s)")
    assert ok, f"criterion {name} failed"
    assert elapsed < LIMITS[name], (
        f"criterion {name} took {elapsed:.1f}s, budget {LIMITS[name]}s")
