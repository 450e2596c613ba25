"""Acceptance criteria 1-10; each test prints one PASS/FAIL line."""

import time

import pytest

from pencilforge.verify import CRITERIA

# seconds allowed per criterion (None: no stated limit)
TIME_LIMITS = {1: 5, 2: None, 3: 30, 4: 600, 5: 300, 6: None, 7: None, 8: None, 9: None, 10: 60}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    start = time.perf_counter()
    check = CRITERIA[number]()
    elapsed = time.perf_counter() - start
    limit = TIME_LIMITS[number]
    slow = limit is not None and elapsed > limit
    status = "PASS" if check.passed and not slow else "FAIL"
    line = f"criterion {number:2d} {check.name:<32s} {status}  ({elapsed:.1f} s"
    line += f" of {limit} s)" if limit else ")"
    with capsys.disabled():
        print(f"\n{line}")
        for f in check.failures:
            print(f"    {f}")
        if slow:
            print(f"    exceeded the {limit} s budget")
    assert check.passed, check.failures
    assert not slow
