"""One test per acceptance criterion; each prints its pass/fail rows.

Run with ``pytest -s tests/test_acceptance.py`` to see the table.
"""
import time

import pytest

from extcodes import checks

# Rows whose claim no implemented bound can certify; see the README.
UNATTAINABLE = {"ternary n=16: [17,10,5] distance-optimal by packing"}

# Per-criterion runtime ceilings in seconds.
TIME_LIMITS = {"1": 10, "3": 5, "5": 20, "7": 60, "10": 30}

_cache: dict[str, tuple[list[checks.Row], float]] = {}


def rows_for(key: str) -> list[checks.Row]:
    if key not in _cache:
        t0 = time.perf_counter()
        rows = checks.CRITERIA[key]()
        _cache[key] = (rows, time.perf_counter() - t0)
    return _cache[key][0]


@pytest.mark.parametrize("key", list(checks.CRITERIA))
def test_criterion(key):
    rows = rows_for(key)
    assert rows
    for r in rows:
        print(r.line())
    failing = [r.line() for r in rows if not r.passed and not r.report_only and r.name not in UNATTAINABLE]
    assert not failing, "\n".join(failing)
    if key in TIME_LIMITS:
        assert _cache[key][1] < TIME_LIMITS[key]


@pytest.mark.xfail(strict=True, reason="no implemented bound excludes [17,10,6] over GF(3)")
@pytest.mark.parametrize("name", sorted(UNATTAINABLE))
def test_unattainable_row(name):
    row = next(r for r in rows_for("9") if r.name == name)
    print(row.line())
    assert row.passed


def test_report_rows_never_fail_the_suite():
    rows = rows_for("11")
    assert rows and all(r.report_only for r in rows)
