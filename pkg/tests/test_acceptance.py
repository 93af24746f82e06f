"""Acceptance gate: one test per numbered validation criterion.

The criteria run once per session (several of them are multi-minute Monte
Carlo jobs); each test then asserts its criterion's recorded outcome so the
report shows exactly one pass/fail line per criterion.
"""

import pytest

from pwe.validation import CRITERIA, run_validation


@pytest.fixture(scope="session")
def results():
    return {r.cid: r for r in run_validation()}


@pytest.mark.parametrize("cid", sorted(CRITERIA))
def test_criterion(results, cid):
    res = results[cid]
    assert res.passed, f"criterion {cid} ({res.name}) failed: {res.detail}"
