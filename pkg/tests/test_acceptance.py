"""The full reproduction suite, one test per criterion.

Run with `pytest -s tests/test_acceptance.py` to see a pass/fail line per
criterion (the same lines the `crystalkit paper-suite` command prints).
"""

import time

import pytest

from crystalkit import accept, quiverdeg


@pytest.mark.parametrize(
    "number,section,title,fn",
    accept.REGISTRY,
    ids=[f"criterion_{num:02d}" for num, _, _, _ in accept.REGISTRY],
)
def test_criterion(number, section, title, fn):
    start = time.perf_counter()
    passed, detail = fn()
    result = accept.CriterionResult(number, section, title, passed,
                                    time.perf_counter() - start, detail)
    print(result.line())
    assert passed, detail


def test_negative_control_table_corruption(monkeypatch):
    # corrupting one embedded table entry must fail the extension-table item
    bad = (tuple(-x for x in quiverdeg.W_ROWS[0]),) + quiverdeg.W_ROWS[1:]
    monkeypatch.setattr(quiverdeg, "W_ROWS", bad)
    passed, detail = accept.criterion_15()
    assert not passed
