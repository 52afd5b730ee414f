"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

from pathlib import Path

import pytest

import conftest
from vertexlab import acceptance

REPORTS = Path(__file__).resolve().parents[1] / "reports"


@pytest.mark.parametrize("fn", acceptance.CRITERIA, ids=lambda f: f.__name__)
def test_criterion(fn):
    result = fn(REPORTS) if fn is acceptance.criterion_11 else fn()
    line = result.line()
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    assert result.passed, f"{line}\n{result.detail}"
