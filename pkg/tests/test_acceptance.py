"""Acceptance criteria 1-9; each test records one PASS/FAIL line."""

import pytest

from conftest import ACCEPTANCE_LINES
from zdisk import selftest


@pytest.mark.parametrize("name,check", selftest.CRITERIA, ids=[c[0].split()[0] for c in selftest.CRITERIA])
def test_criterion(name, check):
    result = selftest._timed(name, check)
    line = result.line()
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.passed, result.detail
