"""The acceptance battery; each criterion prints one PASS/FAIL line (see ``pytest -s``)."""

import pytest

from roughlogic.acceptance import EQUIV_SEQUENTS, CRITERIA, RULE_SEQUENTS, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    print(result.line())
    assert result.passed, result.detail
    assert result.within_budget, f"{result.seconds:.3f}s over the {result.budget}s budget"


def test_battery_sizes():
    assert len(RULE_SEQUENTS) >= 19
    assert len(EQUIV_SEQUENTS) >= 50
