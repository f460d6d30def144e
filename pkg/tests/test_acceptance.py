"""Acceptance battery: every criterion at its stated tolerance and budget.

Each test prints one pass/fail line; the same functions back the CLI's
`paper-suite` subcommand.
"""

import pytest

from fusionrings.suite import _CRITERIA, run_criterion


@pytest.mark.parametrize(
    "number,description",
    [(num, desc) for num, desc, _, _ in _CRITERIA],
    ids=[f"criterion-{num:02d}" for num, _, _, _ in _CRITERIA],
)
def test_criterion(number, description):
    result = run_criterion(number)
    tag = "PASS" if result.passed else "FAIL"
    print(f"{tag}  criterion {number:2d}  {description}: {result.detail} [{result.elapsed:.1f}s]")
    assert result.passed, f"criterion {number} failed: {result.detail}"
