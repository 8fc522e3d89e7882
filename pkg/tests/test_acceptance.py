"""Acceptance battery: one test per criterion of the verification suite.

Run with ``-v`` (or ``-s``) to see one summary line per criterion.  The
``bounds_pipeline`` criterion is knowingly red: its majorant-threshold
sub-check fails at the single degree n = 1560 (the sharp threshold is
n = 1561), and it is kept as stated rather than quietly adjusted.
"""

import pytest

from normcov.suite import CRITERIA, DEFAULT_SEED, run_criterion


@pytest.mark.parametrize("name", [name for name, _ in CRITERIA])
def test_acceptance(name, capsys):
    result = run_criterion(name, level="desk", seed=DEFAULT_SEED)
    status = "PASS" if result.ok else "FAIL"
    with capsys.disabled():
        print(f"\n{status} {name}: {result.detail}")
    assert result.ok, result.detail
