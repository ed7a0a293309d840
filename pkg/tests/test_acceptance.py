"""Release gate: every acceptance criterion must pass at exact tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion; the same checks back ``wreathmac selftest``.
"""

import pytest

from wreathmac.acceptance import CRITERIA, run_criteria


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion(name, fn):
    passed, detail = fn()
    print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
    assert passed, f"{name}: {detail}"


def test_runner_covers_all_criteria():
    results = run_criteria()
    assert [r.name for r in results] == [name for name, _ in CRITERIA]
    assert all(r.passed for r in results)
