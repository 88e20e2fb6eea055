"""The cross-check sweeps themselves, at small sizes."""

import pytest

from descentpoly.verify import SUITES, VerificationError, run_suite


def test_run_all_suites_small():
    counts = run_suite("all", 3, seed=1)
    assert set(counts) == set(SUITES)
    assert all(v > 0 for v in counts.values())


def test_single_suite():
    counts = run_suite("formulas", 4)
    assert counts == {"formulas": counts["formulas"]}
    assert counts["formulas"] > 0


def test_verification_error_payload():
    err = VerificationError("boom", {"n": 3})
    assert isinstance(err, AssertionError)
    assert err.payload == {"n": 3}
    with pytest.raises(KeyError):
        run_suite("nonexistent", 3)
