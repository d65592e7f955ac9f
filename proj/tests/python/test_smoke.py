"""Smoke tests for the Python module built from the C++ core."""

from fractions import Fraction

import pytest

import dowling


def F(*args):
    return Fraction(*args)


def test_exact_arithmetic():
    assert dowling.binomial(5, 2) == 10
    assert dowling.binomial(3, 5) == 0
    assert dowling.factorial(10) == 3628800
    assert dowling.int_pow(F(3, 2), -2) == F(4, 9)
    assert dowling.int_pow(F(0), 0) == 1
    with pytest.raises(ValueError):
        dowling.int_pow(F(0), -1)


def test_triangles():
    assert dowling.stirling2(4, 2) == 7
    assert dowling.translated_whitney(2, 4, 2) == 28
    assert dowling.whitney(1, 2, 1) == 3
    assert dowling.noncentral_whitney(2, 1, 2, 1) == 0
    assert dowling.noncentral_whitney(2, 1, 3, 2) == dowling.noncentral_whitney_sum(2, 1, 3, 2)
    # Fractions cross the boundary exactly.
    assert dowling.noncentral_whitney(F(3, 2), F(-5, 3), 2, 0) == F(25, 9)


def test_polynomials():
    assert dowling.geometric_polynomial(2) == [0, 1, 2]
    assert dowling.geometric_number(5) == 541
    assert dowling.noncentral_td(2, 0, 2) == [0, 2, 2]
    assert dowling.eval_poly([F(0), F(1), F(2)], F(1, 2)) == 1
    assert dowling.geometric_two_variable(0, 3) == dowling.geometric_polynomial(3)
    td1 = dowling.tanny_dowling(1, 2, 3)
    td2 = dowling.tanny_dowling(2, 2, 3)
    assert td1 == [c * 2**k for k, c in enumerate(td2)]
    stepped = dowling.derivative_recurrence_step(dowling.geometric_polynomial(3))
    assert stepped == dowling.geometric_polynomial(4)


def test_egf():
    assert dowling.ftilde_egf(1, 0, 1, 4) == [1, 1, 3, 13, 75]
    assert dowling.ftilde_egf(2, 1, 1, 3) == [1, 0, 3, 12]


def test_series_enclosure():
    enc = dowling.ftilde_series(1, 0, 3, 1)
    assert enc.contains(13)
    assert enc.width() <= F(1, 10**20)
    assert 0 < enc.terms_used <= 10000
    with pytest.raises(ValueError):
        dowling.ftilde_series(0, 0, 1, 1)
    with pytest.raises(dowling.Unconverged):
        dowling.ftilde_series(1, 0, 3, 1, max_terms=2)


def test_identities():
    report = dowling.check_identity("THM2", m=1, a=0, x=1, n=2)
    assert report["verdict"] == "holds"
    assert report["lhs"] == F(6)

    wrong = dowling.check_identity("SPEC_8TH", "as-printed", m=2, x=2, n=2)
    assert wrong["verdict"] == "fails"
    fixed = dowling.check_identity("SPEC_8TH", "corrected", m=2, x=2, n=2)
    assert fixed["verdict"] == "holds"

    assert "THM1" in dowling.identity_tags()
    with pytest.raises(ValueError):
        dowling.check_identity("NOPE")


def test_small_suite():
    result = dowling.run_suite(
        ["THM1", "SPEC_A0"], m_set=[1, 2], a_set=[0, 1], x_set=[1, F(1, 2)], n_max=4
    )
    assert result["ok"]
    verdicts = {r["verdict"] for r in result["reports"]}
    assert "holds" in verdicts and "fails" in verdicts  # the expected A0 failures
