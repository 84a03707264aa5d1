"""Power sums: closed forms vs Newton's identities vs direct summation."""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from besselprod.errors import DomainError
from besselprod.rayleigh import (K_RANGE, Method, SumFamily, closed_form_sum,
                                 direct_sum, newton_sums,
                                 newton_sums_from_coefficients, power_sums,
                                 reduced_coefficients)

RATIONAL_GRID = (Fraction(-2, 5), Fraction(0), Fraction(1, 2),
                 Fraction(1), Fraction(5, 2))


def _grid(family):
    if family is SumFamily.ETA:
        return tuple(nu for nu in RATIONAL_GRID if nu > 0)
    return RATIONAL_GRID


# frozen exact low-order values
def test_exact_oracles():
    assert closed_form_sum(SumFamily.TAU, 1, Fraction(1, 2)) == Fraction(1, 70)
    assert closed_form_sum(SumFamily.J4, 1, Fraction(1, 2)) == Fraction(1, 90)
    assert closed_form_sum(SumFamily.SIGMA, 1, Fraction(0)) == Fraction(5, 96)
    assert closed_form_sum(SumFamily.VARRHO, 1, Fraction(0)) == Fraction(5, 32)
    assert closed_form_sum(SumFamily.GAMMA4, 1, Fraction(0)) == Fraction(1, 96)
    assert closed_form_sum(SumFamily.RHO, 1, Fraction(0)) == Fraction(1, 48)
    assert closed_form_sum(SumFamily.Q, 1, Fraction(0)) == Fraction(1, 16)
    assert closed_form_sum(SumFamily.KAPPA, 1, Fraction(0)) == Fraction(25, 96)
    assert closed_form_sum(SumFamily.IOTA, 1, Fraction(0)) == Fraction(1, 8)


@pytest.mark.parametrize("family", list(SumFamily))
def test_closed_equals_newton_exact(family):
    """Validates every auxiliary polynomial against the series, exactly."""
    for nu in _grid(family):
        closed = tuple(closed_form_sum(family, k, nu)
                       for k in range(1, K_RANGE[family] + 1))
        newton = newton_sums(family, nu).values
        assert closed == newton


@given(nu=st.floats(-0.45, 6.0))
@settings(max_examples=40, deadline=None)
def test_closed_equals_newton_float(nu):
    for family in (SumFamily.TAU, SumFamily.SIGMA, SumFamily.KAPPA):
        closed = tuple(closed_form_sum(family, k, nu)
                       for k in range(1, K_RANGE[family] + 1))
        newton = newton_sums(family, nu).values
        for a, b in zip(closed, newton):
            assert a == pytest.approx(b, rel=1e-12)


def test_newton_identities_on_known_polynomial():
    # (1 - x)(1 - x/2) = 1 - 3x/2 + x^2/2: power sums of {1, 2}^-1... the
    # reciprocal-root sums are p_k = 1 + 2^-k
    coeffs = [Fraction(1), Fraction(-3, 2), Fraction(1, 2)]
    p = newton_sums_from_coefficients(coeffs, 3)
    assert p == [Fraction(3, 2), Fraction(5, 4), Fraction(9, 8)]


def test_reduced_coefficients_exact_and_alternating():
    coeffs = reduced_coefficients(SumFamily.SIGMA, Fraction(1, 2), 5)
    assert coeffs[0] == 1
    assert all(isinstance(c, Fraction) for c in coeffs)
    assert all((c > 0) == (i % 2 == 0) for i, c in enumerate(coeffs))


@pytest.mark.parametrize("family", [SumFamily.TAU, SumFamily.ETA,
                                    SumFamily.KAPPA, SumFamily.IOTA])
def test_direct_sum_matches_closed_form(family):
    nu = Fraction(5, 2)
    n_terms = 200 if family in (SumFamily.TAU, SumFamily.ETA) else 400
    for k in range(1, K_RANGE[family] + 1):
        exact = float(closed_form_sum(family, k, nu))
        ds = direct_sum(family, k, float(nu), n_terms)
        # tail bound plus roundoff allowance for summing n zeros
        slack = ds.tail_bound + 1e-12 * exact
        assert abs(exact - ds.value) <= slack


def test_direct_sum_tail_is_honest():
    # truncating earlier must still keep the true value within the bound
    exact = float(closed_form_sum(SumFamily.J4, 1, Fraction(1)))
    for n_terms in (25, 50, 100):
        ds = direct_sum(SumFamily.J4, 1, 1.0, n_terms)
        assert ds.value < exact < ds.value + ds.tail_bound


def test_power_sums_front_end():
    ps = power_sums(SumFamily.RHO, Fraction(1), Method.CLOSED_FORM)
    assert len(ps.values) == 4
    assert ps.values == newton_sums(SumFamily.RHO, Fraction(1)).values


def test_domain_guards():
    with pytest.raises(DomainError):
        closed_form_sum(SumFamily.TAU, 5, Fraction(1))
    with pytest.raises(DomainError):
        closed_form_sum(SumFamily.ETA, 1, Fraction(-1, 2))
    with pytest.raises(DomainError):
        closed_form_sum(SumFamily.J4, 1, Fraction(-3, 2))
