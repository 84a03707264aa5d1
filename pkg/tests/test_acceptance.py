"""Acceptance gate: the ten end-to-end criteria.

Each test states its tolerance and runtime budget.  Reference digits
quoted from the source tables are two-decimal truncations (digits cut,
not rounded), so regressions compare truncations.
"""
import math
import time
from fractions import Fraction

import pytest

from besselprod.bounds import convex_chain, starlike_chain
from besselprod.hyperbolicity import JensenFamily, certify_hyperbolic
from besselprod.radii import Kind
from besselprod.rayleigh import (K_RANGE, SumFamily, closed_form_sum,
                                 direct_sum, newton_sums)
from besselprod.series import Family, SeriesSpec, eval_series
from besselprod.thresholds import (bessel_tail_sum, special_roots,
                                   starlike_threshold)
from besselprod.zeros import DEFAULTS, FamilyTag, ZeroFamily, bessel_zero, zeros


def _trunc2(x: float) -> float:
    return math.copysign(math.floor(abs(x) * 100.0) / 100.0, x)


# 1. Rayleigh identity for the Bessel zeros (tail bound absolute <= 1e-8;
#    the relative reading is unattainable: at nu = 2.5 the true tail of a
#    200-zero partial sum is ~4e-7 of the total).  Runtime < 5 s per nu.
@pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 2.5])
def test_acceptance_1_rayleigh_identity_bessel(nu):
    start = time.time()
    ds = direct_sum(SumFamily.J4, 1, nu, 200)
    exact = float(closed_form_sum(SumFamily.J4, 1, Fraction(nu).limit_denominator(10)))
    assert abs(exact - ds.value) <= ds.tail_bound
    assert ds.tail_bound <= 1e-8
    assert time.time() - start < 5.0


# 2. Same for the cross-product zeros.  Runtime < 10 s per nu.
@pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 2.5])
def test_acceptance_2_rayleigh_identity_crossproduct(nu):
    start = time.time()
    ds = direct_sum(SumFamily.GAMMA4, 1, nu, 200)
    exact = float(closed_form_sum(SumFamily.GAMMA4, 1,
                                  Fraction(nu).limit_denominator(10)))
    assert abs(exact - ds.value) <= ds.tail_bound
    assert ds.tail_bound <= 1e-8
    assert time.time() - start < 10.0


# 3. Transcription audit: every closed form against Newton's identities
#    at 5 rational orders, to 1e-12 relative (they agree exactly).
#    Runtime < 30 s total.
def test_acceptance_3_transcription_audit():
    start = time.time()
    grid = (Fraction(-2, 5), Fraction(0), Fraction(1, 2), Fraction(1),
            Fraction(5, 2))
    families = (SumFamily.TAU, SumFamily.SIGMA, SumFamily.RHO, SumFamily.ETA,
                SumFamily.VARRHO, SumFamily.Q, SumFamily.KAPPA,
                SumFamily.ALPHA_H, SumFamily.EPSILON, SumFamily.IOTA)
    for family in families:
        for nu in grid:
            if family is SumFamily.ETA and nu <= 0:
                continue
            newton = newton_sums(family, nu).values
            for k in range(1, K_RANGE[family] + 1):
                closed = closed_form_sum(family, k, nu)
                assert abs(closed - newton[k - 1]) <= Fraction(1, 10 ** 12) * abs(closed)
    assert time.time() - start < 30.0


# 4. Sandwich suite over the admissible nu grid.  Runtime < 60 s total.
def test_acceptance_4_sandwich_suite():
    start = time.time()
    grid = (-0.4, 0.0, 0.5, 1.0, 2.5, 10.0)
    for kind in Kind:
        for nu in grid:
            if kind is Kind.U and nu <= 0:
                continue
            if kind is Kind.F and nu <= -0.5:
                continue
            chain = starlike_chain(kind, nu)
            assert chain.verdict, (kind, nu)
    for kind in (Kind.G, Kind.H, Kind.V, Kind.W):
        for nu in grid:
            chain = convex_chain(kind, nu)
            assert chain.verdict, (kind, nu)
    assert time.time() - start < 60.0


# 5. Threshold regression (two-decimal truncations of the true roots).
#    Runtime < 30 s.
def test_acceptance_5_threshold_regression():
    start = time.time()
    expected = {Kind.F: -0.44, Kind.G: -0.87, Kind.H: -0.94,
                Kind.U: 0.05, Kind.V: -0.53, Kind.W: -0.69}
    for kind, target in expected.items():
        nu = starlike_threshold(kind, 0.0).nu
        assert _trunc2(nu) == target, (kind, nu)
    assert time.time() - start < 30.0


# 6. Special roots to the displayed digits.  Runtime < 10 s.
def test_acceptance_6_special_roots():
    start = time.time()
    sr = special_roots()
    assert _trunc2(sr.nu_circ) == -0.77
    assert _trunc2(sr.nu_star) == -0.97
    assert time.time() - start < 10.0


# 7. Interlacing for n <= 10 across the nu grid; first zeros increasing
#    in the order.  Runtime < 30 s.
def test_acceptance_7_interlacing_suite():
    start = time.time()
    for nu in (-0.4, 0.0, 0.5, 1.0, 2.5):
        js = zeros(ZeroFamily(FamilyTag.J, nu), 11).zeros
        gs = zeros(ZeroFamily(FamilyTag.GAMMA, nu), 10).zeros
        assert all(js[i] < gs[i] < js[i + 1] for i in range(10))
        for tag in (FamilyTag.GAMMA_PRIME, FamilyTag.ZETA, FamilyTag.XI):
            if tag is FamilyTag.GAMMA_PRIME and nu <= -0.5:
                continue
            zs = zeros(ZeroFamily(tag, nu), 10).zeros
            assert zs[0] < gs[0]
            assert all(gs[i] < zs[i + 1] < gs[i + 1] for i in range(9))
        for tag in (FamilyTag.T, FamilyTag.THETA_CAP, FamilyTag.OMEGA):
            if tag is FamilyTag.T and nu <= 0:
                continue
            zs = zeros(ZeroFamily(tag, nu), 10).zeros
            assert zs[0] < js[0]
            assert all(js[i] < zs[i + 1] < js[i + 1] for i in range(9))
    grid = [-0.9 + 0.2 * i for i in range(15)]
    j1 = [bessel_zero(nu, 1) for nu in grid]
    g1 = [zeros(ZeroFamily(FamilyTag.GAMMA, nu), 1).zeros[0] for nu in grid]
    assert all(a < b for a, b in zip(j1, j1[1:]))
    assert all(a < b for a, b in zip(g1, g1[1:]))
    assert time.time() - start < 30.0


# 8. Exact hyperbolicity certification up to n = 32.  Runtime < 60 s.
def test_acceptance_8_hyperbolicity():
    start = time.time()
    for family in JensenFamily:
        for nu in (Fraction(0), Fraction(1, 2), Fraction(-3, 4)):
            report = certify_hyperbolic(family, nu, 32)
            assert report.certified, (family, nu, report.failures)
    assert time.time() - start < 60.0


# 9. Laguerre-type inequality on (0, gamma_1): the squared derivative
#    dominates Phi Phi'' by (2 nu + 1) Phi^2 / z^2.  Runtime < 5 s.
@pytest.mark.parametrize("nu", [-0.4, 0.0, 1.0])
def test_acceptance_9_laguerre_inequality(nu):
    start = time.time()
    g1 = zeros(ZeroFamily(FamilyTag.GAMMA, nu), 1).zeros[0]
    for i in range(1, 101):
        z = g1 * i / 101.0
        phi = eval_series(SeriesSpec(Family.PHI, nu), z).value
        d1 = eval_series(SeriesSpec(Family.PHI_D1, nu), z).value
        d2 = eval_series(SeriesSpec(Family.PHI_D2, nu), z).value
        assert d1 * d1 - phi * d2 > (2.0 * nu + 1.0) * phi * phi / (z * z)
    assert time.time() - start < 5.0


# 10. Tail inequalities with rigorous tail bounds.  Runtime < 10 s.
@pytest.mark.parametrize("nu", [-0.49, 0.0, 1.0])
def test_acceptance_10_tail_inequalities(nu):
    start = time.time()
    s1, tail1 = bessel_tail_sum(nu, False)
    assert s1 + tail1 < 1.0 / 5.0
    gs = zeros(ZeroFamily(FamilyTag.GAMMA, nu), 200).zeros
    s_gamma = math.fsum(1.0 / (g ** 4 - 1.0) for g in gs)
    spacings = [gs[i + 1] - gs[i] for i in range(len(gs) - 5, len(gs) - 1)]
    d = 0.9 * min(spacings)
    tail_gamma = 2.0 * DEFAULTS.tail_safety * gs[-1] ** (-3.0) / (3.0 * d)
    assert s_gamma + tail_gamma < 1.0 / 29.0
    assert time.time() - start < 10.0
