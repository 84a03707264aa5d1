"""Critical orders: regression values, monotonicity, structural cross-checks."""
import math

import pytest

from besselprod.errors import DomainError
from besselprod.radii import Kind, RadiusQuery, radius_starlike
from besselprod.thresholds import (bessel_tail_sum, convex_threshold,
                                   special_roots, starlike_threshold, theta,
                                   underline_nu)
from besselprod.zeros import bessel_zero, refine_root

# reference digits are two-decimal truncations of the true roots
STAR_EXPECTED = {
    Kind.F: -0.44, Kind.G: -0.87, Kind.H: -0.94,
    Kind.U: 0.05, Kind.V: -0.53, Kind.W: -0.69,
}


def _trunc2(x: float) -> float:
    return math.copysign(math.floor(abs(x) * 100.0) / 100.0, x)


@pytest.mark.parametrize("kind", list(Kind))
def test_starlike_threshold_regression(kind):
    nu = starlike_threshold(kind, 0.0).nu
    assert _trunc2(nu) == STAR_EXPECTED[kind]


@pytest.mark.parametrize("kind", list(Kind))
def test_starlike_threshold_means_radius_one(kind):
    # at the critical order the starlikeness radius equals 1
    nu = starlike_threshold(kind, 0.0).nu
    r = radius_starlike(RadiusQuery(kind, nu, 0.0)).radius
    assert r == pytest.approx(1.0, abs=1e-7)


@pytest.mark.parametrize("kind", list(Kind))
def test_starlike_threshold_monotone_in_alpha(kind):
    vals = [starlike_threshold(kind, a).nu for a in (0.0, 0.25, 0.5, 0.75)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("kind", [Kind.G, Kind.H, Kind.V, Kind.W])
def test_convex_threshold_monotone_in_alpha(kind):
    vals = [convex_threshold(kind, a).nu for a in (0.0, 0.5, 0.9)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_convex_threshold_above_radius_one():
    # at the critical order the convexity radius equals 1
    from besselprod.radii import radius_convex
    for kind in (Kind.G, Kind.V):
        nu = convex_threshold(kind, 0.0).nu
        r = radius_convex(RadiusQuery(kind, nu, 0.0)).radius
        assert r == pytest.approx(1.0, abs=1e-7)


def test_no_convex_threshold_for_power_kinds():
    with pytest.raises(DomainError):
        convex_threshold(Kind.F, 0.0)
    with pytest.raises(DomainError):
        convex_threshold(Kind.U, 0.0)


def test_special_roots():
    sr = special_roots()
    assert sr.nu_circ == pytest.approx(-0.7745645128439623, abs=1e-9)
    assert sr.nu_star == pytest.approx(-0.970175184406189, abs=1e-9)
    assert _trunc2(sr.nu_circ) == -0.77
    assert _trunc2(sr.nu_star) == -0.97
    # consistency: at nu_circ the first Bessel zero is exactly 1
    assert bessel_zero(sr.nu_circ, 1) == pytest.approx(1.0, abs=1e-9)


def test_underline_root_location():
    sr = special_roots()
    un = underline_nu()
    assert sr.nu_circ < un < -0.5


def test_theta_increasing_and_matches_w_convexity():
    un = underline_nu()
    grid = [un + 0.05 * i for i in range(1, 7)]
    vals = [theta(nu) for nu in grid]
    assert all(a < b for a, b in zip(vals, vals[1:]))
    # the root of theta is the alpha = 0 convexity threshold of kind W,
    # computed here through Bessel zeros rather than the reduced series
    w0 = convex_threshold(Kind.W, 0.0).nu
    root, _ = refine_root(theta, w0 - 0.05, w0 + 0.05)
    assert root == pytest.approx(w0, abs=1e-8)


def test_tail_sums_have_small_tails():
    for nu in (-0.49, 0.0, 1.0):
        s1, tail1 = bessel_tail_sum(nu, False)
        s2, tail2 = bessel_tail_sum(nu, True)
        assert tail1 < 1e-9 * s1 or tail1 < 1e-9
        assert s1 > 0 and s2 > 0
