"""Euler-Rayleigh bound chains sandwiching the radii.

For an entire function of genus 0 whose positive roots x_n carry the power
sums s_k = sum x_n^{-k}, the smallest root x_1 obeys

    s_k^{-1/k}  <  x_1  <  s_k / s_{k+1}          for every k >= 1,

with both sides converging monotonically to x_1.  Here the roots are the
fourth powers of the radii (except for the fourth-root kinds H and W where
the root already is the radius), so the chains read

    s_k^{-1/(4k)} < r < (s_k / s_{k+1})^{1/4}     (quartic kinds),
    s_k^{-1/k}    < r <  s_k / s_{k+1}            (kinds H and W).

The chains are assembled from the closed-form sums, checked against the
independently computed radius, and accompanied by a crude a-priori upper
bound from the first series coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import DEFAULTS, Settings
from .errors import DomainError
from .radii import Kind, RadiusQuery, radius_convex, radius_starlike
from .rayleigh import SumFamily, closed_form_sum, poch


class Mode(Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"


@dataclass(frozen=True)
class BoundChain:
    kind: Kind
    mode: Mode
    nu: float
    crude_upper: float
    lowers: tuple
    uppers: tuple
    radius: float
    verdict: bool
    ill_conditioned: bool


_STAR_SUMS = {
    Kind.F: SumFamily.TAU, Kind.G: SumFamily.SIGMA, Kind.H: SumFamily.RHO,
    Kind.U: SumFamily.ETA, Kind.V: SumFamily.VARRHO, Kind.W: SumFamily.Q,
}
_CONVEX_SUMS = {
    Kind.G: SumFamily.KAPPA, Kind.H: SumFamily.ALPHA_H,
    Kind.V: SumFamily.EPSILON, Kind.W: SumFamily.IOTA,
}
_QUARTIC = {Kind.F, Kind.G, Kind.U, Kind.V}


def _crude_upper(kind: Kind, mode: Mode, nu: float) -> float:
    """Upper bound for the radius read off the first two coefficients."""
    p3 = poch(nu + 1.0, 3)
    box = (nu + 1.0) ** 2 * (nu + 2.0)
    if mode is Mode.STARLIKE:
        table = {
            Kind.F: (4.0 * p3 * (2.0 * nu + 1.0)) ** 0.25,
            Kind.G: (4.0 * p3) ** 0.25,
            Kind.H: 16.0 * p3,
            Kind.U: (8.0 * nu * (nu + 1.0) ** 2 * (nu + 2.0)) ** 0.25,
            Kind.V: (4.0 * box) ** 0.25,
            Kind.W: 16.0 * box,
        }
    else:
        table = {
            Kind.G: (4.0 * p3 / 5.0) ** 0.25,
            Kind.H: 8.0 * p3,
            Kind.V: (4.0 * box / 5.0) ** 0.25,
            Kind.W: 8.0 * box,
        }
    if kind not in table:
        raise DomainError(f"no crude bound for kind {kind.value} in mode {mode.value}")
    return float(table[kind])


def _chain(family: SumFamily, kind: Kind, nu: float, k_top: int):
    sums = [float(closed_form_sum(family, k, nu)) for k in range(1, k_top + 1)]
    if kind in _QUARTIC:
        lowers = tuple(s ** (-1.0 / (4.0 * k)) for k, s in enumerate(sums, start=1))
        uppers = tuple((sums[k - 1] / sums[k]) ** 0.25 for k in range(1, k_top))
    else:
        lowers = tuple(s ** (-1.0 / k) for k, s in enumerate(sums, start=1))
        uppers = tuple(sums[k - 1] / sums[k] for k in range(1, k_top))
    return lowers, uppers


def _assemble(kind: Kind, mode: Mode, nu: float, family: SumFamily,
              k_top: int, radius: float) -> BoundChain:
    lowers, uppers = _chain(family, kind, nu, k_top)
    crude = _crude_upper(kind, mode, nu)
    seq_ok = all(lowers[i] < lowers[i + 1] for i in range(len(lowers) - 1)) \
        and all(uppers[i + 1] < uppers[i] for i in range(len(uppers) - 1))
    sandwich = all(lo < radius for lo in lowers) and \
        all(radius < up for up in uppers) and radius < crude
    # The tightest pair brackets the radius within a width comparable to
    # double-precision resolution once nu grows; flag that case.
    gap = uppers[-1] - lowers[-1]
    ill = gap < 64.0 * abs(radius) * 2.220446049250313e-16
    return BoundChain(kind, mode, float(nu), crude, lowers, uppers,
                      float(radius), bool(seq_ok and sandwich), bool(ill))


def starlike_chain(kind: Kind, nu: float, cfg: Settings = DEFAULTS) -> BoundChain:
    """Lower/upper chain for the alpha = 0 starlikeness radius."""
    family = _STAR_SUMS[kind]
    radius = radius_starlike(RadiusQuery(kind, float(nu), 0.0), cfg).radius
    return _assemble(kind, Mode.STARLIKE, float(nu), family, 4, radius)


def convex_chain(kind: Kind, nu: float, cfg: Settings = DEFAULTS) -> BoundChain:
    """Lower/upper chain for the alpha = 0 convexity radius (kinds G,H,V,W)."""
    if kind not in _CONVEX_SUMS:
        raise DomainError(f"no convexity chain for kind {kind.value}")
    family = _CONVEX_SUMS[kind]
    radius = radius_convex(RadiusQuery(kind, float(nu), 0.0), cfg).radius
    return _assemble(kind, Mode.CONVEX, float(nu), family, 3, radius)
