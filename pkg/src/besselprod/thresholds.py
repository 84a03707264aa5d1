"""Critical order thresholds: the nu at which the unit disk is maximal.

For each normalized kind and each order alpha in [0, 1) there is a unique
order nu at which the radius of starlikeness (or convexity) equals 1, so
that the function is starlike/convex of order alpha exactly on the unit
disk.  Evaluating the defining equations at z = 1 turns the problem into a
root-find in nu:

  starlike F:  2 Pi_nu(1) - (alpha (2 nu + 1) + 1) Phi_nu(1) = 0
  starlike G:  2 Pi_nu(1) - (alpha + 2 nu + 1) Phi_nu(1) = 0
  starlike H:    Pi_nu(1) - (2 alpha + nu - 1) Phi_nu(1) = 0
  starlike U:  C_nu(1) + 2 nu (1 - alpha) Pi_nu(1) = 0
  starlike V:  C_nu(1) + (1 - alpha) Pi_nu(1) = 0
  starlike W:  C_nu(1) + 4 (1 - alpha) Pi_nu(1) = 0

with C_nu = J_nu I_{nu+1} - J_{nu+1} I_nu.  The convexity thresholds use
the reduced convexity series at z = 1 instead.  Each left-hand side has a
single sign change on the scanned nu window, located above the relevant
breakdown order (nu_circ with J_nu(1) = 0 for the product kinds, nu_star
with Phi_nu(1) = 0 for the cross-product kinds).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import ive, jv

from .config import DEFAULTS, Settings
from .errors import DomainError, NumericalError
from .radii import Kind, _CONVEX_SERIES
from .series import quartic_series
from .zeros import refine_root


@dataclass(frozen=True)
class Threshold:
    kind: Kind
    alpha: float
    nu: float
    residual: float


def _phi1(nu: float) -> float:
    """e^{-1} Phi_nu(1) via the cross-product identity."""
    return jv(nu + 1.0, 1.0) * ive(nu, 1.0) + jv(nu, 1.0) * ive(nu + 1.0, 1.0)


def _pi1(nu: float) -> float:
    """e^{-1} Pi_nu(1)."""
    return jv(nu, 1.0) * ive(nu, 1.0)


def _c1(nu: float) -> float:
    """e^{-1} C_nu(1), C_nu = J_nu I_{nu+1} - J_{nu+1} I_nu."""
    return jv(nu, 1.0) * ive(nu + 1.0, 1.0) - jv(nu + 1.0, 1.0) * ive(nu, 1.0)


def special_root_product(cfg: Settings = DEFAULTS) -> float:
    """nu_circ in (-1, 0): the order with J_nu(1) = 0."""
    root, _ = refine_root(lambda nu: jv(nu, 1.0), -0.999, -0.5, cfg)
    return float(root)


def special_root_crossproduct(cfg: Settings = DEFAULTS) -> float:
    """nu_star in (-1, nu_circ): the order with Phi_nu(1) = 0."""
    root, _ = refine_root(_phi1, -0.9999, -0.9, cfg)
    return float(root)


def _starlike_lhs(kind: Kind, alpha: float):
    if kind is Kind.F:
        return lambda nu: 2.0 * _pi1(nu) - (alpha * (2.0 * nu + 1.0) + 1.0) * _phi1(nu)
    if kind is Kind.G:
        return lambda nu: 2.0 * _pi1(nu) - (alpha + 2.0 * nu + 1.0) * _phi1(nu)
    if kind is Kind.H:
        return lambda nu: _pi1(nu) - (2.0 * alpha + nu - 1.0) * _phi1(nu)
    if kind is Kind.U:
        return lambda nu: _c1(nu) + 2.0 * nu * (1.0 - alpha) * _pi1(nu)
    if kind is Kind.V:
        return lambda nu: _c1(nu) + (1.0 - alpha) * _pi1(nu)
    return lambda nu: _c1(nu) + 4.0 * (1.0 - alpha) * _pi1(nu)


_CROSS_KINDS = {Kind.F, Kind.G, Kind.H}


def _scan_root(f, lo: float, cfg: Settings) -> tuple[float, float]:
    """First sign change of f on a forward nu scan starting at lo."""
    step = cfg.nu_scan_step
    prev = lo
    f_prev = f(prev)
    nu = lo
    while nu < 10.0:
        nu = min(nu + step, 10.0)
        val = f(nu)
        if f_prev == 0.0:
            return prev, 0.0
        if f_prev * val < 0.0:
            return refine_root(f, prev, nu, cfg)
        prev, f_prev = nu, val
    raise NumericalError("no threshold sign change found on the scan window")


def _window_floor(kind: Kind, cfg: Settings) -> float:
    if kind in _CROSS_KINDS:
        return special_root_crossproduct(cfg) + 1e-3
    return special_root_product(cfg) + 1e-3


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")


def starlike_threshold(kind: Kind, alpha: float,
                       cfg: Settings = DEFAULTS) -> Threshold:
    """The nu at which the starlikeness radius of the kind equals 1."""
    _check_alpha(alpha)
    f = _starlike_lhs(kind, float(alpha))
    root, residual = _scan_root(f, _window_floor(kind, cfg), cfg)
    return Threshold(kind, float(alpha), float(root), float(residual))


def convex_threshold(kind: Kind, alpha: float,
                     cfg: Settings = DEFAULTS) -> Threshold:
    """The nu at which the convexity radius of the kind equals 1.

    Uses the reduced convexity series evaluated at z = 1: the radius
    equals 1 exactly when that series vanishes at 1.
    """
    _check_alpha(alpha)
    alpha = float(alpha)
    if kind not in _CONVEX_SERIES:
        raise DomainError(
            f"no convexity threshold for kind {kind.value} "
            "(open problem for the power-type kinds)")
    make_weight, base, _tag = _CONVEX_SERIES[kind]

    def f(nu: float) -> float:
        return quartic_series(nu, 1.0, make_weight(nu, alpha), base, cfg)[0]

    root, residual = _scan_root(f, _window_floor(kind, cfg), cfg)
    return Threshold(kind, alpha, float(root), float(residual))


@dataclass(frozen=True)
class SpecialRoots:
    nu_circ: float
    nu_star: float


def special_roots(cfg: Settings = DEFAULTS) -> SpecialRoots:
    """The breakdown orders below which the unit disk leaves the domain."""
    return SpecialRoots(special_root_product(cfg), special_root_crossproduct(cfg))


def bessel_tail_sum(nu: float, power_shift: bool, n_terms: int = 200,
                    cfg: Settings = DEFAULTS) -> tuple[float, float]:
    """(value, tail bound) of sum 1/(j^4 - 1) or sum j^4/(j^4 - 1)^2.

    power_shift False gives S1 = sum_n 1/(j_{nu,n}^4 - 1); True gives
    S2 = sum_n j_{nu,n}^4 / (j_{nu,n}^4 - 1)^2.  The tail is bounded by
    the linear-envelope integral used for the power sums (the summands are
    below 2/j^4 once j^4 > 2); if it exceeds 1e-9 of the partial sum the
    zero count is doubled, up to the configured cap.
    """
    from .zeros import FamilyTag, ZeroFamily, zeros as _zeros
    while True:
        js = _zeros(ZeroFamily(FamilyTag.J, float(nu)), n_terms, cfg).zeros
        if js[0] <= 1.0:
            raise DomainError("first Bessel zero must exceed 1 (nu above nu_circ)")
        if power_shift:
            value = math.fsum(j ** 4 / (j ** 4 - 1.0) ** 2 for j in js)
        else:
            value = math.fsum(1.0 / (j ** 4 - 1.0) for j in js)
        spacings = [js[i + 1] - js[i] for i in range(len(js) - 5, len(js) - 1)]
        d = 0.9 * min(spacings)
        tail = 2.0 * cfg.tail_safety * js[-1] ** (-3.0) / (3.0 * d)
        if tail < 1e-9 * value or 2 * n_terms > cfg.zero_cap:
            return float(value), float(tail)
        n_terms *= 2


def theta(nu: float, cfg: Settings = DEFAULTS) -> float:
    """Theta(nu) = 1 - S1 - S2 / (1 - S1), strictly increasing in nu.

    Its unique root is the alpha = 0 convexity threshold of the kind-W
    normalization expressed through the Bessel zeros themselves, used as
    an independent cross-check on convex_threshold.
    """
    s1, _ = bessel_tail_sum(nu, False, cfg=cfg)
    s2, _ = bessel_tail_sum(nu, True, cfg=cfg)
    return 1.0 - s1 - s2 / (1.0 - s1)


def underline_nu(cfg: Settings = DEFAULTS) -> float:
    """The unique root of S1 + S2 = 1, located in (nu_circ, -1/2)."""
    lo = special_root_product(cfg) + 1e-6

    def f(nu: float) -> float:
        s1, _ = bessel_tail_sum(nu, False, cfg=cfg)
        s2, _ = bessel_tail_sum(nu, True, cfg=cfg)
        return s1 + s2 - 1.0

    root, _ = refine_root(f, lo, -0.5, cfg)
    return float(root)
