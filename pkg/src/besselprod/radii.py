"""Radii of starlikeness and convexity of the six normalized functions.

A normalized function m(z) = z + ... is starlike of order alpha on |z| < r
exactly when Re(z m'(z)/m(z)) > alpha there, and convex of order alpha when
Re(1 + z m''(z)/m'(z)) > alpha.  For the functions handled here the radius
is the smallest positive root of a real transcendental equation, which
reduces to either

  * a weighted version of the z^4-reduced series (most cases), solved by
    bracketing the first sign change below the first pole of the
    logarithmic derivative, or
  * a ratio equation built from two weighted series (convexity of the
    power-type normalizations F and U), or
  * a monotone ratio equation on the rotated parameter branch (F with
    nu in (-1, -1/2), U with nu in (-1, 0)).

For the fourth-root kinds H and W the underlying series lives in the
variable z^{1/4}; the reported radius is the fourth power of the computed
root of the associated quartic-variable series.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .config import DEFAULTS, Settings
from .errors import BranchError, DomainError, NumericalError
from .series import RotatedKind, quartic_series, rotated_ratio
from .zeros import FamilyTag, ZeroFamily, refine_root, zeros


class Kind(Enum):
    F = "f"
    G = "g"
    H = "h"
    U = "u"
    V = "v"
    W = "w"


class Branch(Enum):
    PRINCIPAL = "principal"
    ROTATED = "rotated"


@dataclass(frozen=True)
class RadiusQuery:
    kind: Kind
    nu: float
    alpha: float = 0.0
    branch: Branch = Branch.PRINCIPAL


@dataclass(frozen=True)
class RadiusResult:
    query: RadiusQuery
    radius: float
    residual: float


# (weight builder, pochhammer base, bracketing zero family) per kind.
# The starlikeness condition reduces to the first positive zero of
# sum_n (-1)^n w(n) (z^4/16)^n / (n! (nu+1)_n (nu+A)_{2n}), which lies
# below the first zero of the bracketing family (the first pole of the
# logarithmic derivative).
_STAR = {
    Kind.F: (lambda nu, a: (lambda n: (2.0 * nu + 1.0) * (1.0 - a) + 4.0 * n), 2, FamilyTag.GAMMA),
    Kind.G: (lambda nu, a: (lambda n: 4.0 * n + 1.0 - a), 2, FamilyTag.GAMMA),
    Kind.H: (lambda nu, a: (lambda n: 4.0 * (n + 1.0 - a)), 2, FamilyTag.GAMMA),
    Kind.U: (lambda nu, a: (lambda n: 2.0 * nu * (1.0 - a) + 4.0 * n), 1, FamilyTag.J),
    Kind.V: (lambda nu, a: (lambda n: 4.0 * n + 1.0 - a), 1, FamilyTag.J),
    Kind.W: (lambda nu, a: (lambda n: 4.0 * (n + 1.0 - a)), 1, FamilyTag.J),
}

_CONVEX_SERIES = {
    Kind.G: (lambda nu, a: (lambda n: (4.0 * n + 1.0) * (4.0 * n + 1.0 - a)), 2, FamilyTag.ZETA),
    Kind.H: (lambda nu, a: (lambda n: (n + 1.0) * (n + 1.0 - a)), 2, FamilyTag.XI),
    Kind.V: (lambda nu, a: (lambda n: (4.0 * n + 1.0) * (4.0 * n + 1.0 - a)), 1, FamilyTag.THETA_CAP),
    Kind.W: (lambda nu, a: (lambda n: (n + 1.0) * (n + 1.0 - a)), 1, FamilyTag.OMEGA),
}

_QUARTIC_REPORT = {Kind.H, Kind.W}


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1), got {alpha}")


def _principal_nu_floor(kind: Kind) -> float:
    return 0.0 if kind is Kind.U else (-0.5 if kind is Kind.F else -1.0)


def _check_principal(kind: Kind, nu: float) -> None:
    floor = _principal_nu_floor(kind)
    if not nu > floor:
        if kind in (Kind.F, Kind.U) and nu > -1.0:
            raise BranchError(
                f"kind {kind.value} with nu = {nu} needs the rotated branch")
        raise DomainError(f"kind {kind.value} requires nu > {floor}, got {nu}")


def _first_root_below(f, hi: float, cfg: Settings) -> tuple[float, float]:
    """First sign change of f on (0, hi); f(0+) > 0 by construction."""
    n_grid = 64
    prev_z = hi * 1e-9
    prev_v = f(prev_z)
    if prev_v <= 0.0:
        raise NumericalError("weighted series not positive near the origin")
    for i in range(1, n_grid + 1):
        z = hi * i / n_grid
        if i == n_grid:
            z = hi * (1.0 - 1e-12)
        v = f(z)
        if v <= 0.0:
            return refine_root(f, prev_z, z, cfg)
        prev_z, prev_v = z, v
    raise NumericalError("no sign change found below the bracketing zero")


def radius_starlike(query: RadiusQuery, cfg: Settings = DEFAULTS) -> RadiusResult:
    _check_alpha(query.alpha)
    if query.branch is Branch.ROTATED:
        return radius_starlike_rotated(query, cfg)
    kind, nu, alpha = query.kind, float(query.nu), float(query.alpha)
    _check_principal(kind, nu)
    make_weight, base, bracket_tag = _STAR[kind]
    weight = make_weight(nu, alpha)
    hi = zeros(ZeroFamily(bracket_tag, nu), 1, cfg).zeros[0]

    def f(z: float) -> float:
        return quartic_series(nu, z, weight, base, cfg)[0]

    root, residual = _first_root_below(f, hi, cfg)
    radius = root ** 4 if kind in _QUARTIC_REPORT else root
    return RadiusResult(query, float(radius), float(residual))


def radius_starlike_rotated(query: RadiusQuery, cfg: Settings = DEFAULTS) -> RadiusResult:
    """Starlikeness radius on the rotated parameter branch.

    For F with nu in (-1, -1/2) and U with nu in (-1, 0) the normalized
    power is taken on a rotated branch and the radius solves
    ratio(r) = alpha * (2 nu + 1)  (resp.  alpha * 2 nu), where the ratio
    is continuous and strictly increasing from 2 nu + 1 (resp. 2 nu) at
    the origin, so plain bisection with a doubling upper bracket applies.
    """
    _check_alpha(query.alpha)
    kind, nu, alpha = query.kind, float(query.nu), float(query.alpha)
    if kind is Kind.F:
        if not -1.0 < nu < -0.5:
            raise BranchError(f"rotated F branch requires nu in (-1, -1/2), got {nu}")
        rk, target = RotatedKind.F_BRANCH, alpha * (2.0 * nu + 1.0)
    elif kind is Kind.U:
        if not -1.0 < nu < 0.0:
            raise BranchError(f"rotated U branch requires nu in (-1, 0), got {nu}")
        rk, target = RotatedKind.U_BRANCH, alpha * 2.0 * nu
    else:
        raise BranchError(f"kind {kind.value} has no rotated branch")

    def f(z: float) -> float:
        return rotated_ratio(rk, nu, z, cfg) - target

    hi = 1.0
    while f(hi) < 0.0:
        hi *= 2.0
        if hi > 1e6:
            raise NumericalError("rotated-branch bracket not found")
    root, residual = refine_root(f, 1e-12, hi, cfg)
    return RadiusResult(query, float(root), float(residual))


def radius_convex(query: RadiusQuery, cfg: Settings = DEFAULTS) -> RadiusResult:
    _check_alpha(query.alpha)
    kind, nu, alpha = query.kind, float(query.nu), float(query.alpha)
    _check_principal(kind, nu)

    if kind in _CONVEX_SERIES:
        make_weight, base, bracket_tag = _CONVEX_SERIES[kind]
        weight = make_weight(nu, alpha)
        hi = zeros(ZeroFamily(bracket_tag, nu), 1, cfg).zeros[0]

        def f(z: float) -> float:
            return quartic_series(nu, z, weight, base, cfg)[0]

        root, residual = _first_root_below(f, hi, cfg)
        radius = root ** 4 if kind in _QUARTIC_REPORT else root
        return RadiusResult(query, float(radius), float(residual))

    # Power-type kinds: 1 + z m''/m' = 1 + z R'/R + (1/p - 1) z Q'/Q with
    # p = 2 nu + 1 for F (resp. 2 nu for U); valid up to the first zero of
    # R, which sits below the first derivative-family zero.
    if kind is Kind.F:
        p = 2.0 * nu + 1.0
        r_weight = lambda n: 2.0 * nu + 4.0 * n + 1.0
        q_weight = lambda n: 1.0
        base = 2
        hi = zeros(ZeroFamily(FamilyTag.GAMMA_PRIME, nu), 1, cfg).zeros[0]
    else:
        p = 2.0 * nu
        r_weight = lambda n: 2.0 * nu + 4.0 * n
        q_weight = lambda n: 1.0
        base = 1
        hi = zeros(ZeroFamily(FamilyTag.T, nu), 1, cfg).zeros[0]

    def f(z: float) -> float:
        r_val = quartic_series(nu, z, r_weight, base, cfg)[0]
        r_der = quartic_series(nu, z, lambda n: 4.0 * n * r_weight(n), base, cfg)[0]
        q_val = quartic_series(nu, z, q_weight, base, cfg)[0]
        q_der = quartic_series(nu, z, lambda n: 4.0 * n * q_weight(n), base, cfg)[0]
        return (1.0 + r_der / r_val + (1.0 / p - 1.0) * q_der / q_val) - alpha

    root, residual = _first_root_below(f, hi, cfg)
    return RadiusResult(query, float(root), float(residual))
