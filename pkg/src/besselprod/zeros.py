"""Ordered positive zeros of the eight zero families with guaranteed brackets.

Families (all indexed from n = 1):
    J            zeros j_n of the Bessel function J_nu
    GAMMA        zeros gamma_n of the cross-product Phi_nu
    GAMMA_PRIME  zeros of Phi_nu'               (requires nu > -1/2)
    T            zeros of Pi_nu'                (requires nu > 0)
    ZETA         zeros of z Phi' - 2 nu Phi
    XI           zeros of z Phi' - (2 nu - 3) Phi
    THETA_CAP    zeros of z Pi'  - (2 nu - 1) Pi
    OMEGA        zeros of z Pi'  - (2 nu - 4) Pi

Evaluation backend: scipy's jv and the exponentially scaled ive.  Every
target above reduces to a combination of J_nu, J_{nu+1}, I_nu, I_{nu+1}
through the identities

    Phi' = 2 Pi - Phi / z,
    Pi'  = 2 nu Pi / z + (J_nu I_{nu+1} - J_{nu+1} I_nu),

so multiplying through by exp(-z) > 0 gives overflow-free, sign-identical
target functions valid at arbitrarily large z (the plain products overflow
double precision near z ~ 700).  Brackets are never guessed: each zero is
isolated by an interlacing bracket inherited from a parent zero family (or
by a fine forward scan for the Bessel zeros themselves), and a missing sign
change aborts the computation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from scipy.special import ive, jv

from .config import DEFAULTS, Settings
from .errors import BracketNotFoundError, DomainError

_SCAN_STEP = math.pi / 8.0
_TINY_FRACTION = 1e-6  # lower endpoint of first brackets anchored at 0


class FamilyTag(Enum):
    J = "j"
    GAMMA = "gamma"
    GAMMA_PRIME = "gamma_prime"
    T = "t"
    ZETA = "zeta"
    XI = "xi"
    THETA_CAP = "theta"
    OMEGA = "omega"


@dataclass(frozen=True)
class ZeroFamily:
    tag: FamilyTag
    nu: float


@dataclass(frozen=True)
class ZeroTable:
    family: ZeroFamily
    zeros: tuple
    residuals: tuple
    brackets: tuple


def _scaled_phi(nu: float, z: float) -> float:
    """exp(-z) * Phi_nu(z)."""
    return jv(nu + 1.0, z) * ive(nu, z) + jv(nu, z) * ive(nu + 1.0, z)


def _scaled_pi(nu: float, z: float) -> float:
    """exp(-z) * Pi_nu(z)."""
    return jv(nu, z) * ive(nu, z)


def _scaled_cross(nu: float, z: float) -> float:
    """exp(-z) * (J_nu I_{nu+1} - J_{nu+1} I_nu)(z)."""
    return jv(nu, z) * ive(nu + 1.0, z) - jv(nu + 1.0, z) * ive(nu, z)


def _target(family: ZeroFamily):
    """Sign-faithful scaled target function for one zero family."""
    nu = family.nu
    tag = family.tag
    if tag is FamilyTag.J:
        return lambda z: jv(nu, z)
    if tag is FamilyTag.GAMMA:
        return lambda z: _scaled_phi(nu, z)
    if tag is FamilyTag.GAMMA_PRIME:
        # z Phi' = 2 z Pi - Phi, same positive zeros as Phi'.
        return lambda z: 2.0 * z * _scaled_pi(nu, z) - _scaled_phi(nu, z)
    if tag is FamilyTag.ZETA:
        return lambda z: 2.0 * z * _scaled_pi(nu, z) - (2.0 * nu + 1.0) * _scaled_phi(nu, z)
    if tag is FamilyTag.XI:
        return lambda z: 2.0 * z * _scaled_pi(nu, z) - (2.0 * nu - 2.0) * _scaled_phi(nu, z)
    if tag is FamilyTag.T:
        # z Pi' = 2 nu Pi + z (J I_{nu+1} - J_{nu+1} I), same zeros as Pi'.
        return lambda z: 2.0 * nu * _scaled_pi(nu, z) + z * _scaled_cross(nu, z)
    if tag is FamilyTag.THETA_CAP:
        return lambda z: _scaled_pi(nu, z) + z * _scaled_cross(nu, z)
    if tag is FamilyTag.OMEGA:
        return lambda z: 4.0 * _scaled_pi(nu, z) + z * _scaled_cross(nu, z)
    raise DomainError(f"unknown zero family tag {tag!r}")


def refine_root(f, lo: float, hi: float, cfg: Settings = DEFAULTS):
    """Bisection to cfg.bisect_width, then three secant polishing steps.

    Requires a strict sign change on (lo, hi); returns (root, |f(root)|).
    Raises BracketNotFoundError when the bracket shows no sign change,
    which always signals an upstream bug rather than a recoverable state.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo, 0.0
    if fhi == 0.0:
        return hi, 0.0
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketNotFoundError(
            f"no sign change on bracket ({lo!r}, {hi!r}): f(lo)={flo!r}, f(hi)={fhi!r}")
    a, b, fa, fb = lo, hi, flo, fhi
    while b - a > cfg.bisect_width:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid, 0.0
        if math.copysign(1.0, fm) == math.copysign(1.0, fa):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    x, fx = (a, fa) if abs(fa) <= abs(fb) else (b, fb)
    xp, fxp = (b, fb) if x == a else (a, fa)
    for _ in range(3):
        if fx == fxp:
            break
        step = fx * (x - xp) / (fx - fxp)
        candidate = x - step
        if not lo < candidate < hi:
            break
        xp, fxp = x, fx
        x = candidate
        fx = f(x)
        if fx == 0.0:
            break
    return x, abs(fx)


@lru_cache(maxsize=256)
def _bessel_zero_table(nu: float, n_max: int, cfg: Settings = DEFAULTS):
    """Zeros of J_nu found by forward scan + bisection, with brackets.

    The scan starts from the previous zero (or 0) and advances in pi/8
    steps; consecutive Bessel zeros are separated by more than 2, so the
    scan cannot jump across a pair of zeros.  The McMahon guess
    (n + nu/2 - 1/4) pi is used to fast-forward the scan where it is safe.
    """
    f = lambda z: jv(nu, z)
    zeros, residuals, brackets = [], [], []
    prev = 0.0
    for n in range(1, n_max + 1):
        lo = prev + 1e-9 if prev > 0.0 else 1e-9
        if n == 1:
            # Rigorous lower bound on the first zero from the Rayleigh
            # fourth-power sum: j_1^4 > 16 (nu+1)^2 (nu+2).  (An asymptotic
            # guess would not be safe here: the McMahon approximation
            # overshoots the low zeros badly once nu is large.)
            first_floor = 2.0 * math.sqrt(nu + 1.0) * (nu + 2.0) ** 0.25
            lo = max(lo, first_floor - _SCAN_STEP)
        flo = f(lo)
        hi = lo
        found = False
        for _ in range(512):
            hi = hi + _SCAN_STEP
            fhi = f(hi)
            if math.copysign(1.0, flo) != math.copysign(1.0, fhi) or fhi == 0.0:
                found = True
                break
            lo, flo = hi, fhi
        if not found:
            raise BracketNotFoundError(
                f"scan for zero {n} of J_{nu} found no sign change")
        root, residual = refine_root(f, lo, hi, cfg)
        zeros.append(float(root))
        residuals.append(float(residual))
        brackets.append((lo, hi))
        prev = root
    return tuple(zeros), tuple(residuals), tuple(brackets)


def bessel_zero(nu: float, n: int, cfg: Settings = DEFAULTS) -> float:
    """The nth positive zero j_{nu,n} of J_nu."""
    if not nu > -1.0:
        raise DomainError(f"order nu={nu} must exceed -1")
    if n < 1:
        raise DomainError(f"zero index n={n} must be >= 1")
    table, _, _ = _bessel_zero_table(nu, n, cfg)
    return table[n - 1]


def _admissible(family: ZeroFamily) -> None:
    if not family.nu > -1.0:
        raise DomainError(f"order nu={family.nu} must exceed -1")
    if family.tag is FamilyTag.GAMMA_PRIME and not family.nu > -0.5:
        raise DomainError("GAMMA_PRIME requires nu > -1/2")
    if family.tag is FamilyTag.T and not family.nu > 0.0:
        raise DomainError("T requires nu > 0")


def _interlacing_brackets(family: ZeroFamily, n_max: int, cfg: Settings):
    """Theory-driven (lo, hi) bracket list for each family."""
    nu = family.nu
    tag = family.tag
    if tag is FamilyTag.J:
        return None  # handled by the scanning table
    if tag is FamilyTag.GAMMA:
        j_lo, _, _ = _bessel_zero_table(nu, n_max + 1, cfg)
        j_hi, _, _ = _bessel_zero_table(nu + 1.0, n_max, cfg)
        return [(j_lo[n - 1], min(j_lo[n], j_hi[n - 1])) for n in range(1, n_max + 1)]
    if tag in (FamilyTag.GAMMA_PRIME, FamilyTag.ZETA, FamilyTag.XI):
        parent = zeros(ZeroFamily(FamilyTag.GAMMA, nu), n_max, cfg).zeros
    else:  # T, THETA_CAP, OMEGA interlace with the Bessel zeros
        parent, _, _ = _bessel_zero_table(nu, n_max, cfg)
    out = []
    prev = _TINY_FRACTION * parent[0]
    for n in range(1, n_max + 1):
        out.append((prev, parent[n - 1]))
        prev = parent[n - 1]
    return out


def zeros(family: ZeroFamily, n_max: int, cfg: Settings = DEFAULTS) -> ZeroTable:
    """Ordered table of the first n_max positive zeros of one family."""
    _admissible(family)
    if n_max < 1 or n_max > cfg.zero_cap:
        raise DomainError(f"n_max={n_max} outside [1, {cfg.zero_cap}]")
    if family.tag is FamilyTag.J:
        zs, res, brs = _bessel_zero_table(family.nu, n_max, cfg)
        return ZeroTable(family, zs, res, brs)
    f = _target(family)
    zs, res, brs = [], [], []
    for lo, hi in _interlacing_brackets(family, n_max, cfg):
        # Exclude the endpoint zeros of the parent function: nudge inward
        # by a relative hair so the parent's own root does not mask the
        # sign change of this family's target.
        lo_in = lo * (1.0 + 1e-12) if lo > 0.0 else lo
        hi_in = hi * (1.0 - 1e-12)
        root, residual = refine_root(f, lo_in, hi_in, cfg)
        zs.append(float(root))
        res.append(float(residual))
        brs.append((lo, hi))
    return ZeroTable(family, tuple(zs), tuple(res), tuple(brs))
