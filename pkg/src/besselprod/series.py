"""Ascending-series evaluation of the Bessel product/cross-product family.

The two base functions are the cross-product and the product of a Bessel
function with the matching modified Bessel function,

    Phi_nu(z) = 2 sum_n (-1)^n (z/2)^(2 nu + 4n + 1) / (n! Gamma(nu+n+1) Gamma(nu+2n+2))
    Pi_nu(z)  =   sum_n (-1)^n (z/2)^(2 nu + 4n)     / (n! Gamma(nu+n+1) Gamma(nu+2n+1))

together with their termwise derivatives, six power-normalized forms
(f, g, h, u, v, w) with unit derivative at the origin, and the
all-positive rotated quotient series used on the rotated branch.

Everything here refuses |z| beyond Settings.z_max: the ascending series
loses precision catastrophically at large argument and no asymptotic
backup is implemented in this module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .config import DEFAULTS, Settings
from .errors import DomainError, NumericalError, RemovableExponentError
from .gammafn import gamma


class Family(Enum):
    PHI = "phi"
    PI = "pi"
    PHI_D1 = "phi_d1"
    PHI_D2 = "phi_d2"
    PI_D1 = "pi_d1"
    PI_D2 = "pi_d2"
    F = "f"
    G = "g"
    H = "h"
    U = "u"
    V = "v"
    W = "w"
    G_D1 = "g_d1"
    H_D1 = "h_d1"
    V_D1 = "v_d1"
    W_D1 = "w_d1"
    ROT_PHI_NUM = "rot_phi_num"
    ROT_PHI_DEN = "rot_phi_den"
    ROT_PI_NUM = "rot_pi_num"
    ROT_PI_DEN = "rot_pi_den"


@dataclass(frozen=True)
class SeriesSpec:
    family: Family
    nu: float


@dataclass(frozen=True)
class EvalResult:
    value: float
    truncation_index: int
    est_tail: float


def _sum_series(b0, weight, ratio, cfg: Settings):
    """Sum term_n = weight(n) * b_n with b_{n+1} = b_n * ratio(n).

    Stops once ``series_small_streak`` consecutive terms fall below
    ``series_rel_tol`` times the running partial sum; the tail estimate is
    twice the first dropped term.
    """
    if b0 == 0.0:
        return 0.0, 0, 0.0
    b = b0
    total = weight(0) * b
    streak = 0
    n = 0
    while n < cfg.series_max_terms:
        b *= ratio(n)
        n += 1
        term = weight(n) * b
        if not math.isfinite(term):
            raise NumericalError(f"series term overflow at index {n}")
        if abs(term) < cfg.series_rel_tol * abs(total):
            streak += 1
        else:
            streak = 0
        total += term
        if streak >= cfg.series_small_streak:
            first_dropped = weight(n + 1) * b * ratio(n)
            return total, n, 2.0 * abs(first_dropped)
    raise NumericalError("series did not converge within the term cap")


def _one(_n: int) -> float:
    return 1.0


def _half_power(z: float, p: float) -> float:
    """(z/2)**p for z >= 0, with the z = 0 edge handled explicitly."""
    if z == 0.0:
        if p > 0.0:
            return 0.0
        if p == 0.0:
            return 1.0
        raise DomainError("evaluation at z=0 with a negative defining exponent")
    return math.pow(0.5 * z, p)


# Families whose defining series carries fractional powers of z and is
# therefore only evaluated for z >= 0.
_NONNEGATIVE_Z = {
    Family.PHI, Family.PI, Family.PHI_D1, Family.PHI_D2, Family.PI_D1,
    Family.PI_D2, Family.F, Family.U, Family.ROT_PHI_NUM, Family.ROT_PHI_DEN,
    Family.ROT_PI_NUM, Family.ROT_PI_DEN,
}


def _ratio_phi(nu: float, q: float):
    def ratio(n: int) -> float:
        return -q / ((n + 1) * (nu + n + 1) * (nu + 2 * n + 2) * (nu + 2 * n + 3))
    return ratio


def _ratio_pi(nu: float, q: float):
    def ratio(n: int) -> float:
        return -q / ((n + 1) * (nu + n + 1) * (nu + 2 * n + 1) * (nu + 2 * n + 2))
    return ratio


def quartic_series(nu: float, z: float, weight, base: int,
                   cfg: Settings = DEFAULTS):
    """Evaluate sum_n (-1)^n weight(n) (z^4/16)^n / (n! (nu+1)_n (nu+base)_{2n}).

    ``base`` selects the second Pochhammer family: 2 for the cross-product
    (Phi) reductions, 1 for the product (Pi) reductions.  This is the shared
    backbone of every z^4-reduced series in the package.
    """
    q = (0.5 * z) ** 4
    ratio = _ratio_phi(nu, q) if base == 2 else _ratio_pi(nu, q)
    return _sum_series(1.0, weight, ratio, cfg)


def linear_series(nu: float, z: float, weight, base: int,
                  cfg: Settings = DEFAULTS):
    """Like quartic_series but in the fourth-power variable itself.

    Evaluates sum_n (-1)^n weight(n) (z/16)^n / (n! (nu+1)_n (nu+base)_{2n}),
    the natural series of the h/w normalizations whose argument is the
    fourth power of the Phi/Pi argument.
    """
    def ratio_h(n: int) -> float:
        if base == 2:
            return -(z / 16.0) / ((n + 1) * (nu + n + 1) * (nu + 2 * n + 2) * (nu + 2 * n + 3))
        return -(z / 16.0) / ((n + 1) * (nu + n + 1) * (nu + 2 * n + 1) * (nu + 2 * n + 2))
    return _sum_series(1.0, weight, ratio_h, cfg)


def _check_admissible(spec: SeriesSpec, z: float, cfg: Settings) -> None:
    nu = spec.nu
    if not nu > -1.0:
        raise DomainError(f"order nu={nu} must exceed -1")
    if spec.family is Family.F and nu == -0.5:
        raise RemovableExponentError(
            "f is undefined at nu=-1/2: the exponent 1/(2 nu + 1) blows up")
    if spec.family is Family.U and nu == 0.0:
        raise RemovableExponentError(
            "u is undefined at nu=0: the exponent 1/(2 nu) blows up")
    if abs(z) > cfg.z_max:
        raise DomainError(
            f"|z|={abs(z)} exceeds z_max={cfg.z_max}; the ascending series "
            "is refused beyond this range")
    if z < 0.0 and spec.family in _NONNEGATIVE_Z:
        raise DomainError(f"family {spec.family.name} requires z >= 0")


def eval_series(spec: SeriesSpec, z: float, cfg: Settings = DEFAULTS) -> EvalResult:
    """Evaluate one family member at real z with a tail estimate."""
    _check_admissible(spec, z, cfg)
    nu = spec.nu
    fam = spec.family
    q = (0.5 * z) ** 4

    if fam in (Family.PHI, Family.PHI_D1, Family.PHI_D2):
        cgg = gamma(nu + 1.0) * gamma(nu + 2.0)
        ratio = _ratio_phi(nu, q)
        if fam is Family.PHI:
            b0 = 2.0 * _half_power(z, 2.0 * nu + 1.0) / cgg
            value, idx, tail = _sum_series(b0, _one, ratio, cfg)
        elif fam is Family.PHI_D1:
            b0 = _half_power(z, 2.0 * nu) / cgg
            value, idx, tail = _sum_series(
                b0, lambda n: 2.0 * nu + 4.0 * n + 1.0, ratio, cfg)
        else:
            b0 = 0.5 * _half_power(z, 2.0 * nu - 1.0) / cgg
            value, idx, tail = _sum_series(
                b0, lambda n: (2.0 * nu + 4.0 * n + 1.0) * (2.0 * nu + 4.0 * n),
                ratio, cfg)
        return EvalResult(value, idx, tail)

    if fam in (Family.PI, Family.PI_D1, Family.PI_D2):
        cg2 = gamma(nu + 1.0) ** 2
        ratio = _ratio_pi(nu, q)
        if fam is Family.PI:
            b0 = _half_power(z, 2.0 * nu) / cg2
            value, idx, tail = _sum_series(b0, _one, ratio, cfg)
        elif fam is Family.PI_D1:
            b0 = _half_power(z, 2.0 * nu - 1.0) / cg2
            value, idx, tail = _sum_series(b0, lambda n: nu + 2.0 * n, ratio, cfg)
        else:
            b0 = 0.5 * _half_power(z, 2.0 * nu - 2.0) / cg2
            value, idx, tail = _sum_series(
                b0, lambda n: (nu + 2.0 * n) * (2.0 * nu + 4.0 * n - 1.0),
                ratio, cfg)
        return EvalResult(value, idx, tail)

    if fam in (Family.G, Family.G_D1):
        weight = _one if fam is Family.G else (lambda n: 4.0 * n + 1.0)
        value, idx, tail = quartic_series(nu, z, weight, base=2, cfg=cfg)
        if fam is Family.G:
            value, tail = z * value, abs(z) * tail
        return EvalResult(value, idx, tail)

    if fam in (Family.V, Family.V_D1):
        weight = _one if fam is Family.V else (lambda n: 4.0 * n + 1.0)
        value, idx, tail = quartic_series(nu, z, weight, base=1, cfg=cfg)
        if fam is Family.V:
            value, tail = z * value, abs(z) * tail
        return EvalResult(value, idx, tail)

    if fam in (Family.H, Family.H_D1):
        weight = _one if fam is Family.H else (lambda n: n + 1.0)
        value, idx, tail = linear_series(nu, z, weight, base=2, cfg=cfg)
        if fam is Family.H:
            value, tail = z * value, abs(z) * tail
        return EvalResult(value, idx, tail)

    if fam in (Family.W, Family.W_D1):
        weight = _one if fam is Family.W else (lambda n: n + 1.0)
        value, idx, tail = linear_series(nu, z, weight, base=1, cfg=cfg)
        if fam is Family.W:
            value, tail = z * value, abs(z) * tail
        return EvalResult(value, idx, tail)

    if fam in (Family.F, Family.U):
        base = 2 if fam is Family.F else 1
        exponent = 1.0 / (2.0 * nu + 1.0) if fam is Family.F else 1.0 / (2.0 * nu)
        core, idx, tail = quartic_series(nu, z, _one, base=base, cfg=cfg)
        if core <= 0.0:
            raise NumericalError(
                f"{fam.name}: the normalized core series is nonpositive at "
                f"z={z}; the real power normalization only exists below the "
                "first zero")
        value = z * math.pow(core, exponent)
        # First-order propagation of the core tail through the power map.
        tail_out = abs(value) * abs(exponent) * tail / core
        return EvalResult(value, idx, tail_out)

    if fam in (Family.ROT_PHI_NUM, Family.ROT_PHI_DEN,
               Family.ROT_PI_NUM, Family.ROT_PI_DEN):
        if fam in (Family.ROT_PHI_NUM, Family.ROT_PHI_DEN):
            b0 = 1.0 / (gamma(nu + 1.0) * gamma(nu + 2.0))

            def ratio(n: int) -> float:
                return q / ((n + 1) * (nu + n + 1) * (nu + 2 * n + 2) * (nu + 2 * n + 3))
            weight = (lambda n: 4.0 * n + 2.0 * nu + 1.0) \
                if fam is Family.ROT_PHI_NUM else _one
        else:
            b0 = 1.0 / gamma(nu + 1.0) ** 2

            def ratio(n: int) -> float:
                return q / ((n + 1) * (nu + n + 1) * (nu + 2 * n + 1) * (nu + 2 * n + 2))
            weight = (lambda n: 4.0 * n + 2.0 * nu) \
                if fam is Family.ROT_PI_NUM else _one
        value, idx, tail = _sum_series(b0, weight, ratio, cfg)
        return EvalResult(value, idx, tail)

    raise DomainError(f"unknown family {fam!r}")


def bessel_j(nu: float, z: float, cfg: Settings = DEFAULTS) -> float:
    """J_nu(z) by its ascending series (z restricted to [0, z_max])."""
    return _bessel_series(nu, z, sign=-1.0, cfg=cfg)


def bessel_i(nu: float, z: float, cfg: Settings = DEFAULTS) -> float:
    """I_nu(z) by its ascending series (z restricted to [0, z_max])."""
    return _bessel_series(nu, z, sign=1.0, cfg=cfg)


def _bessel_series(nu: float, z: float, sign: float, cfg: Settings) -> float:
    if not nu > -1.0:
        raise DomainError(f"order nu={nu} must exceed -1")
    if z < 0.0 or z > cfg.z_max:
        raise DomainError(f"z={z} outside [0, z_max={cfg.z_max}]")
    b0 = _half_power(z, nu) / gamma(nu + 1.0)
    x = (0.5 * z) ** 2

    def ratio(n: int) -> float:
        return sign * x / ((n + 1) * (nu + n + 1))

    value, _idx, _tail = _sum_series(b0, _one, ratio, cfg)
    return value


def phi_as_crossproduct(nu: float, z: float, cfg: Settings = DEFAULTS) -> float:
    """Phi_nu(z) assembled as J_{nu+1} I_nu + J_nu I_{nu+1}.

    An independent evaluation path from eval_series(PHI): four separate
    one-term-recurrence Bessel series instead of the defining double-Gamma
    series.
    """
    return (bessel_j(nu + 1.0, z, cfg) * bessel_i(nu, z, cfg)
            + bessel_j(nu, z, cfg) * bessel_i(nu + 1.0, z, cfg))


class RotatedKind(Enum):
    F_BRANCH = "f"
    U_BRANCH = "u"


def rotated_ratio(kind: RotatedKind, nu: float, r: float,
                  cfg: Settings = DEFAULTS) -> float:
    """The real series quotient governing the rotated branch.

    For the cross-product branch this is the strictly increasing function
    with limit 2 nu + 1 as r -> 0+, defined only for nu in (-1, -1/2);
    for the product branch the limit is 2 nu on nu in (-1, 0).
    """
    if r <= 0.0:
        raise DomainError("rotated_ratio requires r > 0")
    if kind is RotatedKind.F_BRANCH:
        if not (-1.0 < nu < -0.5):
            raise DomainError("F_BRANCH requires nu in (-1, -1/2)")
        num = eval_series(SeriesSpec(Family.ROT_PHI_NUM, nu), r, cfg).value
        den = eval_series(SeriesSpec(Family.ROT_PHI_DEN, nu), r, cfg).value
    else:
        if not (-1.0 < nu < 0.0):
            raise DomainError("U_BRANCH requires nu in (-1, 0)")
        num = eval_series(SeriesSpec(Family.ROT_PI_NUM, nu), r, cfg).value
        den = eval_series(SeriesSpec(Family.ROT_PI_DEN, nu), r, cfg).value
    return num / den
