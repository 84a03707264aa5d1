"""Power sums of reciprocal fourth powers of zeros, three independent ways.

Each zero family of the product/cross-product theory comes with a
z^4-reduced entire series of genus 0 whose roots are the fourth powers of
the zeros.  The sums S_k = sum_n zero_n^{-4k} are computed by

  CLOSED_FORM  closed-form rational functions of nu (exact in rational
               arithmetic whenever nu is rational),
  NEWTON       Newton's identities applied to the reduced series
               coefficients (independent of the closed forms), and
  DIRECT       explicit summation over computed zeros with an analytic
               integral tail bound (factor-2 safety margin).

Family tags and their zero families:
  TAU     : gamma'  (cross-product derivative)      k = 1..4
  SIGMA   : zeta    (z Phi' - 2 nu Phi)             k = 1..4
  RHO     : xi      (z Phi' - (2 nu - 3) Phi)       k = 1..4
  ETA     : t       (product derivative)            k = 1..4
  VARRHO  : theta   (z Pi' - (2 nu - 1) Pi)         k = 1..4
  Q       : omega   (z Pi' - (2 nu - 4) Pi)         k = 1..4
  KAPPA   : zeros of (z g')'                        k = 1..3
  ALPHA_H : zeros of (z h')' (quartic variable)     k = 1..3
  EPSILON : zeros of (z v')'                        k = 1..3
  IOTA    : zeros of (z w')' (quartic variable)     k = 1..3
  J4      : Bessel zeros j                          k = 1
  GAMMA4  : cross-product zeros gamma               k = 1
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational

from .config import DEFAULTS, Settings
from .errors import DomainError
from .series import quartic_series
from .zeros import FamilyTag, ZeroFamily, refine_root, zeros


class SumFamily(Enum):
    TAU = "tau"
    SIGMA = "sigma"
    RHO = "rho"
    ETA = "eta"
    VARRHO = "varrho"
    Q = "q"
    KAPPA = "kappa"
    ALPHA_H = "alpha_h"
    EPSILON = "epsilon"
    IOTA = "iota"
    J4 = "j4"
    GAMMA4 = "gamma4"


class Method(Enum):
    CLOSED_FORM = "closed"
    NEWTON = "newton"
    DIRECT = "direct"


@dataclass(frozen=True)
class PowerSums:
    family: SumFamily
    nu: object
    values: tuple
    method: Method


K_RANGE = {
    SumFamily.TAU: 4, SumFamily.SIGMA: 4, SumFamily.RHO: 4, SumFamily.ETA: 4,
    SumFamily.VARRHO: 4, SumFamily.Q: 4,
    SumFamily.KAPPA: 3, SumFamily.ALPHA_H: 3, SumFamily.EPSILON: 3,
    SumFamily.IOTA: 3,
    SumFamily.J4: 1, SumFamily.GAMMA4: 1,
}

# Admissible order range (open lower endpoint) for each family.
_NU_FLOOR = {SumFamily.TAU: -0.5, SumFamily.ETA: 0.0}

# Integer coefficient lists (ascending degree) of the twenty auxiliary
# polynomials appearing in the higher-order closed forms.
NU_POLYS = {
    1: (48267, 84874, 57349, 18590, 2876, 168),
    2: (675828138, 1877042671, 2256870262, 1542867228, 661304856,
        184372941, 33438984, 3802808, 245792, 6864),
    3: (48267, 32944, 7969, 824, 32),
    4: (675828138, 907600351, 521177838, 167370756, 32951080,
        4085373, 312736, 13568, 256),
    5: (5598, 3275, 593, 37, 1),
    6: (15167442, 18391471, 9218508, 2477862, 388627, 36519, 2062, 68, 1),
    7: (360, 717, 533, 173, 21),
    8: (483840, 1698048, 2574064, 2194202, 1148139, 377494, 76280, 8688, 429),
    9: (64469, 78453, 35977, 7753, 792, 32),
    10: (142215442, 243560267, 175324950, 69429816, 16606040,
         2469757, 224672, 11520, 256),
    11: (7834, 8919, 3554, 584, 36, 1),
    12: (3396826, 5461979, 3542412, 1199202, 229535, 25303, 1610, 60, 1),
    13: (12257, 5301, 544),
    14: (2123797, 1556904, 417279, 48784, 2112),
    15: (293, 108, 7),
    16: (7834, 4965, 1059, 91, 3),
    17: (7419, 4213, 544),
    18: (8300897, 10459449, 5112301, 1212429, 140016, 6336),
    19: (183, 94, 7),
    20: (32138, 37827, 16222, 3108, 264, 9),
}


def _exactify(nu):
    """Rational orders go through exact arithmetic, floats stay floats."""
    if isinstance(nu, Rational) and not isinstance(nu, float):
        return Fraction(nu)
    return float(nu)


def poly(index: int, nu):
    """Evaluate auxiliary polynomial number ``index`` at nu (Horner)."""
    acc = nu * 0
    for c in reversed(NU_POLYS[index]):
        acc = acc * nu + c
    return acc


def poch(x, n: int):
    """Pochhammer symbol (x)_n = x (x+1) ... (x+n-1)."""
    acc = x * 0 + 1
    for i in range(n):
        acc = acc * (x + i)
    return acc


def _check_family_nu(family: SumFamily, nu) -> None:
    floor = _NU_FLOOR.get(family, -1.0)
    if not nu > floor:
        raise DomainError(f"{family.name} requires nu > {floor}, got {nu}")


def closed_form_sum(family: SumFamily, k: int, nu):
    """The closed-form rational expression for S_k, evaluated at nu."""
    if k < 1 or k > K_RANGE[family]:
        raise DomainError(f"k={k} out of range 1..{K_RANGE[family]} for {family.name}")
    v = _exactify(nu)
    _check_family_nu(family, v)
    p3 = poch(v + 1, 3)

    if family is SumFamily.TAU:
        w = 2 * v + 1
        if k == 1:
            return (2 * v + 5) / (16 * w * p3)
        if k == 2:
            return (((20 * v + 184) * v + 529) * v + 473) / (
                2 ** 8 * w ** 2 * p3 * poch(v + 1, 5))
        if k == 3:
            return poly(1, v) / (2 ** 11 * w ** 3 * p3 ** 2 * poch(v + 1, 7))
        return poly(2, v) / (2 ** 16 * w ** 4 * p3 ** 2 * poch(v + 1, 5) * poch(v + 1, 9))

    if family is SumFamily.SIGMA:
        if k == 1:
            return 5 / (16 * p3)
        if k == 2:
            return ((16 * v + 189) * v + 473) / (2 ** 8 * p3 * poch(v + 1, 5))
        if k == 3:
            return poly(3, v) / (2 ** 11 * p3 ** 2 * poch(v + 1, 7))
        return poly(4, v) / (2 ** 16 * p3 ** 2 * poch(v + 1, 5) * poch(v + 1, 9))

    if family is SumFamily.RHO:
        if k == 1:
            return 1 / (8 * p3)
        if k == 2:
            return ((v + 24) * v + 71) / (2 ** 8 * p3 * poch(v + 1, 5))
        if k == 3:
            return poly(5, v) / (2 ** 12 * p3 ** 2 * poch(v + 1, 7))
        return poly(6, v) / (2 ** 16 * p3 ** 2 * poch(v + 1, 5) * poch(v + 1, 9))

    if family is SumFamily.ETA:
        if k == 1:
            return 1 / (16 * v * (v + 1) ** 2)
        if k == 2:
            return ((5 * v + 15) * v + 12) / (
                2 ** 8 * poch(v, 3) * poch(v, 4) * (v + 1) ** 2)
        if k == 3:
            return poly(7, v) / (2 ** 11 * v * poch(v, 4) * poch(v, 6) * (v + 1) ** 4)
        return poly(8, v) / (
            2 ** 16 * poch(v, 3) ** 2 * poch(v, 5) * poch(v, 8) * (v + 1) ** 4)

    if family is SumFamily.VARRHO:
        if k == 1:
            return 5 / (16 * (v + 1) ** 2 * (v + 2))
        if k == 2:
            return ((16 * v + 157) * v + 291) / (
                2 ** 8 * poch(v + 1, 4) * (v + 1) ** 3 * (v + 2))
        if k == 3:
            return poly(9, v) / (
                2 ** 11 * p3 * poch(v + 1, 6) * (v + 1) ** 4 * (v + 2))
        return poly(10, v) / (
            2 ** 16 * poch(v + 1, 4) * poch(v + 1, 8) * (v + 1) ** 6 * (v + 2) ** 2)

    if family is SumFamily.Q:
        if k == 1:
            return 1 / (8 * (v + 1) ** 2 * (v + 2))
        if k == 2:
            return ((v + 22) * v + 45) / (
                2 ** 8 * poch(v + 1, 4) * (v + 1) ** 3 * (v + 2))
        if k == 3:
            return poly(11, v) / (
                2 ** 12 * p3 * poch(v + 1, 6) * (v + 1) ** 4 * (v + 2))
        return poly(12, v) / (
            2 ** 16 * poch(v + 1, 4) * poch(v + 1, 8) * (v + 1) ** 6 * (v + 2) ** 2)

    if family is SumFamily.KAPPA:
        if k == 1:
            return 25 / (16 * p3)
        if k == 2:
            return poly(13, v) / (2 ** 8 * p3 * poch(v + 1, 5))
        return 3 * poly(14, v) / (2 ** 11 * p3 ** 2 * poch(v + 1, 7))

    if family is SumFamily.ALPHA_H:
        if k == 1:
            return 1 / (4 * p3)
        if k == 2:
            return poly(15, v) / (2 ** 8 * p3 * poch(v + 1, 5))
        return 3 * poly(16, v) / (2 ** 11 * p3 ** 2 * poch(v + 1, 7))

    if family is SumFamily.EPSILON:
        if k == 1:
            return 25 / (16 * (v + 1) ** 2 * (v + 2))
        if k == 2:
            return poly(17, v) / (2 ** 8 * poch(v + 1, 4) * (v + 1) ** 3 * (v + 2))
        return poly(18, v) / (2 ** 11 * p3 * poch(v + 1, 6) * (v + 1) ** 4 * (v + 2))

    if family is SumFamily.IOTA:
        if k == 1:
            return 1 / (4 * (v + 1) ** 2 * (v + 2))
        if k == 2:
            return poly(19, v) / (2 ** 8 * poch(v + 1, 4) * (v + 1) ** 3 * (v + 2))
        return poly(20, v) / (2 ** 11 * p3 * poch(v + 1, 6) * (v + 1) ** 4 * (v + 2))

    if family is SumFamily.J4:
        return 1 / (16 * (v + 1) ** 2 * (v + 2))

    if family is SumFamily.GAMMA4:
        return 1 / (16 * (v + 1) * (v + 2) * (v + 3))

    raise DomainError(f"unknown family {family!r}")


# Reduced-series descriptors: (weight(n, nu), pochhammer base).
def _weight_one(n, nu):
    return 1

_REDUCED = {
    SumFamily.TAU: (lambda n, nu: (2 * nu + 4 * n + 1) / (2 * nu + 1), 2),
    SumFamily.SIGMA: (lambda n, nu: 4 * n + 1, 2),
    SumFamily.RHO: (lambda n, nu: n + 1, 2),
    SumFamily.ETA: (lambda n, nu: (nu + 2 * n) / nu, 1),
    SumFamily.VARRHO: (lambda n, nu: 4 * n + 1, 1),
    SumFamily.Q: (lambda n, nu: n + 1, 1),
    SumFamily.KAPPA: (lambda n, nu: (4 * n + 1) ** 2, 2),
    SumFamily.ALPHA_H: (lambda n, nu: (n + 1) ** 2, 2),
    SumFamily.EPSILON: (lambda n, nu: (4 * n + 1) ** 2, 1),
    SumFamily.IOTA: (lambda n, nu: (n + 1) ** 2, 1),
    SumFamily.J4: (_weight_one, 1),
    SumFamily.GAMMA4: (_weight_one, 2),
}


def reduced_coefficients(family: SumFamily, nu, n_terms: int):
    """Coefficients c_0..c_{n_terms} of the reduced series in x = z^4.

    The reduced series is prod_n (1 - x / zero_n^4) = sum_k c_k (-x)^k...
    concretely sum_k c_k x^k with alternating signs folded in, c_0 = 1.
    Exact when nu is rational.
    """
    v = _exactify(nu)
    _check_family_nu(family, v)
    weight, base = _REDUCED[family]
    one = Fraction(1) if isinstance(v, Fraction) else 1.0
    coeffs = []
    b = one  # b_n = 1 / (16^n n! (nu+1)_n (nu+base)_{2n}), signless
    for n in range(n_terms + 1):
        coeffs.append(((-1) ** n) * weight(n, v) * b)
        b = b / (16 * (n + 1) * (v + n + 1) * (v + base + 2 * n) * (v + base + 2 * n + 1))
    return coeffs


def newton_sums_from_coefficients(coeffs, k_max: int):
    """Power sums p_k of the reciprocal roots of 1 + c_1 x + c_2 x^2 + ...

    Uses Newton's identities with e_k = (-1)^k c_k; requires c_0 = 1.
    """
    if coeffs[0] != 1:
        raise DomainError("reduced series must have constant term 1")
    e = [((-1) ** k) * coeffs[k] if k < len(coeffs) else coeffs[0] * 0
         for k in range(k_max + 1)]
    p = [None] * (k_max + 1)
    for k in range(1, k_max + 1):
        acc = ((-1) ** (k - 1)) * k * e[k]
        for i in range(1, k):
            acc += ((-1) ** (i - 1)) * e[i] * p[k - i]
        p[k] = acc
    return p[1:]


def newton_sums(family: SumFamily, nu, k_max: int | None = None) -> PowerSums:
    """Power sums from the reduced series coefficients (Newton route)."""
    if k_max is None:
        k_max = K_RANGE[family]
    coeffs = reduced_coefficients(family, nu, k_max)
    values = tuple(newton_sums_from_coefficients(coeffs, k_max))
    return PowerSums(family, nu, values, Method.NEWTON)


# ---------------------------------------------------------------------------
# Direct summation over computed zeros.

_ZERO_FAMILY = {
    SumFamily.TAU: FamilyTag.GAMMA_PRIME,
    SumFamily.SIGMA: FamilyTag.ZETA,
    SumFamily.RHO: FamilyTag.XI,
    SumFamily.ETA: FamilyTag.T,
    SumFamily.VARRHO: FamilyTag.THETA_CAP,
    SumFamily.Q: FamilyTag.OMEGA,
    SumFamily.J4: FamilyTag.J,
    SumFamily.GAMMA4: FamilyTag.GAMMA,
}

# Auxiliary derivative families: (series weight, pochhammer base, parent
# zero family whose zeros bracket them by Rolle interlacing).
_AUX = {
    SumFamily.KAPPA: (lambda n: (4.0 * n + 1.0) ** 2, 2, FamilyTag.ZETA),
    SumFamily.ALPHA_H: (lambda n: (n + 1.0) ** 2, 2, FamilyTag.XI),
    SumFamily.EPSILON: (lambda n: (4.0 * n + 1.0) ** 2, 1, FamilyTag.THETA_CAP),
    SumFamily.IOTA: (lambda n: (n + 1.0) ** 2, 1, FamilyTag.OMEGA),
}


@dataclass(frozen=True)
class DirectSum:
    value: float
    tail_bound: float
    n_used: int


def family_zeros(family: SumFamily, nu: float, n_terms: int,
                 cfg: Settings = DEFAULTS):
    """The zeros whose reciprocal fourth powers the family sums.

    For the four derivative families the zeros come from the ascending
    series, which is only trusted up to cfg.z_max; fewer than n_terms
    zeros may be returned there.
    """
    if family in _ZERO_FAMILY:
        table = zeros(ZeroFamily(_ZERO_FAMILY[family], float(nu)), n_terms, cfg)
        return list(table.zeros)
    weight, base, parent_tag = _AUX[family]
    parent = zeros(ZeroFamily(parent_tag, float(nu)), n_terms, cfg).zeros

    def f(z: float) -> float:
        return quartic_series(float(nu), z, weight, base, cfg)[0]

    out = []
    prev = 1e-6 * parent[0]
    for hi in parent:
        if hi > cfg.z_max:
            break
        root, _res = refine_root(f, prev * (1.0 + 1e-12), hi * (1.0 - 1e-12), cfg)
        out.append(float(root))
        prev = hi
    return out


def direct_sum(family: SumFamily, k: int, nu: float, n_terms: int,
               cfg: Settings = DEFAULTS) -> DirectSum:
    """sum_{n <= n_terms} zero_n^{-4k} plus an analytic tail bound.

    Tail: zeros beyond the last computed one are minorized by the linear
    envelope z_N + m*d with d = 0.9 * min of the last observed spacings
    (zero spacings tend to a constant), so the tail is at most
    integral of (z_N + x d)^{-4k} dx = z_N^{1-4k} / (d (4k-1)),
    times the configured safety factor.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    zs = family_zeros(family, nu, n_terms, cfg)
    if len(zs) < 2:
        raise DomainError("need at least two zeros for a spacing estimate")
    value = math.fsum(z ** (-4.0 * k) for z in zs)
    spacings = [zs[i + 1] - zs[i] for i in range(max(0, len(zs) - 5), len(zs) - 1)]
    d = 0.9 * min(spacings)
    z_last = zs[-1]
    tail = cfg.tail_safety * z_last ** (1.0 - 4.0 * k) / (d * (4.0 * k - 1.0))
    return DirectSum(value, tail, len(zs))


def power_sums(family: SumFamily, nu, method: Method = Method.CLOSED_FORM,
               k_max: int | None = None, n_terms: int = 200,
               cfg: Settings = DEFAULTS) -> PowerSums:
    """Uniform front-end over the three computation routes."""
    if k_max is None:
        k_max = K_RANGE[family]
    if method is Method.CLOSED_FORM:
        values = tuple(closed_form_sum(family, k, nu) for k in range(1, k_max + 1))
        return PowerSums(family, nu, values, method)
    if method is Method.NEWTON:
        return newton_sums(family, nu, k_max)
    values = tuple(direct_sum(family, k, float(nu), n_terms, cfg).value
                   for k in range(1, k_max + 1))
    return PowerSums(family, nu, values, method)
