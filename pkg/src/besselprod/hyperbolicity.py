"""Exact certification that Jensen polynomials are hyperbolic.

The z^4-reduced cross-product and product series have Jensen polynomials

    P_n(zeta) = sum_k C(n,k) (-zeta)^k / ((nu+1)_k (nu+2)_{2k})   (PHI)
    P_n(zeta) = sum_k C(n,k) (-zeta)^k / ((nu+1)_k (nu+1)_{2k})   (PI)

which are hyperbolic with all roots positive.  For rational nu this is
certified in exact rational arithmetic: a Sturm chain built from integer
pseudo-remainders (content-stripped at every step to control coefficient
growth) counts the real roots on (0, oo); the count must equal the degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError


class JensenFamily(Enum):
    PHI = "phi"
    PI = "pi"


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, ascending degree."""
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise DomainError("leading coefficient must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def jensen_poly(family: JensenFamily, nu: Fraction, n: int) -> RationalPoly:
    """The degree-n Jensen polynomial of the reduced series, exactly."""
    nu = Fraction(nu)
    if nu <= -1:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if not 0 <= n <= 64:
        raise DomainError(f"n must lie in 0..64, got {n}")
    coeffs = []
    denom = Fraction(1)
    for k in range(n + 1):
        if k > 0:
            # extend (nu+1)_k and (nu+base)_{2k} by one index each
            base = 2 if family is JensenFamily.PHI else 1
            factors = (nu + k, nu + base + 2 * k - 2, nu + base + 2 * k - 1)
            for fct in factors:
                if fct == 0:
                    raise DomainError(f"Pochhammer factor vanishes at k={k}")
            denom *= factors[0] * factors[1] * factors[2]
        coeffs.append(Fraction(math.comb(n, k)) * (-1) ** k / denom)
    return RationalPoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# Exact Sturm machinery over integer coefficient lists (ascending degree).

def _to_int_poly(p: RationalPoly) -> list:
    lcm = 1
    for c in p.coefficients:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return _strip_content([int(c * lcm) for c in p.coefficients])


def _strip_content(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        return []
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
    return [c // g for c in coeffs]


def _deriv(coeffs: list) -> list:
    return [k * c for k, c in enumerate(coeffs)][1:]


def _pseudo_rem(a: list, b: list) -> list:
    """Integer pseudo-remainder of a by b, with the sign of the rational
    remainder (the result is a positive constant times rem(a, b))."""
    r = list(a)
    lc = b[-1]
    steps = 0
    while len(r) >= len(b):
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - len(b)
        lead = r[-1]
        r = [c * lc for c in r]
        for i in range(len(b)):
            r[shift + i] -= lead * b[i]
        r.pop()
        steps += 1
    if lc < 0 and steps % 2 == 1:
        r = [-c for c in r]
    return _strip_content(r)


def _sturm_chain(coeffs: list) -> list:
    chain = [_strip_content(list(coeffs))]
    d = _strip_content(_deriv(chain[0]))
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        r = _pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_at(coeffs: list, x) -> int:
    if x == math.inf:
        v = coeffs[-1]
    elif x == -math.inf:
        v = coeffs[-1] * (-1) ** (len(coeffs) - 1)
    else:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        v = acc
    return (v > 0) - (v < 0)


def _sign_changes(chain: list, x) -> int:
    signs = [s for s in (_sign_at(c, x) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _int_gcd_poly(a: list, b: list) -> list:
    """Polynomial gcd (up to content) via the pseudo-remainder sequence."""
    a, b = _strip_content(list(a)), _strip_content(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        a, b = b, _pseudo_rem(a, b)
    return a


def _exact_div(a: list, b: list) -> list:
    """Exact polynomial division a / b over the rationals."""
    a = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        q = a[-1] / b[-1]
        out[shift] = q
        for i in range(len(b)):
            a[shift + i] -= q * b[i]
        a.pop()
    lcm = 1
    for c in out:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return _strip_content([int(c * lcm) for c in out])


def real_root_count(p: RationalPoly, interval=None) -> int:
    """Real roots of p in the interval, counted with multiplicity.

    ``interval`` is a pair (a, b) of rationals or +-math.inf with a < b,
    counting roots in the open-closed range (a, b]; None means the whole
    real line.  Multiple roots are handled by square-free reduction: the
    count of p is the distinct-root count of its square-free part plus the
    count of gcd(p, p'), recursively.
    """
    coeffs = _to_int_poly(p)
    if not coeffs:
        raise DomainError("zero polynomial has no root count")
    if interval is None:
        a, b = -math.inf, math.inf
    else:
        a, b = interval
        if not a < b:
            raise DomainError("interval endpoints must satisfy a < b")
    return _count_with_multiplicity(coeffs, a, b)


def _count_with_multiplicity(coeffs: list, a, b) -> int:
    if len(coeffs) <= 1:
        return 0
    g = _int_gcd_poly(coeffs, _deriv(coeffs))
    if len(g) > 1:
        squarefree = _exact_div(coeffs, g)
        return _count_distinct(squarefree, a, b) + _count_with_multiplicity(g, a, b)
    return _count_distinct(coeffs, a, b)


def _count_distinct(coeffs: list, a, b) -> int:
    chain = _sturm_chain(coeffs)
    return _sign_changes(chain, a) - _sign_changes(chain, b)


@dataclass(frozen=True)
class CertificationReport:
    family: JensenFamily
    nu: Fraction
    n_max: int
    failures: tuple
    certified: bool


def certify_hyperbolic(family: JensenFamily, nu: Fraction,
                       n_max: int = 32) -> CertificationReport:
    """Certify that P_n has exactly n positive real roots for n <= n_max."""
    nu = Fraction(nu)
    if not 1 <= n_max <= 64:
        raise DomainError(f"n_max must lie in 1..64, got {n_max}")
    failures = []
    for n in range(1, n_max + 1):
        p = jensen_poly(family, nu, n)
        pos = real_root_count(p, (Fraction(0), math.inf))
        total = real_root_count(p)
        if pos != n or total != n:
            failures.append((n, pos, total))
    return CertificationReport(family, nu, n_max, tuple(failures), not failures)
