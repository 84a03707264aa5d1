"""Self-check suites behind the ``verify`` command.

Each suite returns a list of CheckResult records; a False flag anywhere
means the build violates one of the library's cross-checked invariants.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import convex_chain, starlike_chain
from .config import DEFAULTS, Settings
from .radii import Kind
from .rayleigh import (K_RANGE, SumFamily, closed_form_sum, direct_sum,
                       newton_sums)
from .thresholds import (convex_threshold, special_roots, starlike_threshold)
from .zeros import FamilyTag, ZeroFamily, bessel_zero, zeros


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str


def _grid(kind: Kind):
    if kind is Kind.U:
        return (0.5, 1.0, 2.5)
    if kind is Kind.F:
        return (-0.4, 0.0, 0.5, 1.0, 2.5)
    return (-0.4, 0.0, 0.5, 1.0, 2.5)


def suite_interlacing(cfg: Settings = DEFAULTS) -> list:
    """Zero families interlace as the product structure dictates."""
    out = []
    n = 10
    for nu in (-0.4, 0.0, 0.5, 1.0, 2.5):
        js = zeros(ZeroFamily(FamilyTag.J, nu), n + 1, cfg).zeros
        gs = zeros(ZeroFamily(FamilyTag.GAMMA, nu), n, cfg).zeros
        ok = all(js[i] < gs[i] < js[i + 1] for i in range(n))
        out.append(CheckResult("interlacing", f"j/gamma nu={nu}", ok,
                               "j_n < gamma_n < j_n+1"))
        for tag in (FamilyTag.GAMMA_PRIME, FamilyTag.ZETA, FamilyTag.XI):
            if tag is FamilyTag.GAMMA_PRIME and not nu > -0.5:
                continue
            zs = zeros(ZeroFamily(tag, nu), n, cfg).zeros
            ok = zs[0] < gs[0] and all(
                gs[i] < zs[i + 1] < gs[i + 1] for i in range(n - 1))
            out.append(CheckResult("interlacing", f"{tag.value}/gamma nu={nu}",
                                   ok, "derivative zeros interlace gamma"))
        for tag in (FamilyTag.T, FamilyTag.THETA_CAP, FamilyTag.OMEGA):
            if tag is FamilyTag.T and not nu > 0.0:
                continue
            zs = zeros(ZeroFamily(tag, nu), n, cfg).zeros
            ok = zs[0] < js[0] and all(
                js[i] < zs[i + 1] < js[i + 1] for i in range(n - 1))
            out.append(CheckResult("interlacing", f"{tag.value}/j nu={nu}",
                                   ok, "product-derivative zeros interlace j"))
    for tag, fn in (("j1", lambda nu: bessel_zero(nu, 1)),
                    ("gamma1", lambda nu: zeros(
                        ZeroFamily(FamilyTag.GAMMA, nu), 1, cfg).zeros[0])):
        grid = [-0.9 + 0.3 * i for i in range(10)]
        vals = [fn(nu) for nu in grid]
        ok = all(a < b for a, b in zip(vals, vals[1:]))
        out.append(CheckResult("interlacing", f"{tag} increasing in nu", ok,
                               "first zero strictly increasing"))
    return out


def suite_sandwich(cfg: Settings = DEFAULTS) -> list:
    """Euler-Rayleigh chains bracket the computed radii."""
    out = []
    for kind in Kind:
        for nu in _grid(kind):
            c = starlike_chain(kind, nu, cfg)
            out.append(CheckResult(
                "sandwich", f"starlike {kind.value} nu={nu}", c.verdict,
                f"radius={c.radius!r}"))
    for kind in (Kind.G, Kind.H, Kind.V, Kind.W):
        for nu in _grid(kind):
            c = convex_chain(kind, nu, cfg)
            out.append(CheckResult(
                "sandwich", f"convex {kind.value} nu={nu}", c.verdict,
                f"radius={c.radius!r}"))
    return out


def suite_sums(cfg: Settings = DEFAULTS) -> list:
    """Closed forms, Newton's identities and direct summation agree."""
    out = []
    nus = (Fraction(-2, 5), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(5, 2))
    for family in SumFamily:
        for nu in nus:
            if family is SumFamily.ETA and nu <= 0:
                continue
            closed = [closed_form_sum(family, k, nu)
                      for k in range(1, K_RANGE[family] + 1)]
            newton = newton_sums(family, nu).values
            ok = tuple(closed) == tuple(newton)
            out.append(CheckResult(
                "sums", f"closed=newton {family.value} nu={nu}", ok,
                "exact rational agreement"))
    for family in (SumFamily.J4, SumFamily.GAMMA4, SumFamily.TAU, SumFamily.ETA):
        nu = Fraction(5, 2)
        ds = direct_sum(family, 1, float(nu), 200, cfg)
        exact = float(closed_form_sum(family, 1, nu))
        # roundoff allowance: each zero carries ~1e-15 relative error
        slack = ds.tail_bound + 1e-12 * exact
        ok = abs(exact - ds.value) <= slack
        out.append(CheckResult(
            "sums", f"direct {family.value} nu=5/2", ok,
            f"gap={exact - ds.value!r} tail={ds.tail_bound!r}"))
    return out


def suite_thresholds(cfg: Settings = DEFAULTS) -> list:
    """Threshold regression values and special roots."""
    out = []
    expected = {Kind.F: -0.44, Kind.G: -0.87, Kind.H: -0.94,
                Kind.U: 0.05, Kind.V: -0.53, Kind.W: -0.69}
    for kind, target in expected.items():
        nu = starlike_threshold(kind, 0.0, cfg).nu
        # reference values are two-decimal truncations (digits cut, not
        # rounded): compare after truncating toward zero
        import math as _math
        trunc = _math.copysign(_math.floor(abs(nu) * 100.0) / 100.0, nu)
        ok = abs(trunc - target) < 1e-9
        out.append(CheckResult("thresholds", f"starlike {kind.value} alpha=0",
                               ok, f"nu={nu!r} expected {target}..."))
    for kind in (Kind.G, Kind.H, Kind.V, Kind.W):
        ths = [convex_threshold(kind, a, cfg).nu for a in (0.0, 0.25, 0.5, 0.75)]
        ok = all(a < b for a, b in zip(ths, ths[1:]))
        out.append(CheckResult("thresholds", f"convex {kind.value} monotone",
                               ok, f"{ths!r}"))
    sr = special_roots(cfg)
    out.append(CheckResult("thresholds", "nu_circ", abs(sr.nu_circ + 0.77) < 0.005,
                           f"{sr.nu_circ!r}"))
    out.append(CheckResult("thresholds", "nu_star", abs(sr.nu_star + 0.97) < 0.005,
                           f"{sr.nu_star!r}"))
    ok = abs(bessel_zero(sr.nu_circ, 1) - 1.0) < 1e-9
    out.append(CheckResult("thresholds", "j1(nu_circ)=1", ok, "consistency"))
    return out


SUITES = {
    "interlacing": suite_interlacing,
    "sandwich": suite_sandwich,
    "sums": suite_sums,
    "thresholds": suite_thresholds,
}


def run_suite(name: str, cfg: Settings = DEFAULTS) -> list:
    if name == "all":
        results = []
        for fn in SUITES.values():
            results.extend(fn(cfg))
        return results
    return SUITES[name](cfg)
