"""Shared numerical configuration.

All tolerances live in one frozen dataclass passed by value; there is no
global mutable state, so every operation stays pure and thread-safe.
"""
from __future__ import annotations

from dataclasses import dataclass, replace, fields


@dataclass(frozen=True)
class Settings:
    """Numerical policy knobs.

    series_rel_tol: a series term counts as negligible when it is below
        this fraction of the running partial sum.
    series_small_streak: number of consecutive negligible terms required
        before truncating.
    series_max_terms: hard cap on the number of series terms.
    z_max: largest |z| accepted by the ascending-series evaluator; beyond
        this the library refuses rather than silently losing precision.
    zero_cap: largest zero index n the zero finder will produce.
    tail_safety: multiplicative safety factor on analytic tail bounds.
    bisect_width: bracketed roots are bisected down to this interval width
        before the final polishing steps.
    nu_scan_step: step used when scanning for sign changes in the order nu.
    """

    series_rel_tol: float = 1e-17
    series_small_streak: int = 3
    series_max_terms: int = 400
    z_max: float = 60.0
    zero_cap: int = 500
    tail_safety: float = 2.0
    bisect_width: float = 1e-10
    nu_scan_step: float = 0.05


DEFAULTS = Settings()

# Keys accepted in a config file, mapped to their parsers.
_PARSERS = {f.name: (int if f.type == "int" else float) for f in fields(Settings)}


def load_settings(path: str) -> Settings:
    """Read ``key = value`` lines (``#`` comments allowed) into Settings."""
    overrides: dict[str, object] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _PARSERS:
                raise ValueError(f"{path}:{lineno}: unknown setting {key!r}")
            overrides[key] = _PARSERS[key](value.strip())
    return replace(DEFAULTS, **overrides)
