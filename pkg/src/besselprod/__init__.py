"""Bessel product and cross-product series: zeros, radii, certificates.

The library is organized bottom-up:

- ``gammafn``        real gamma function (Lanczos)
- ``series``         ascending series for the cross-product, the product,
                     six normalized forms and their z^4-reduced versions
- ``zeros``          ordered positive zeros of eight families, bracketed
- ``rayleigh``       power sums of reciprocal fourth powers, three ways
- ``radii``          radii of starlikeness and convexity
- ``bounds``         Euler-Rayleigh bound chains sandwiching the radii
- ``thresholds``     critical orders making the unit disk maximal
- ``hyperbolicity``  exact Sturm certification of Jensen polynomials
- ``cli``            command-line front end (``besselprod``)
"""

from .config import DEFAULTS, Settings, load_settings
from .errors import (BesselprodError, BracketNotFoundError, BranchError,
                     DomainError, NumericalError, RemovableExponentError,
                     VerificationError)
from .series import (Family, RotatedKind, SeriesSpec, bessel_i, bessel_j,
                     eval_series, phi_as_crossproduct, rotated_ratio)
from .zeros import (FamilyTag, ZeroFamily, ZeroTable, bessel_zero,
                    refine_root, zeros)
from .rayleigh import (K_RANGE, DirectSum, Method, PowerSums, SumFamily,
                       closed_form_sum, direct_sum, newton_sums, power_sums)
from .radii import (Branch, Kind, RadiusQuery, RadiusResult, radius_convex,
                    radius_starlike, radius_starlike_rotated)
from .bounds import BoundChain, Mode, convex_chain, starlike_chain
from .thresholds import (SpecialRoots, Threshold, bessel_tail_sum,
                         convex_threshold, special_roots, starlike_threshold,
                         theta, underline_nu)
from .hyperbolicity import (CertificationReport, JensenFamily, RationalPoly,
                            certify_hyperbolic, jensen_poly, real_root_count)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"
