"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: usage errors exit 2 (argparse),
DomainError exits 3, VerificationError exits 4 and NumericalError exits 1.
"""


class BesselprodError(Exception):
    """Base class for all library errors."""


class DomainError(BesselprodError):
    """Arguments outside the mathematical domain of an operation."""


class RemovableExponentError(DomainError):
    """The normalizing exponent 1/(2*nu+1) or 1/(2*nu) blows up.

    Raised for f at nu = -1/2 and for u at nu = 0, where the defining
    power-normalization is singular.
    """


class BranchError(DomainError):
    """A principal-branch routine was called inside the rotated window."""


class NumericalError(BesselprodError):
    """Internal numerical failure (overflow, no convergence, lost bracket)."""


class BracketNotFoundError(NumericalError):
    """A theory-guaranteed bracket showed no sign change.

    This signals a series/precision bug and must abort the computation;
    guessing a root without a bracket is never acceptable.
    """


class VerificationError(BesselprodError):
    """A verification suite detected a failed invariant."""
