"""Exception types raised by the library.

Every failure mode that callers are expected to handle has its own class;
plain ValueError is reserved for malformed inputs (bad q, bad boundary rows).
"""


class QwDiracError(Exception):
    """Base class for all library-specific failures."""


class FixedPointDerivativeUnavailable(QwDiracError):
    """Derivative requested at the lattice fixed point, no declared value,
    and the lattice-limit estimate did not stabilize."""


class SeriesDivergence(QwDiracError):
    """A Jackson-Norlund partial sum failed the stabilization test within
    the iteration cap."""


class PrecisionLoss(QwDiracError):
    """An alternating-series evaluation cancelled so severely that the
    result carries no trustworthy digits at the requested tolerance."""

    def __init__(self, msg, cancellation=None):
        super().__init__(msg)
        self.cancellation = cancellation


class ZeroNotBracketed(QwDiracError):
    """No sign change found in the scanned window around a zero seed."""


class NoConvergence(QwDiracError):
    """Picard iteration hit max_iter with the sup-norm change still above
    tolerance.  Carries the convergence report for diagnosis."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class PrecisionBudgetExceeded(QwDiracError):
    """An eigenvalue (or zero) index was requested beyond the range that
    64-bit floats can resolve for the given q."""


class MissedRootSuspected(QwDiracError):
    """The scan detected fewer roots than requested, or |Delta| dipped to
    the noise floor without a sign change.  Carries the partial result."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class DerivativeStepUnstable(QwDiracError):
    """Central-difference derivative in lambda disagrees with its half-step
    estimate beyond tolerance."""
