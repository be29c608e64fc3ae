"""Exception types shared across the library."""


class YangBaxterError(Exception):
    """Base class for all library errors."""


class EvaluationPole(YangBaxterError):
    """A rational function was evaluated at a zero of its denominator."""


class ScalarParseError(YangBaxterError, ValueError):
    """A scalar string does not match the scalar grammar."""


class ShapeError(YangBaxterError, ValueError):
    """Inconsistent dimensions in a linear-algebra operation."""


class SingularMatrix(YangBaxterError):
    """A matrix required to be invertible is singular."""


class AlgebraError(YangBaxterError):
    """Structure constants fail a construction-time validation check."""


class AlgebraMismatch(YangBaxterError):
    """Two tensors over different algebras were combined."""


class DegenerateForm(YangBaxterError):
    """The trace form is degenerate where nondegeneracy is required."""


class NotPaired(YangBaxterError):
    """Two subspaces are not in duality under the inner product."""


class NotHecke(YangBaxterError):
    """An R-matrix fails the Hecke condition required by the operation."""


class BadTwistData(YangBaxterError):
    """Twist data violates its invariants (non-invertible F, bad b matrix)."""


class TwistIncompatible(YangBaxterError):
    """A twist F does not commute with the canonical element Q."""


class NoClassicalLimit(YangBaxterError):
    """R does not evaluate to 1x1 at q=1, so no classical limit exists."""


class TooSmall(YangBaxterError, ValueError):
    """A construction needs a larger dimension than was supplied."""


class CheckFailed(YangBaxterError):
    """A required identity check failed; carries the failing CheckReport."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"check failed: {report.identity}")


class InvalidTriple(YangBaxterError):
    """An associative-triple validation condition failed.

    The ``failures`` attribute lists the named conditions that failed.
    """

    def __init__(self, failures):
        self.failures = tuple(failures)
        super().__init__("invalid associative triple: " + ", ".join(self.failures))


class InvalidBDTriple(YangBaxterError):
    """A Belavin-Drinfeld triple fails a validity condition.

    The ``failures`` attribute lists the named conditions that failed.
    """

    def __init__(self, failures):
        self.failures = tuple(failures)
        super().__init__("invalid Belavin-Drinfeld triple: " + ", ".join(self.failures))


class InternalInconsistency(YangBaxterError):
    """Two independent computation routes disagreed; indicates a bug."""
