"""Exception hierarchy.

Every validation failure derives from :class:`ValidationError` (itself a
``ValueError``), so callers can catch one class at the boundary.  The
exception name is the violated invariant; the CLI prints it verbatim.
"""


class ValidationError(ValueError):
    """An input violates a documented invariant."""


class ParseError(ValidationError):
    """A tournament or kernel file is malformed."""


class CapExceeded(ValidationError):
    """A computation would exceed a configured size cap."""


# finite tournaments
class LoopPresent(ValidationError):
    pass


class NotAntisymmetric(ValidationError):
    pass


class InvalidSize(ValidationError):
    pass


class NotATournament(ValidationError):
    pass


class DuplicateVertex(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class TooLarge(CapExceeded):
    pass


class InvalidArc(ValidationError):
    pass


# counting
class PatternTooLarge(ValidationError):
    pass


class NotAPartition(ValidationError):
    pass


class UnsupportedPattern(ValidationError):
    pass


# kernels
class WeightsNotNormalized(ValidationError):
    pass


class NotComplementary(ValidationError):
    pass


class BadDiagonal(ValidationError):
    pass


class ValueOutOfRange(ValidationError):
    pass


class EmptyKernel(ValidationError):
    pass


class InternalInconsistency(AssertionError):
    """Two independent computations disagreed; signals a bug, not bad input."""


class InconsistentCrossValues(InternalInconsistency):
    pass


class NotATournamentWarning(UserWarning):
    """Induced density of a non-tournament pattern against a tournament object is 0."""
