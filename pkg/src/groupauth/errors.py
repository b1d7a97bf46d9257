"""Exception types shared across the library."""


class GroupAuthError(Exception):
    """Base class for all library errors."""


class ModulusMismatchError(GroupAuthError):
    """Arithmetic attempted between elements of different prime fields."""


class ZeroInverseError(GroupAuthError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class DuplicateAbscissaError(GroupAuthError):
    """Two points share the same x-coordinate."""


class NoPointsError(GroupAuthError):
    """An operation that needs at least one point got an empty list."""


class InsufficientPointsError(GroupAuthError):
    """Too few points for the consistency check to carry information."""


class InsufficientSharesError(GroupAuthError):
    """Fewer shares than the reconstruction threshold."""


class OracleScaleError(GroupAuthError):
    """Brute-force enumeration requested beyond its supported size."""


class WrongPhaseError(GroupAuthError):
    """Protocol step invoked out of order."""


class IncompleteRoundError(GroupAuthError):
    """A round's message set is missing or duplicates a sender."""


class RosterError(GroupAuthError):
    """Invalid participant roster."""


class ScenarioError(GroupAuthError):
    """Invalid simulation scenario configuration."""
