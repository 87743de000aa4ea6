"""Error taxonomy shared by every module.

Each exception carries a stable ``code`` string so the CLI and tests can match
on the failure class without parsing messages.  Input and precondition problems
exit the CLI with status 2; a TheoremViolation (an internal guarantee failing,
which always means a bug) exits with status 1.
"""


class PiercingError(Exception):
    """Base class; ``code`` identifies the failure class."""

    code = "E_GENERIC"


class DimensionError(PiercingError):
    """Mismatched row/vector/matrix dimensions."""

    code = "E_DIMENSION"


class MonotoneError(PiercingError):
    """A coordinate vector that must be strictly increasing is not."""

    code = "E_MONOTONE"


class SetIndexError(PiercingError):
    """A family-set index out of range."""

    code = "E_INDEX"


class PlaneError(PiercingError):
    """A plane that is not one of the scene's declared planes."""

    code = "E_PLANE"


class FeasibleError(PiercingError):
    """A certificate was requested for a system that is actually feasible."""

    code = "E_FEASIBLE"


class TheoremViolation(PiercingError):
    """A mathematically guaranteed outcome failed to materialize: a bug."""

    code = "E_THEOREM_VIOLATION"


class ConfigError(PiercingError):
    """Generator configuration outside its documented domain."""

    code = "E_CONFIG"


class EmptyFamilyError(PiercingError):
    """An operation received an empty family or an all-empty section list."""

    code = "E_EMPTY"
