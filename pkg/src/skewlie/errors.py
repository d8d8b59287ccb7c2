"""Exception hierarchy shared across the package."""


class SkewlieError(Exception):
    """Base class for all package errors."""


class SpecError(SkewlieError):
    """Malformed or invalid user input: group specs, involution specs, config."""


class ComputationError(SkewlieError):
    """A mathematical check failed or an internal invariant broke."""
