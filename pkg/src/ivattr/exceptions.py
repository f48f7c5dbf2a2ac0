"""Exception hierarchy shared across the package."""


class IvattrError(Exception):
    """Base class for all errors raised by this package."""


class SpecificationError(IvattrError, ValueError):
    """A configuration or argument violates a precondition (bad sign, bad
    probability, unknown selector, too few replicates, ...)."""


class EstimationError(IvattrError, RuntimeError):
    """Estimation cannot proceed on this data (empty cell, zero first stage,
    degenerate decomposition)."""


class DataFormatError(IvattrError, ValueError):
    """A data file or record violates the expected format."""
