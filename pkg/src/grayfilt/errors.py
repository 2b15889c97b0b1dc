"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was asked to process values outside its domain,
    e.g. adding images of different sizes or rounding a non-finite value."""


class FormatError(ValueError):
    """An input file (PGM, kernel, LUT table, pipeline spec) is malformed."""
