"""Exception types shared across the toolkit."""

__all__ = ["PgmFormatError", "DimensionMismatchError", "DegenerateInputError"]


class PgmFormatError(ValueError):
    """A byte stream is not a decodable PGM image."""


class DimensionMismatchError(ValueError):
    """An operation needed images of identical dimensions but got different ones."""


class DegenerateInputError(ValueError):
    """Inputs are structurally valid but the requested result is undefined."""
