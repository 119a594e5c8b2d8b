"""Exception hierarchy shared across the package.

The CLI maps these onto its exit codes: parse/format and domain problems
exit with 2, dimension mismatches with 3, anything else with 1.
"""


class MiMatrixError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(MiMatrixError):
    """Shapes disagree: ragged rows, mismatched vector lengths, bad matrix dims."""


class DomainError(MiMatrixError):
    """A value is outside its allowed domain (non-binary cell, bad density, ...)."""


class FormatError(MiMatrixError):
    """A file could not be parsed: bad token, bad magic, truncation, dirty padding."""


class ConsistencyError(MiMatrixError):
    """Internal cross-check failed; inputs were corrupted or invariants broken."""
