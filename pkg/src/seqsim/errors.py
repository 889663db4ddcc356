"""Exception types shared across the library.

The CLI maps these onto exit codes: ConfigError -> 2, DataError -> 3,
NumericError -> 4. Everything else is a plain bug.
"""


class DimensionError(ValueError):
    """Operand shapes are incompatible with the requested operation."""


class ConfigError(ValueError):
    """A configuration value or combination of values is invalid."""


class DataError(RuntimeError):
    """Dataset layout, manifest, or file contents are broken."""


class EmptyInputError(ValueError):
    """An operation received an empty sequence where at least one item is required."""


class NumericError(ArithmeticError):
    """A non-finite value surfaced where the pipeline requires finite numbers."""


class StaleTapeError(RuntimeError):
    """backward() was called a second time on an already-consumed tape."""
