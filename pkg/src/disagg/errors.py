"""Exception hierarchy shared across the toolkit.

The CLI maps these onto process exit codes: ConfigError -> 2,
DataError -> 3, NumericalError -> 4.
"""


class DisaggError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(DisaggError):
    """Invalid or inconsistent experiment configuration."""


class DataError(DisaggError):
    """Broken, missing, or incompatible data on disk."""


class NumericalError(DisaggError):
    """Numerical failure at runtime (NaN loss, rank deficiency, ...)."""
