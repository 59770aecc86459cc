"""Exception taxonomy shared across the library and mapped to CLI exit codes."""


class IcmaError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class ConfigError(IcmaError):
    """Invalid run configuration (bad flag values, missing required fields)."""

    exit_code = 2


class DataError(IcmaError):
    """Invalid input data (malformed files, non-binary treatment, mismatched counts)."""

    exit_code = 3


class NumericalError(IcmaError):
    """Numerical failure (rank-deficient design, non-finite likelihood, zero variance)."""

    exit_code = 4


class BootstrapError(IcmaError):
    """Too many bootstrap replicates failed to refit."""

    exit_code = 5
