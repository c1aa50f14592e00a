"""Exception types shared across the package.

The CLI maps these onto exit codes: configuration problems exit with 2,
numerical failures with 3, I/O failures with 4.
"""


class ConfigurationError(ValueError):
    """Invalid scene, grid, or experiment configuration."""


class DomainError(ValueError):
    """Numerical argument outside the domain of an operation."""


class UsageError(RuntimeError):
    """Operation called in an invalid state (e.g. untruncated SVD basis)."""


class SolveError(RuntimeError):
    """Linear solve failed; message carries a condition-number diagnostic."""
