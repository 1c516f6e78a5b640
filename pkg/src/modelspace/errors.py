"""Exception types raised across the package."""


class ModelSpaceError(Exception):
    """Base class for every error raised by :mod:`modelspace`."""


class ConfigurationError(ModelSpaceError, ValueError):
    """Invalid grid size, tolerance or run configuration."""


class DimensionError(ModelSpaceError, ValueError):
    """Operands live on different grids or have incompatible shapes."""


class AliasingError(ModelSpaceError, ArithmeticError):
    """Spectral content reached the guard band of the sampling grid."""


class TruncationError(AliasingError):
    """A Fourier window dropped coefficients carrying non-negligible energy."""


class DomainError(ModelSpaceError, ValueError):
    """Arguments outside the domain of an operation (e.g. |lambda| >= 1)."""


class EmptyBasisError(DomainError):
    """The model space of a constant inner function is trivial."""


class ValidationError(ModelSpaceError, ValueError):
    """An input failed a structural predicate (e.g. not a conjugation)."""


class UnknownIdentityError(ModelSpaceError, KeyError):
    """Identity id not present in the registry."""
