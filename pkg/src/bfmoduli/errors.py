"""Exception hierarchy shared by every module."""


class BFModuliError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(BFModuliError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class WindowError(BFModuliError):
    """A regulator exponent left the configured Laurent window."""


class NotInvertible(BFModuliError, ZeroDivisionError):
    """A truncated series has no reciprocal."""


class SingularLimit(BFModuliError):
    """A regulator limit still carries a pole."""


class PoleError(BFModuliError, ZeroDivisionError):
    """Evaluation at a pole of a rational formula (e.g. m = -3)."""


class OrderError(BFModuliError):
    """A jet variable exceeded the maximal derivative order."""


class ConfigError(BFModuliError, KeyError):
    """A field configuration lacks an assignment needed for evaluation."""


class CatalogError(BFModuliError, ValueError):
    """Malformed or inconsistent manifold catalog data."""
