"""Exception hierarchy shared by the walk engines, analyses and the CLI"""
from typing import Optional


class WalkError(Exception):
    """Base class for every error raised by this package"""


class DomainError(WalkError, ValueError):
    """A parameter lies outside its declared domain

    Args:
        message: Human readable description
        field: Name of the offending parameter, if known
    """

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        if field and field not in message:
            message = f"{field}: {message}"
        super().__init__(message)


class SingularCoinError(DomainError):
    """The coin has |a| = 0, so λ is undefined"""


class PreconditionError(WalkError, ValueError):
    """An operation was called on an input it does not accept"""


class NoLimitingDistributionError(WalkError):
    """Trivial coins have no limiting density"""


class NumericalError(WalkError, RuntimeError):
    """Quadrature or another numerical routine failed to converge"""
