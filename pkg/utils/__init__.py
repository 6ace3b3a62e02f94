"""Utils module"""
from .config import load_config, section, setup_logging
from .errors import (
    WalkError,
    DomainError,
    SingularCoinError,
    PreconditionError,
    NoLimitingDistributionError,
    NumericalError,
)

__all__ = [
    "load_config",
    "section",
    "setup_logging",
    "WalkError",
    "DomainError",
    "SingularCoinError",
    "PreconditionError",
    "NoLimitingDistributionError",
    "NumericalError",
]
