"""Analysis - classification and limiting distributions"""
from .classify import (
    AsymptoticTriple,
    CanonicalSymmetric,
    CanonicalTriple,
    asymptotic_representative,
    canonical_asymptotic,
    canonical_distributional,
    canonical_symmetric,
    classify_setup,
    distributions_equal_up_to,
    rho,
)
from .limit_dist import (
    LimitParams,
    classical_limit_density,
    density,
    empirical_vs_limit,
    integrate_density,
    limit_mean,
)

__all__ = [
    "AsymptoticTriple",
    "CanonicalSymmetric",
    "CanonicalTriple",
    "asymptotic_representative",
    "canonical_asymptotic",
    "canonical_distributional",
    "canonical_symmetric",
    "classify_setup",
    "distributions_equal_up_to",
    "rho",
    "LimitParams",
    "classical_limit_density",
    "density",
    "empirical_vs_limit",
    "integrate_density",
    "limit_mean",
]
