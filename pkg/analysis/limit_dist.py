"""Limiting Distribution Module - limiting densities and finite-n convergence diagnostics

The quantum density lives on (-a, a) with a = |cos θ|:

    f(x) = sqrt(1 - a^2) (1 - λ x) / (π (1 - x^2) sqrt(a^2 - x^2))

It is integrated after the substitution x = a sin u, which removes the
inverse square-root endpoint singularities. With spin-up moving right a
positive λ drifts right while f leans left, so f describes X = -j/n.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np
import pandas as pd
from scipy import integrate
from scipy.stats import norm

from utils.config import section
from utils.errors import DomainError, NoLimitingDistributionError, NumericalError
from walk_core.classical_walk import CorrelationParams, evolve as evolve_classical, marginal
from walk_core.coin_algebra import CoinSetup, is_trivial, lambda_of
from walk_core.quantum_sim import SpatialDistribution, distribution, evolve

logger = logging.getLogger(__name__)

_limit_config = section('limit')
QUAD_LIMIT: int = _limit_config.get('quad_limit', 200)
QUAD_EPSABS: float = _limit_config.get('quad_epsabs', 1e-13)
QUAD_EPSREL: float = _limit_config.get('quad_epsrel', 1e-12)
GRID_POINTS: int = _limit_config.get('grid_points', 2001)
GRID_MIN: float = _limit_config.get('grid_min', -1.0)
GRID_MAX: float = _limit_config.get('grid_max', 1.0)

LAMBDA_SLACK = 1e-12

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class LimitParams:
    """Support half-width a = |cos θ| and asymmetry λ

    Raises:
        DomainError: unless 0 < a < 1 and |λ| <= 1/a
    """
    a_abs: float
    lam: float

    def __post_init__(self):
        a, lam = float(self.a_abs), float(self.lam)
        if not 0.0 < a < 1.0:
            raise DomainError(f"support half-width must lie in (0, 1), got {a}", field='a_abs')
        if not math.isfinite(lam) or abs(lam) > 1.0 / a + LAMBDA_SLACK:
            raise DomainError(f"|lambda| = {abs(lam)} exceeds the bound 1/cos(theta) = {1.0 / a}", field='lambda')
        object.__setattr__(self, 'a_abs', a)
        object.__setattr__(self, 'lam', lam)

    @classmethod
    def from_theta(cls, theta: float, lam: float) -> 'LimitParams':
        return cls(a_abs=abs(math.cos(theta)), lam=lam)

    @classmethod
    def from_setup(cls, setup: CoinSetup) -> 'LimitParams':
        if is_trivial(setup):
            raise NoLimitingDistributionError("trivial coins have no limiting density")
        return cls(a_abs=abs(math.cos(setup.theta)), lam=lambda_of(setup))


def density(p: LimitParams, x: ArrayLike) -> ArrayLike:
    """Limiting density; zero outside the open interval (-a, a)"""
    x_arr = np.asarray(x, dtype=float)
    a = p.a_abs
    inside = np.abs(x_arr) < a
    xs = np.where(inside, x_arr, 0.0)
    values = (math.sqrt(1.0 - a * a) * (1.0 - p.lam * xs)
              / (math.pi * (1.0 - xs * xs) * np.sqrt(a * a - xs * xs)))
    out = np.where(inside, values, 0.0)
    return float(out) if np.ndim(x) == 0 else out


def _integrand(p: LimitParams, power: int = 0) -> Callable[[float], float]:
    """Density times x**power, written in u where x = a sin u"""
    a = p.a_abs
    scale = math.sqrt(1.0 - a * a) / math.pi

    def g(u: float) -> float:
        s = a * math.sin(u)
        return scale * (1.0 - p.lam * s) / (1.0 - s * s) * s ** power

    return g


def _quad(func: Callable[[float], float], lo: float, hi: float) -> float:
    result = integrate.quad(func, lo, hi, limit=QUAD_LIMIT,
                            epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, full_output=1)
    if len(result) > 3:
        raise NumericalError(f"quadrature did not converge on [{lo:.6g}, {hi:.6g}]: {result[3]}")
    return float(result[0])


def integrate_density(p: LimitParams) -> float:
    """Total mass of the density by adaptive quadrature"""
    return _quad(_integrand(p), -0.5 * math.pi, 0.5 * math.pi)


def limit_mean(p: LimitParams) -> float:
    """First moment of the density"""
    return _quad(_integrand(p, power=1), -0.5 * math.pi, 0.5 * math.pi)


def _to_u(p: LimitParams, x: np.ndarray) -> np.ndarray:
    return np.arcsin(np.clip(x / p.a_abs, -1.0, 1.0))


def limit_cdf(p: LimitParams, x: ArrayLike) -> ArrayLike:
    """CDF of the density at x (scalar or array)

    Arrays are integrated piecewise between sorted points and accumulated.
    """
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    order = np.argsort(xs)
    u = _to_u(p, xs[order])
    g = _integrand(p)

    pieces = np.empty(u.size)
    lo = -0.5 * math.pi
    for i, hi in enumerate(u):
        pieces[i] = _quad(g, lo, hi) if hi > lo else 0.0
        lo = max(lo, hi)
    cdf = np.empty(u.size)
    cdf[order] = np.clip(np.cumsum(pieces), 0.0, 1.0)
    return float(cdf[0]) if np.ndim(x) == 0 else cdf


def rescaled_cdf(dist: SpatialDistribution, scale: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Empirical CDF of scale * j at its jump points

    Returns:
        (points ascending, F(points), F(points-))
    """
    sites = dist.sites
    reachable = (sites - dist.n) % 2 == 0
    points = scale * sites[reachable].astype(float)
    masses = dist.pmf[reachable]
    order = np.argsort(points)
    points, masses = points[order], masses[order]
    right = np.cumsum(masses)
    left = right - masses
    return points, right, left


def _sup_distance(right: np.ndarray, left: np.ndarray, target: np.ndarray) -> float:
    return float(max(np.max(np.abs(right - target)), np.max(np.abs(left - target))))


def empirical_vs_limit(setup: CoinSetup, n: int) -> float:
    """Sup distance between the CDF of X = -j/n after n steps and the limit CDF

    Raises:
        NoLimitingDistributionError: for trivial coins
    """
    if n < 1:
        raise DomainError(f"must be at least 1, got {n}", field='n')
    params = LimitParams.from_setup(setup)
    dist = distribution(evolve(setup, n))
    points, right, left = rescaled_cdf(dist, -1.0 / n)
    distance = _sup_distance(right, left, limit_cdf(params, points))
    logger.info(f"Quantum CDF distance at n={n}: {distance:.6g}")
    return distance


def _gaussian_scale(delta: float) -> float:
    delta = float(delta)
    if not math.isfinite(delta) or abs(delta) >= 1.0:
        raise DomainError(f"correlation must lie in (-1, 1), got {delta}", field='delta')
    return math.sqrt((1.0 + delta) / (1.0 - delta))


def classical_limit_density(delta: float, x: ArrayLike) -> ArrayLike:
    """Zero-mean Gaussian with variance (1+δ)/(1−δ) in the variable j/sqrt(n)"""
    return norm.pdf(x, loc=0.0, scale=_gaussian_scale(delta))


def classical_limit_cdf(delta: float, x: ArrayLike) -> ArrayLike:
    return norm.cdf(x, loc=0.0, scale=_gaussian_scale(delta))


def classical_empirical_vs_limit(delta: float, n: int, q0_up: float = 0.5) -> float:
    """Sup distance between the CDF of j/sqrt(n) and its Gaussian limit"""
    scale = _gaussian_scale(delta)
    if n < 1:
        raise DomainError(f"must be at least 1, got {n}", field='n')
    state = evolve_classical(CorrelationParams(delta=delta, q0=(q0_up, 1.0 - q0_up)), n)
    points, right, left = rescaled_cdf(marginal(state), 1.0 / math.sqrt(n))
    distance = _sup_distance(right, left, norm.cdf(points, scale=scale))
    logger.info(f"Classical CDF distance at n={n}, delta={delta}: {distance:.6g}")
    return distance


def default_grid(points: Optional[int] = None) -> np.ndarray:
    """Uniform plotting grid from config (2001 points over [-1, 1] by default)"""
    return np.linspace(GRID_MIN, GRID_MAX, points or GRID_POINTS)


def density_curve(p: LimitParams, grid: Optional[np.ndarray] = None) -> pd.DataFrame:
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    return pd.DataFrame({'x': grid, 'f': density(p, grid)})


def gaussian_curve(delta: float, grid: Optional[np.ndarray] = None) -> pd.DataFrame:
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    return pd.DataFrame({'x': grid, 'f': classical_limit_density(delta, grid)})


def empirical_curve(setup: CoinSetup, n: int) -> pd.DataFrame:
    """Rescaled pmf as a density in X = -j/n (reachable sites are 2/n apart)"""
    if n < 1:
        raise DomainError(f"must be at least 1, got {n}", field='n')
    dist = distribution(evolve(setup, n))
    reachable = (dist.sites - n) % 2 == 0
    x = -dist.sites[reachable] / n
    f = dist.pmf[reachable] * n / 2.0
    order = np.argsort(x)
    return pd.DataFrame({'x': x[order], 'f_emp': f[order]})


def classical_empirical_curve(delta: float, n: int, q0_up: float = 0.5) -> pd.DataFrame:
    """Rescaled correlated-walk pmf as a density in j/sqrt(n) (reachable sites are 2/sqrt(n) apart)"""
    if n < 1:
        raise DomainError(f"must be at least 1, got {n}", field='n')
    dist = marginal(evolve_classical(CorrelationParams(delta=delta, q0=(q0_up, 1.0 - q0_up)), n))
    reachable = (dist.sites - n) % 2 == 0
    root = math.sqrt(n)
    return pd.DataFrame({'x': dist.sites[reachable] / root, 'f_emp': dist.pmf[reachable] * root / 2.0})
