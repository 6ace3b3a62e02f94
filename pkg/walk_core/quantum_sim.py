"""Quantum Walk Simulator - direct state-vector evolution on the line"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd

from utils.config import section
from utils.errors import DomainError
from .coin_algebra import CoinMatrix, CoinSetup

logger = logging.getLogger(__name__)

CLAMP_FLOOR: float = section('numerics').get('clamp_floor', 1e-15)


def _check_steps(n: int, field: str = 'n') -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"must be a nonnegative integer, got {n}", field=field)
    return int(n)


@dataclass(frozen=True)
class WalkState:
    """Amplitudes (alpha_j, beta_j) over the window j = -n..n

    Index i of either array holds site j = i - n.
    """
    n: int
    alpha: np.ndarray
    beta: np.ndarray

    @property
    def sites(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1)

    def amplitude(self, j: int) -> tuple:
        if abs(j) > self.n:
            return 0j, 0j
        return complex(self.alpha[j + self.n]), complex(self.beta[j + self.n])

    def norm(self) -> float:
        return float(np.sum(np.abs(self.alpha) ** 2 + np.abs(self.beta) ** 2))


@dataclass(frozen=True)
class SpatialDistribution:
    """Probability mass over the sites -n..n after n steps"""
    n: int
    pmf: np.ndarray

    @property
    def sites(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1)

    def p(self, j: int) -> float:
        if abs(j) > self.n:
            return 0.0
        return float(self.pmf[j + self.n])

    def total(self) -> float:
        return float(np.sum(self.pmf))

    def as_dict(self, drop_zeros: bool = True) -> Dict[int, float]:
        return {
            int(j): float(p)
            for j, p in zip(self.sites, self.pmf)
            if p > 0.0 or not drop_zeros
        }

    def to_frame(self) -> pd.DataFrame:
        """Sites with nonzero probability, ascending"""
        support = self.pmf > 0.0
        return pd.DataFrame({'j': self.sites[support], 'p': self.pmf[support]})

    def to_json_dict(self) -> Dict:
        return {'n': self.n, 'pmf': {str(j): p for j, p in self.as_dict().items()}}


def initial_state(setup: CoinSetup) -> WalkState:
    """Walker at the origin in the coin state (cos φ, e^{iξ} sin φ)"""
    state = setup.state()
    return WalkState(
        n=0,
        alpha=np.array([state.alpha], dtype=complex),
        beta=np.array([state.beta], dtype=complex),
    )


def step(state: WalkState, coin: CoinMatrix) -> WalkState:
    """One application of the walk operator

    alpha_j(n+1) = a alpha_{j-1}(n) + b beta_{j-1}(n)
    beta_j(n+1)  = c alpha_{j+1}(n) + d beta_{j+1}(n)
    """
    size = 2 * state.n + 3
    alpha = np.zeros(size, dtype=complex)
    beta = np.zeros(size, dtype=complex)
    alpha[2:] = coin.a * state.alpha + coin.b * state.beta
    beta[:-2] = coin.c * state.alpha + coin.d * state.beta
    return WalkState(n=state.n + 1, alpha=alpha, beta=beta)


def evolve(setup: CoinSetup, n: int, callback: Optional[Callable[[WalkState], None]] = None) -> WalkState:
    """Apply `step` n times to the initial state

    Args:
        setup: Coin setup
        n: Number of steps
        callback: Called with the state at every step 0..n

    Returns:
        Final WalkState
    """
    n = _check_steps(n)
    coin = setup.coin()
    state = initial_state(setup)
    if callback is not None:
        callback(state)
    for _ in range(n):
        state = step(state, coin)
        if callback is not None:
            callback(state)
    logger.debug(f"Evolved theta={setup.theta:.6g} to n={n}, norm={state.norm():.16g}")
    return state


def distribution(state: WalkState) -> SpatialDistribution:
    """pmf(j) = |alpha_j|^2 + |beta_j|^2"""
    pmf = np.abs(state.alpha) ** 2 + np.abs(state.beta) ** 2
    pmf = np.where(pmf < CLAMP_FLOOR, 0.0, pmf)
    return SpatialDistribution(n=state.n, pmf=pmf)


def moment(dist: SpatialDistribution, k: int) -> float:
    """Raw moment sum_j j^k pmf(j)"""
    return float(np.sum(dist.sites.astype(float) ** k * dist.pmf))


def mean(dist: SpatialDistribution) -> float:
    return moment(dist, 1)


def variance(dist: SpatialDistribution) -> float:
    """sum j^2 p(j) - (sum j p(j))^2"""
    m1 = moment(dist, 1)
    return moment(dist, 2) - m1 * m1


def boundary_probability(dist: SpatialDistribution, side: int = 1) -> float:
    """pmf at the outermost site j = side * n"""
    return dist.p(side * dist.n)


def variance_series(setup: CoinSetup, n_max: int) -> np.ndarray:
    """Variance of the spatial distribution at every n = 0..n_max"""
    n_max = _check_steps(n_max, field='n_max')
    out = np.zeros(n_max + 1)

    def record(state: WalkState) -> None:
        out[state.n] = variance(distribution(state))

    evolve(setup, n_max, callback=record)
    return out
