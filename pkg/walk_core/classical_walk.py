"""Correlated Classical Walk - persistent random walk over (site, direction) pairs"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
import pandas as pd

from utils.errors import DomainError
from .quantum_sim import SpatialDistribution, _check_steps, variance

logger = logging.getLogger(__name__)

PMF_TOL = 1e-12


def _check_delta(delta: float, allow_one: bool = True) -> float:
    delta = float(delta)
    if not math.isfinite(delta) or abs(delta) > 1.0:
        raise DomainError(f"correlation must lie in [-1, 1], got {delta}", field='delta')
    if not allow_one and delta == 1.0:
        raise DomainError("delta = 1 is singular here; use the n^2 law", field='delta')
    return delta


def check_direction_pmf(q0: Tuple[float, float]) -> Tuple[float, float]:
    """Validate an initial direction pmf (up, down)"""
    up, down = float(q0[0]), float(q0[1])
    if up < 0.0 or down < 0.0 or abs(up + down - 1.0) > PMF_TOL:
        raise DomainError(f"direction pmf must be nonnegative and sum to 1, got ({up}, {down})", field='q0')
    return up, down


@dataclass(frozen=True)
class CorrelationParams:
    """Correlation coefficient and initial direction pmf

    Args:
        delta: Correlation coefficient in [-1, 1]
        q0: (P(up), P(down)) at n = 0
    """
    delta: float
    q0: Tuple[float, float] = (0.5, 0.5)

    def __post_init__(self):
        object.__setattr__(self, 'delta', _check_delta(self.delta))
        object.__setattr__(self, 'q0', check_direction_pmf(self.q0))


@dataclass(frozen=True)
class ClassicalJointState:
    """Mass on (site, up) and (site, down) over the window j = -n..n"""
    n: int
    up: np.ndarray
    down: np.ndarray

    @property
    def sites(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1)

    def total(self) -> float:
        return float(np.sum(self.up) + np.sum(self.down))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'j': self.sites, 'p_up': self.up, 'p_down': self.down})

    def to_json_dict(self) -> dict:
        return {
            'n': self.n,
            'mass': {
                str(int(j)): {'up': float(u), 'down': float(d)}
                for j, u, d in zip(self.sites, self.up, self.down)
                if u > 0.0 or d > 0.0
            },
        }


def transition_matrix(delta: float) -> np.ndarray:
    """Velocity transition matrix [[p, q], [q, p]] with p = (1+δ)/2"""
    delta = _check_delta(delta)
    p, q = 0.5 * (1.0 + delta), 0.5 * (1.0 - delta)
    return np.array([[p, q], [q, p]])


def initial_joint_state(params: CorrelationParams) -> ClassicalJointState:
    up, down = params.q0
    return ClassicalJointState(n=0, up=np.array([up]), down=np.array([down]))


def step(state: ClassicalJointState, delta: float) -> ClassicalJointState:
    """Update the direction, then shift up-mass right and down-mass left"""
    (p, q), _ = transition_matrix(delta)
    size = 2 * state.n + 3
    up = np.zeros(size)
    down = np.zeros(size)
    up[2:] = p * state.up + q * state.down
    down[:-2] = q * state.up + p * state.down
    return ClassicalJointState(n=state.n + 1, up=up, down=down)


def evolve(params: CorrelationParams, n: int,
           callback: Optional[Callable[[ClassicalJointState], None]] = None) -> ClassicalJointState:
    """n steps from the centred initial distribution"""
    n = _check_steps(n)
    state = initial_joint_state(params)
    if callback is not None:
        callback(state)
    for _ in range(n):
        state = step(state, params.delta)
        if callback is not None:
            callback(state)
    return state


def marginal(state: ClassicalJointState) -> SpatialDistribution:
    """Sum the direction out"""
    return SpatialDistribution(n=state.n, pmf=state.up + state.down)


def gillis_variance(delta: float, n: int) -> float:
    """Closed-form variance for the symmetric start

    σ² = ((1+δ)/(1−δ)) n − 2δ(1−δⁿ)/(1−δ)²

    Raises:
        DomainError: for δ = 1, where the variance is exactly n²
    """
    delta = _check_delta(delta, allow_one=False)
    n = _check_steps(n)
    return (1.0 + delta) / (1.0 - delta) * n - 2.0 * delta * (1.0 - delta ** n) / (1.0 - delta) ** 2


def ballistic_variance(n: int) -> float:
    """Exact variance n² of the fully correlated walk"""
    n = _check_steps(n)
    return float(n * n)


def variance_series(params: CorrelationParams, n_max: int) -> np.ndarray:
    """Empirical variance at every n = 0..n_max"""
    n_max = _check_steps(n_max, field='n_max')
    out = np.zeros(n_max + 1)

    def record(state: ClassicalJointState) -> None:
        out[state.n] = variance(marginal(state))

    evolve(params, n_max, callback=record)
    return out
