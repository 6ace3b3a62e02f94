"""Closed Form Module - kappa-sum amplitudes and the Fourier / Fibonacci-Horner oracle

Both walks share one closed form. For a 2x2 step matrix [[a, b], [c, d]] let

    F_n(m) = sum_h kappa(n, m, h) (-det)^((n-h)/2) a^((h+m)/2) d^((h-m)/2),   F_{-1} = 0

then

    alpha_j(n) = F_n(j) alpha - d alpha F_{n-1}(j+1) + b beta F_{n-1}(j-1)
    beta_j(n)  = F_n(j) beta  + c alpha F_{n-1}(j+1) - a beta F_{n-1}(j-1)

For Hopf coins F_n(m) = e^{i sigma m} G_n(m) with G a real polynomial in cos(theta);
for the correlated walk a = d = (1+delta)/2 and -det = -delta. The kappa sums
alternate in sign, so they are accumulated over a common integer denominator
and rounded once.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from utils.errors import DomainError
from .classical_walk import ClassicalJointState, _check_delta, check_direction_pmf
from .coin_algebra import CoinSetup
from .quantum_sim import SpatialDistribution, WalkState, _check_steps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FHCoefficients:
    """Fibonacci-Horner coefficients of chi(x) = x^2 - c0 x - c1"""
    c0: Any
    c1: Any
    f: List[Any]


@dataclass(frozen=True)
class AmplitudeTable:
    """Amplitude pairs over j = -n..n, indexed like WalkState"""
    n: int
    alpha: np.ndarray
    beta: np.ndarray

    @property
    def sites(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1)

    def max_deviation(self, other: 'AmplitudeTable') -> float:
        if other.n != self.n:
            raise DomainError(f"step counts differ ({self.n} vs {other.n})", field='n')
        return float(max(np.max(np.abs(self.alpha - other.alpha)),
                         np.max(np.abs(self.beta - other.beta))))

    def distribution(self) -> SpatialDistribution:
        return SpatialDistribution(n=self.n, pmf=np.abs(self.alpha) ** 2 + np.abs(self.beta) ** 2)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            'j': self.sites,
            're_alpha': self.alpha.real,
            'im_alpha': self.alpha.imag,
            're_beta': self.beta.real,
            'im_beta': self.beta.imag,
        })

    def to_json_dict(self) -> dict:
        return {
            'n': self.n,
            'amplitudes': {
                str(int(j)): [a.real, a.imag, b.real, b.imag]
                for j, a, b in zip(self.sites, self.alpha, self.beta)
            },
        }


def walk_state_table(state: WalkState) -> AmplitudeTable:
    return AmplitudeTable(n=state.n, alpha=state.alpha.copy(), beta=state.beta.copy())


def kappa(n: int, j: int, h: int) -> int:
    """Combinatorial prefactor ((n+h)/2)! / [((n-h)/2)! ((h-j)/2)! ((h+j)/2)!]

    Zero unless n - h, h - j and h + j are all nonnegative and even.
    """
    if n - h < 0 or (n - h) % 2 or h - j < 0 or h + j < 0 or (h + j) % 2:
        return 0
    return math.comb((n + h) // 2, h) * math.comb(h, (h + j) // 2)


def fib_horner(c0: Any, c1: Any, n: int) -> FHCoefficients:
    """f_0 .. f_n by the recurrence f_k = c0 f_{k-1} + c1 f_{k-2}

    Works elementwise when c0 and c1 are numpy arrays.
    """
    n = _check_steps(n)
    f = [c0 * 0 + 1]
    if n >= 1:
        f.append(c0 * 1)
    for _ in range(2, n + 1):
        f.append(c0 * f[-1] + c1 * f[-2])
    return FHCoefficients(c0=c0, c1=c1, f=f)


def fib_horner_explicit(c0: Any, c1: Any, n: int) -> Any:
    """f_n = sum over h0 + 2 h1 = n of C(h0 + h1, h1) c0^h0 c1^h1"""
    n = _check_steps(n)
    return sum(math.comb(n - h1, h1) * c0 ** (n - 2 * h1) * c1 ** h1 for h1 in range(n // 2 + 1))


def matrix_power_fh(A: np.ndarray, n: int) -> np.ndarray:
    """A^n = f_n I + f_{n-1} (A - c0 I) for a 2x2 matrix or a stack of them"""
    n = _check_steps(n)
    A = np.asarray(A, dtype=complex)
    if A.shape[-2:] != (2, 2):
        raise DomainError(f"expected trailing shape (2, 2), got {A.shape}", field='A')
    eye = np.broadcast_to(np.eye(2, dtype=complex), A.shape)
    if n == 0:
        return eye.copy()
    c0 = A[..., 0, 0] + A[..., 1, 1]
    c1 = -(A[..., 0, 0] * A[..., 1, 1] - A[..., 0, 1] * A[..., 1, 0])
    f = fib_horner(c0, c1, n).f
    fn = np.asarray(f[n])[..., None, None]
    fn1 = np.asarray(f[n - 1])[..., None, None]
    return fn * eye + fn1 * (A - np.asarray(c0)[..., None, None] * eye)


def _kappa_row(n: int, c1: Fraction, w: Fraction) -> np.ndarray:
    """sum_h kappa(n, m, h) c1^((n-h)/2) w^h for m = -n..n, rounded once per entry"""
    if n < 0:
        return np.zeros(0)
    half = n // 2
    cn, cd = c1.numerator, c1.denominator
    wn, wd = w.numerator, w.denominator
    denom = cd ** half * wd ** n
    c_terms = [cn ** s * cd ** (half - s) for s in range(half + 1)]
    w_terms = [wn ** h * wd ** (n - h) for h in range(n + 1)]

    row = np.zeros(2 * n + 1)
    for m in range(-n, n + 1, 2):
        total = 0
        for h in range(abs(m), n + 1, 2):
            total += kappa(n, m, h) * c_terms[(n - h) // 2] * w_terms[h]
        row[m + n] = total / denom
    return row


def _pad_previous(row: np.ndarray, n: int) -> np.ndarray:
    """Place F_{n-1} on the window m = -n-1..n+1"""
    padded = np.zeros(2 * n + 3, dtype=row.dtype if row.size else float)
    if n >= 1:
        padded[2:-2] = row
    return padded


def _combine(fn: np.ndarray, fp: np.ndarray, coin: Sequence[complex],
             alpha: complex, beta: complex) -> Tuple[np.ndarray, np.ndarray]:
    a, b, c, d = coin
    up = fn * alpha - d * alpha * fp[2:] + b * beta * fp[:-2]
    down = fn * beta + c * alpha * fp[2:] - a * beta * fp[:-2]
    return up, down


def quantum_amplitudes_closed(setup: CoinSetup, n: int) -> AmplitudeTable:
    """Amplitudes after n steps from the kappa-sum closed form"""
    n = _check_steps(n)
    coin, state = setup.coin(), setup.state()
    sigma = 0.5 * (setup.phi1 + setup.phi2)
    w = Fraction(math.cos(setup.theta))
    minus_one = Fraction(-1)

    m_now = np.arange(-n, n + 1)
    m_wide = np.arange(-n - 1, n + 2)
    fn = np.exp(1j * sigma * m_now) * _kappa_row(n, minus_one, w)
    fp = np.exp(1j * sigma * m_wide) * _pad_previous(_kappa_row(n - 1, minus_one, w), n)

    alpha, beta = _combine(fn, fp, (coin.a, coin.b, coin.c, coin.d), state.alpha, state.beta)
    return AmplitudeTable(n=n, alpha=alpha, beta=beta)


def classical_components_closed(delta: float, q0: Tuple[float, float], n: int) -> ClassicalJointState:
    """Joint (site, direction) mass after n steps from the kappa-sum closed form

    Raises:
        DomainError: for |delta| > 1 or an invalid direction pmf
    """
    delta = _check_delta(delta)
    up0, down0 = check_direction_pmf(q0)
    n = _check_steps(n)

    d_exact = Fraction(delta)
    p_exact = (1 + d_exact) / 2
    p, q = float(p_exact), float((1 - d_exact) / 2)

    fn = _kappa_row(n, -d_exact, p_exact)
    fp = _pad_previous(_kappa_row(n - 1, -d_exact, p_exact), n)
    up, down = _combine(fn, fp, (p, q, q, p), up0, down0)
    return ClassicalJointState(n=n, up=up, down=down)


def fourier_oracle(setup: CoinSetup, n: int, grid_size: Optional[int] = None) -> AmplitudeTable:
    """Amplitudes by powering C_k on a uniform k-grid and inverting with an FFT

    Args:
        setup: Coin setup
        n: Number of steps
        grid_size: N >= 2n + 2 grid points in [-pi, pi); defaults to 2n + 2
    """
    n = _check_steps(n)
    size = 2 * n + 2 if grid_size is None else int(grid_size)
    if size < 2 * n + 2:
        raise DomainError(f"grid must have at least 2n + 2 = {2 * n + 2} points, got {size}", field='grid_size')

    coin, state = setup.coin(), setup.state()
    k = -np.pi + 2.0 * np.pi * np.arange(size) / size
    plus, minus = np.exp(1j * k), np.exp(-1j * k)
    ck = np.empty((size, 2, 2), dtype=complex)
    ck[:, 0, 0] = plus * coin.a
    ck[:, 0, 1] = plus * coin.b
    ck[:, 1, 0] = minus * coin.c
    ck[:, 1, 1] = minus * coin.d

    psi_k = matrix_power_fh(ck, n) @ np.array([state.alpha, state.beta], dtype=complex)
    spectrum = np.fft.fft(psi_k, axis=0) / size

    sites = np.arange(-n, n + 1)
    sign = np.where(sites % 2 == 0, 1.0, -1.0)
    rows = spectrum[sites % size]
    logger.debug(f"Fourier oracle n={n} on {size} grid points")
    return AmplitudeTable(n=n, alpha=sign * rows[:, 0], beta=sign * rows[:, 1])
