"""Coin Algebra Module - coin and coin-state parametrisations, scalar classifiers"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from utils.config import section
from utils.errors import DomainError, SingularCoinError

logger = logging.getLogger(__name__)

_numerics = section('numerics')
ANGLE_TOL: float = _numerics.get('angle_tolerance', 1e-12)
TRIVIAL_TOL: float = _numerics.get('trivial_tolerance', 1e-12)

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi
QUARTER_PI = 0.25 * math.pi


def _check_range(name: str, value: float, low: float, high: float, closed_high: bool = False) -> float:
    """Validate a single angle against [low, high) or [low, high]"""
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"must be finite, got {value}", field=name)
    upper_ok = value <= high if closed_high else value < high
    if value < low or not upper_ok:
        bracket = ']' if closed_high else ')'
        raise DomainError(f"{value} outside [{low}, {high}{bracket}", field=name)
    return value


def wrap_angle(x: float, period: float = TWO_PI) -> float:
    """Reduce x into [0, period), mapping rounding spill-over at period back to 0"""
    r = math.fmod(x, period)
    if r < 0:
        r += period
    if r >= period:
        r -= period
    return r


def congruent(x: float, y: float, modulus: float, tol: float = ANGLE_TOL) -> bool:
    """True when x ≡ y (mod modulus) within an absolute tolerance"""
    d = wrap_angle(x - y, modulus)
    return min(d, modulus - d) <= tol


@dataclass(frozen=True)
class CoinMatrix:
    """Special-unitary 2x2 coin [[a, b], [c, d]]"""
    a: complex
    b: complex
    c: complex
    d: complex

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    def is_special_unitary(self, tol: float = 1e-14) -> bool:
        m = self.as_array()
        unitary = np.allclose(m.conj().T @ m, np.eye(2), rtol=0.0, atol=tol)
        return bool(unitary and abs(self.determinant() - 1.0) <= tol)


@dataclass(frozen=True)
class CoinState:
    """Initial coin state (alpha, beta) = (cos φ, e^{iξ} sin φ)"""
    alpha: complex
    beta: complex

    def norm(self) -> float:
        return abs(self.alpha) ** 2 + abs(self.beta) ** 2


@dataclass(frozen=True)
class CoinSetup:
    """Five-angle record fixing a coined quantum walk started at the origin

    Args:
        theta: Coin angle in [0, 2π)
        phi1: Hopf phase in [0, π)
        phi2: Hopf phase in [0, π)
        varphi: Coin-state angle in [0, π/2]
        xi: Coin-state relative phase in [0, 2π)
    """
    theta: float
    phi1: float = 0.0
    phi2: float = 0.0
    varphi: float = QUARTER_PI
    xi: float = HALF_PI

    def __post_init__(self):
        object.__setattr__(self, 'theta', _check_range('theta', self.theta, 0.0, TWO_PI))
        object.__setattr__(self, 'phi1', _check_range('phi1', self.phi1, 0.0, math.pi))
        object.__setattr__(self, 'phi2', _check_range('phi2', self.phi2, 0.0, math.pi))
        object.__setattr__(self, 'varphi', _check_range('varphi', self.varphi, 0.0, HALF_PI, closed_high=True))
        object.__setattr__(self, 'xi', _check_range('xi', self.xi, 0.0, TWO_PI))

    def coin(self) -> CoinMatrix:
        return build_coin(self.theta, self.phi1, self.phi2)

    def state(self) -> CoinState:
        return build_coin_state(self.varphi, self.xi)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CoinSetup':
        missing = [k for k in ('theta', 'phi1', 'phi2', 'varphi', 'xi') if k not in data]
        if missing:
            raise DomainError(f"missing keys {missing}", field=missing[0])
        return cls(
            theta=float(data['theta']),
            phi1=float(data['phi1']),
            phi2=float(data['phi2']),
            varphi=float(data['varphi']),
            xi=float(data['xi']),
        )


@dataclass(frozen=True)
class AllXi:
    """Marker: every ξ in [0, 2π) gives a symmetric walk (trivial coins)"""
    varphi: float = QUARTER_PI
    all_xi: bool = True


CoinAngles = Tuple[float, float, float]


def build_coin(theta: float, phi1: float, phi2: float) -> CoinMatrix:
    """Build the coin from its Hopf coordinates

    Args:
        theta: Coin angle in [0, 2π)
        phi1: Phase in [0, π)
        phi2: Phase in [0, π)

    Returns:
        CoinMatrix with a = cos θ e^{i(φ1+φ2)/2}, b = sin θ e^{i(φ1−φ2)/2},
        c = −conj(b), d = conj(a)
    """
    theta = _check_range('theta', theta, 0.0, TWO_PI)
    phi1 = _check_range('phi1', phi1, 0.0, math.pi)
    phi2 = _check_range('phi2', phi2, 0.0, math.pi)

    cos_t, sin_t = math.cos(theta), math.sin(theta)
    sigma = 0.5 * (phi1 + phi2)
    tau = 0.5 * (phi1 - phi2)
    a = cos_t * complex(math.cos(sigma), math.sin(sigma))
    b = sin_t * complex(math.cos(tau), math.sin(tau))
    return CoinMatrix(a=a, b=b, c=-b.conjugate(), d=a.conjugate())


def build_coin_state(varphi: float, xi: float) -> CoinState:
    """Coin state (cos φ, e^{iξ} sin φ)"""
    varphi = _check_range('varphi', varphi, 0.0, HALF_PI, closed_high=True)
    xi = _check_range('xi', xi, 0.0, TWO_PI)
    return CoinState(
        alpha=complex(math.cos(varphi), 0.0),
        beta=math.sin(varphi) * complex(math.cos(xi), math.sin(xi)),
    )


def _theta_of(coin: Union[CoinSetup, CoinAngles]) -> Tuple[float, float, float]:
    if isinstance(coin, CoinSetup):
        return coin.theta, coin.phi1, coin.phi2
    theta, phi1, phi2 = coin
    return float(theta), float(phi1), float(phi2)


def is_trivial(setup: Union[CoinSetup, CoinAngles]) -> bool:
    """True iff a·b·c·d = 0, i.e. cos θ sin θ vanishes"""
    theta, _, _ = _theta_of(setup)
    return abs(math.cos(theta) * math.sin(theta)) < TRIVIAL_TOL


def symmetry_residual(setup: CoinSetup) -> float:
    """aα·conj(bβ) + conj(aα)·bβ, the first-step asymmetry term

    Equals 2 cos θ sin θ cos φ sin φ cos(ξ − φ2).
    """
    coin, state = setup.coin(), setup.state()
    cross = coin.a * state.alpha * (coin.b * state.beta).conjugate()
    return 2.0 * cross.real


def lambda_of(setup: CoinSetup) -> float:
    """Asymmetry parameter λ of the limiting density

    λ = |α|² − |β|² + (aα·conj(bβ) + conj(aα)·bβ) / |a|²

    Raises:
        SingularCoinError: when |a| = 0 (θ ≡ π/2 mod π)
    """
    coin, state = setup.coin(), setup.state()
    a_sq = abs(coin.a) ** 2
    if math.sqrt(a_sq) < TRIVIAL_TOL:
        raise SingularCoinError("|a| = 0, lambda undefined", field='theta')
    return abs(state.alpha) ** 2 - abs(state.beta) ** 2 + symmetry_residual(setup) / a_sq


def lambda_real_form(setup: CoinSetup) -> float:
    """cos 2φ + sin 2φ tan θ cos(ξ − φ2); cross-check for lambda_of"""
    if abs(math.cos(setup.theta)) < TRIVIAL_TOL:
        raise SingularCoinError("|a| = 0, lambda undefined", field='theta')
    return (math.cos(2.0 * setup.varphi)
            + math.sin(2.0 * setup.varphi) * math.tan(setup.theta) * math.cos(setup.xi - setup.phi2))


def is_symmetric(setup: CoinSetup) -> bool:
    """Symmetric in distribution: |α| = |β| and (trivial coin or φ2 ≡ π/2 + ξ mod π)"""
    if abs(setup.varphi - QUARTER_PI) > ANGLE_TOL:
        return False
    if is_trivial(setup):
        return True
    return congruent(setup.phi2, HALF_PI + setup.xi, math.pi)


def symmetric_coin_states(coin: Union[CoinSetup, CoinAngles]) -> Union[List[float], AllXi]:
    """Values of ξ that make the walk symmetric, with φ = π/4

    Returns:
        Sorted pair of ξ in [0, 2π) for non-trivial coins, AllXi otherwise
    """
    theta, phi1, phi2 = _theta_of(coin)
    if is_trivial((theta, phi1, phi2)):
        return AllXi()
    first = wrap_angle(phi2 - HALF_PI)
    second = wrap_angle(first + math.pi)
    return sorted([first, second])
