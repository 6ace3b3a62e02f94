"""Classification Module - canonical representatives and distributional equivalence"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import numpy as np

from utils.config import section
from utils.errors import DomainError, NoLimitingDistributionError, PreconditionError
from walk_core.coin_algebra import (
    ANGLE_TOL,
    HALF_PI,
    QUARTER_PI,
    TWO_PI,
    CoinSetup,
    is_symmetric,
    is_trivial,
    lambda_of,
    wrap_angle,
)
from walk_core.quantum_sim import distribution, initial_state, step

logger = logging.getLogger(__name__)

_classify_config = section('classify')
DEFAULT_N_MAX: int = _classify_config.get('n_max', 12)
DEFAULT_TOL: float = _classify_config.get('tol', 1e-10)


@dataclass(frozen=True)
class CanonicalSymmetric:
    """Representative of a symmetric class: coin angle in [0, π/2]"""
    theta: float

    def to_setup(self) -> CoinSetup:
        return CoinSetup(theta=self.theta, phi1=0.0, phi2=0.0, varphi=QUARTER_PI, xi=HALF_PI)


@dataclass(frozen=True)
class CanonicalTriple:
    """(φ, ξ, θ) in [0, π/2] x [0, π] x [0, π/2]; the Hopf phases are zero"""
    varphi: float
    xi: float
    theta: float

    def to_setup(self) -> CoinSetup:
        return CoinSetup(theta=self.theta, phi1=0.0, phi2=0.0, varphi=self.varphi, xi=self.xi)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class AsymptoticTriple:
    """Unique representative of a limiting-density class

    Lies in (ξ = 0, φ ∈ [θ/2, π/4 + θ/2]) or (ξ = π, φ ∈ (π/4 − θ/2, (π − θ)/2]),
    with θ ∈ (0, π/2) in both branches.
    """
    varphi: float
    xi: float
    theta: float

    def to_setup(self) -> CoinSetup:
        return CoinSetup(theta=self.theta, phi1=0.0, phi2=0.0, varphi=min(self.varphi, HALF_PI), xi=self.xi)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def in_region(self, tol: float = 1e-12) -> bool:
        t, p = self.theta, self.varphi
        if not 0.0 < t < HALF_PI:
            return False
        if self.xi == 0.0:
            return t / 2 - tol <= p <= QUARTER_PI + t / 2 + tol
        if self.xi == math.pi:
            return QUARTER_PI - t / 2 - tol < p <= (math.pi - t) / 2 + tol
        return False


def rho(x: float) -> float:
    """Fold [0, 2π) onto [0, π/2] preserving cos² and sin²"""
    x = float(x)
    if not 0.0 <= x < TWO_PI:
        raise DomainError(f"{x} outside [0, 2pi)", field='theta')
    if x < HALF_PI:
        return x
    if x < math.pi:
        return math.pi - x
    if x < 1.5 * math.pi:
        return x - math.pi
    return TWO_PI - x


def _rho_reflects(theta: float) -> bool:
    """True when rho negates the coin angle (up to a global phase)"""
    folded = rho(theta)
    in_reflecting_branch = HALF_PI <= theta < math.pi or theta >= 1.5 * math.pi
    return in_reflecting_branch and folded != theta


def canonical_symmetric(setup: CoinSetup) -> CanonicalSymmetric:
    """θ' = rho(θ) for a symmetric setup

    Raises:
        PreconditionError: if the setup is not symmetric
    """
    if not is_symmetric(setup):
        raise PreconditionError("setup is not symmetric in distribution")
    return CanonicalSymmetric(theta=rho(setup.theta))


def canonical_distributional(setup: CoinSetup) -> CanonicalTriple:
    """Representative with zero Hopf phases and the same distribution at every n

    The walk depends on the coin state only through x = ξ − φ2. Negating θ
    shifts x by π, and conjugation sends x to −x, so x is folded into [0, π].
    """
    theta = rho(setup.theta)
    x = setup.xi - setup.phi2
    if _rho_reflects(setup.theta):
        x += math.pi
    x = wrap_angle(x)
    if x > math.pi:
        x = TWO_PI - x
    return CanonicalTriple(varphi=setup.varphi, xi=x, theta=theta)


def canonical_asymptotic(setup: CoinSetup) -> AsymptoticTriple:
    """Representative sharing the same (θ', λ) and hence the same limiting density

    Raises:
        NoLimitingDistributionError: for trivial coins
    """
    if is_trivial(setup):
        raise NoLimitingDistributionError("trivial coins have no limiting density")
    return asymptotic_representative(setup.theta, lambda_of(setup))


def asymptotic_representative(theta: float, lam: float) -> AsymptoticTriple:
    """Setup triple whose limiting density has half-width |cos θ| and asymmetry λ

    Raises:
        NoLimitingDistributionError: for trivial coin angles
    """
    theta = rho(wrap_angle(theta))
    if is_trivial((theta, 0.0, 0.0)):
        raise NoLimitingDistributionError("trivial coins have no limiting density")
    if abs(lam) < ANGLE_TOL:
        lam = 0.0
    lam_hat = float(np.clip(lam * math.cos(theta), -1.0, 1.0))
    if lam >= 0.0:
        return AsymptoticTriple(varphi=(theta + math.acos(lam_hat)) / 2, xi=0.0, theta=theta)
    return AsymptoticTriple(varphi=(math.acos(lam_hat) - theta) / 2, xi=math.pi, theta=theta)


def max_distribution_gap(s1: CoinSetup, s2: CoinSetup, n_max: int) -> float:
    """sup over n <= n_max and j of |p_{s1}(j, n) - p_{s2}(j, n)| by direct evolution"""
    if int(n_max) != n_max or n_max < 1:
        raise DomainError(f"must be a positive integer, got {n_max}", field='n_max')
    coin1, coin2 = s1.coin(), s2.coin()
    state1, state2 = initial_state(s1), initial_state(s2)
    gap = 0.0
    for _ in range(int(n_max)):
        state1, state2 = step(state1, coin1), step(state2, coin2)
        diff = np.abs(distribution(state1).pmf - distribution(state2).pmf)
        gap = max(gap, float(np.max(diff)))
    return gap


def distributions_equal_up_to(s1: CoinSetup, s2: CoinSetup,
                              n_max: int = DEFAULT_N_MAX, tol: float = DEFAULT_TOL) -> bool:
    """True iff the spatial distributions agree within tol for every n <= n_max"""
    if not tol > 0.0:
        raise DomainError(f"must be positive, got {tol}", field='tol')
    gap = max_distribution_gap(s1, s2, n_max)
    logger.debug(f"Distribution gap up to n={n_max}: {gap:.3e}")
    return gap <= tol


def classify_setup(setup: CoinSetup) -> Dict[str, Any]:
    """Aggregate classification record for one setup"""
    symmetric = is_symmetric(setup)
    trivial = is_trivial(setup)
    lam: Optional[float]
    try:
        lam = lambda_of(setup)
    except DomainError:
        lam = None

    record: Dict[str, Any] = {
        'setup': setup.to_dict(),
        'symmetric': symmetric,
        'trivial': trivial,
        'lambda': lam,
        'canonical': canonical_distributional(setup).to_dict(),
        'canonical_symmetric': canonical_symmetric(setup).theta if symmetric else None,
        'asymptotic': None,
        'note': None,
    }
    if trivial:
        record['note'] = 'trivial coin: no limiting density'
    else:
        record['asymptotic'] = canonical_asymptotic(setup).to_dict()
    return record
