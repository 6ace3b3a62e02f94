"""Random coin setups shared by the property tests"""
import math

from hypothesis import strategies as st

from walk_core.coin_algebra import CoinSetup, symmetric_coin_states

NONTRIVIAL_MARGIN = 1e-3


def _nontrivial(theta: float) -> bool:
    return abs(math.cos(theta) * math.sin(theta)) > NONTRIVIAL_MARGIN


def random_setup(rng, nontrivial: bool = True) -> CoinSetup:
    """Uniform draw over the angle domains, away from trivial coins if asked"""
    while True:
        theta = rng.uniform(0.0, 2 * math.pi)
        if not nontrivial or _nontrivial(theta):
            break
    return CoinSetup(
        theta=theta,
        phi1=rng.uniform(0.0, math.pi),
        phi2=rng.uniform(0.0, math.pi),
        varphi=rng.uniform(0.0, math.pi / 2),
        xi=rng.uniform(0.0, 2 * math.pi),
    )


def random_symmetric_setup(rng) -> CoinSetup:
    """Non-trivial coin with one of its two symmetric coin states"""
    base = random_setup(rng)
    xi = symmetric_coin_states(base)[int(rng.integers(2))]
    return CoinSetup(theta=base.theta, phi1=base.phi1, phi2=base.phi2, varphi=math.pi / 4, xi=xi)


thetas = st.floats(min_value=0.0, max_value=2 * math.pi, exclude_max=True)
nontrivial_thetas = thetas.filter(_nontrivial)
phases = st.floats(min_value=0.0, max_value=math.pi, exclude_max=True)
state_angles = st.floats(min_value=0.0, max_value=math.pi / 2)


@st.composite
def setups(draw, nontrivial: bool = False) -> CoinSetup:
    return CoinSetup(
        theta=draw(nontrivial_thetas if nontrivial else thetas),
        phi1=draw(phases),
        phi2=draw(phases),
        varphi=draw(state_angles),
        xi=draw(thetas),
    )


@st.composite
def symmetric_setups(draw) -> CoinSetup:
    theta, phi1, phi2 = draw(nontrivial_thetas), draw(phases), draw(phases)
    xi = draw(st.sampled_from(symmetric_coin_states((theta, phi1, phi2))))
    return CoinSetup(theta=theta, phi1=phi1, phi2=phi2, varphi=math.pi / 4, xi=xi)
