"""Tests for coin construction, triviality, lambda and symmetry predicates"""
import math

import numpy as np
import pytest
from hypothesis import given

from tests.helpers import random_setup, setups
from utils.errors import DomainError, SingularCoinError
from walk_core.coin_algebra import (
    AllXi,
    CoinSetup,
    build_coin,
    build_coin_state,
    is_symmetric,
    is_trivial,
    lambda_of,
    lambda_real_form,
    symmetric_coin_states,
    symmetry_residual,
    wrap_angle,
)


class TestBuildCoin:
    def test_identity(self):
        coin = build_coin(0.0, 0.0, 0.0)
        assert np.allclose(coin.as_array(), np.eye(2))

    def test_quarter_turn(self):
        coin = build_coin(math.pi / 2, 0.0, 0.0)
        assert np.allclose(coin.as_array(), [[0, 1], [-1, 0]], atol=1e-15)

    def test_hadamard_like(self):
        coin = build_coin(math.pi / 4, 0.0, 0.0)
        r = 1 / math.sqrt(2)
        assert np.allclose(coin.as_array(), [[r, r], [-r, r]])

    def test_phases_enter_a_and_b(self):
        coin = build_coin(0.3, 0.4, 0.2)
        assert coin.a == pytest.approx(math.cos(0.3) * np.exp(0.3j))
        assert coin.b == pytest.approx(math.sin(0.3) * np.exp(0.1j))
        assert coin.c == pytest.approx(-coin.b.conjugate())
        assert coin.d == pytest.approx(coin.a.conjugate())

    def test_phase_out_of_range(self):
        with pytest.raises(DomainError) as info:
            build_coin(0.1, math.pi, 0.0)
        assert info.value.field == 'phi1'
        assert 'phi1' in str(info.value)

    def test_theta_out_of_range(self):
        with pytest.raises(DomainError):
            build_coin(2 * math.pi, 0.0, 0.0)

    @given(setups())
    def test_special_unitary(self, setup):
        assert setup.coin().is_special_unitary(1e-14)


class TestCoinState:
    def test_basis_states(self):
        up = build_coin_state(0.0, 1.234)
        assert up.alpha == 1.0 and up.beta == 0.0
        down = build_coin_state(math.pi / 2, 0.0)
        assert abs(down.alpha) < 1e-16
        assert down.beta == pytest.approx(1.0)

    def test_balanced_state(self):
        state = build_coin_state(math.pi / 4, math.pi / 2)
        r = 1 / math.sqrt(2)
        assert state.alpha == pytest.approx(r)
        assert state.beta == pytest.approx(1j * r)

    def test_varphi_closed_upper_bound(self):
        build_coin_state(math.pi / 2, 0.0)
        with pytest.raises(DomainError) as info:
            build_coin_state(math.pi / 2 + 1e-9, 0.0)
        assert info.value.field == 'varphi'

    @given(setups())
    def test_normalised(self, setup):
        assert setup.state().norm() == pytest.approx(1.0, abs=1e-15)


class TestTriviality:
    @pytest.mark.parametrize('theta', [0.0, math.pi / 2, math.pi, 3 * math.pi / 2])
    def test_trivial_angles(self, theta):
        assert is_trivial((theta, 0.0, 0.0))

    @pytest.mark.parametrize('theta', [0.1, math.pi / 4, 2.0, 5.0])
    def test_nontrivial_angles(self, theta):
        assert not is_trivial(CoinSetup(theta=theta))


class TestLambda:
    def test_symmetric_hadamard_is_zero(self, hadamard_symmetric):
        assert lambda_of(hadamard_symmetric) == pytest.approx(0.0, abs=1e-12)

    def test_spin_up_start(self):
        setup = CoinSetup(theta=math.pi / 4, varphi=0.0, xi=0.0)
        assert lambda_of(setup) == pytest.approx(1.0)

    def test_equal_lambda_for_distinct_states(self):
        s1 = CoinSetup(theta=1.2, varphi=0.2, xi=0.0)
        s2 = CoinSetup(theta=1.2, varphi=1.0, xi=0.0)
        expected = math.cos(0.4) + math.sin(0.4) * math.tan(1.2)
        assert lambda_of(s1) == pytest.approx(expected, rel=1e-12)
        assert abs(lambda_of(s1) - lambda_of(s2)) <= 1e-12

    def test_singular_coin(self):
        with pytest.raises(SingularCoinError) as info:
            lambda_of(CoinSetup(theta=math.pi / 2))
        assert info.value.field == 'theta'
        assert isinstance(info.value, DomainError)

    @given(setups(nontrivial=True))
    def test_bounded_by_secant(self, setup):
        bound = 1.0 / abs(math.cos(setup.theta))
        assert abs(lambda_of(setup)) <= bound * (1 + 1e-12) + 1e-12

    @given(setups(nontrivial=True))
    def test_general_and_real_forms_agree(self, setup):
        assert lambda_of(setup) == pytest.approx(lambda_real_form(setup), rel=1e-9, abs=1e-9)


class TestSymmetry:
    def test_hadamard_symmetric(self, hadamard_symmetric):
        assert is_symmetric(hadamard_symmetric)

    def test_spin_up_not_symmetric(self):
        assert not is_symmetric(CoinSetup(theta=math.pi / 4, varphi=0.0, xi=0.0))

    def test_trivial_coin_symmetric_for_any_xi(self):
        assert is_symmetric(CoinSetup(theta=0.0, varphi=math.pi / 4, xi=1.234))

    def test_unbalanced_state_never_symmetric(self):
        assert not is_symmetric(CoinSetup(theta=0.0, varphi=0.3, xi=1.234))

    def test_states_for_zero_phase(self):
        xs = symmetric_coin_states((math.pi / 4, 0.0, 0.0))
        assert xs == pytest.approx([math.pi / 2, 3 * math.pi / 2])

    def test_states_for_quarter_phase(self):
        xs = symmetric_coin_states((math.pi / 4, 0.0, math.pi / 2))
        assert xs == pytest.approx([0.0, math.pi], abs=1e-15)

    def test_trivial_coin_gives_all_xi(self):
        result = symmetric_coin_states((math.pi / 2, 0.0, 0.0))
        assert isinstance(result, AllXi)
        assert result.varphi == pytest.approx(math.pi / 4)

    def test_round_trip(self, rng):
        for _ in range(1000):
            base = random_setup(rng)
            xs = symmetric_coin_states(base)
            assert len(xs) == 2 and xs[0] < xs[1]
            for xi in xs:
                setup = CoinSetup(theta=base.theta, phi1=base.phi1, phi2=base.phi2,
                                  varphi=math.pi / 4, xi=xi)
                assert is_symmetric(setup)

    def test_symmetric_states_have_zero_lambda(self, rng):
        checked = 0
        while checked < 200:
            base = random_setup(rng)
            if abs(math.cos(base.theta)) < 0.1:
                continue
            for xi in symmetric_coin_states(base):
                setup = CoinSetup(theta=base.theta, phi1=base.phi1, phi2=base.phi2,
                                  varphi=math.pi / 4, xi=xi)
                assert lambda_of(setup) == pytest.approx(0.0, abs=1e-12)
            checked += 1

    def test_exactly_two_residual_zeros(self, rng):
        """Sign changes of the first-step residual over a fine xi grid match the two roots"""
        grid = np.arange(0.0, 2 * math.pi, 1e-3)
        for _ in range(100):
            base = random_setup(rng)
            coin = base.coin()
            beta = math.sin(math.pi / 4) * np.exp(1j * grid)
            alpha = math.cos(math.pi / 4)
            residual = 2.0 * np.real(coin.a * alpha * np.conj(coin.b * beta))

            signs = np.sign(residual)
            changes = np.nonzero(signs != np.roll(signs, -1))[0]
            assert changes.size == 2

            midpoints = grid[changes] + 5e-4
            for xi in symmetric_coin_states(base):
                gaps = np.abs([wrap_angle(xi - m + math.pi) - math.pi for m in midpoints])
                assert gaps.min() <= 1e-3

    def test_residual_matches_real_form(self):
        setup = CoinSetup(theta=0.7, phi1=0.3, phi2=1.1, varphi=0.4, xi=2.5)
        expected = (2 * math.cos(0.7) * math.sin(0.7) * math.cos(0.4) * math.sin(0.4)
                    * math.cos(2.5 - 1.1))
        assert symmetry_residual(setup) == pytest.approx(expected, abs=1e-15)


class TestCoinSetupRecord:
    def test_dict_round_trip(self):
        setup = CoinSetup(theta=0.7, phi1=0.3, phi2=1.1, varphi=0.4, xi=2.5)
        assert CoinSetup.from_dict(setup.to_dict()) == setup

    def test_missing_key(self):
        with pytest.raises(DomainError) as info:
            CoinSetup.from_dict({'theta': 0.1, 'phi1': 0.0, 'phi2': 0.0, 'varphi': 0.1})
        assert info.value.field == 'xi'

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            CoinSetup(theta=float('nan'))
