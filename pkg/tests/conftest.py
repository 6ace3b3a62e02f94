"""Shared fixtures for the test suite"""
import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from walk_core.coin_algebra import CoinSetup


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def hadamard_symmetric():
    """theta = pi/4 coin with the state (|up> + i|down>)/sqrt(2)"""
    return CoinSetup(theta=math.pi / 4, phi1=0.0, phi2=0.0, varphi=math.pi / 4, xi=math.pi / 2)
