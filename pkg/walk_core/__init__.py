"""Walk Core - coin algebra, simulators and closed forms"""
from .coin_algebra import (
    AllXi,
    CoinMatrix,
    CoinSetup,
    CoinState,
    build_coin,
    build_coin_state,
    is_symmetric,
    is_trivial,
    lambda_of,
    symmetric_coin_states,
)
from .quantum_sim import SpatialDistribution, WalkState
from .classical_walk import ClassicalJointState, CorrelationParams, gillis_variance, transition_matrix
from .closed_form import (
    AmplitudeTable,
    FHCoefficients,
    classical_components_closed,
    fib_horner,
    fourier_oracle,
    kappa,
    matrix_power_fh,
    quantum_amplitudes_closed,
)

__all__ = [
    "AllXi",
    "CoinMatrix",
    "CoinSetup",
    "CoinState",
    "build_coin",
    "build_coin_state",
    "is_symmetric",
    "is_trivial",
    "lambda_of",
    "symmetric_coin_states",
    "SpatialDistribution",
    "WalkState",
    "ClassicalJointState",
    "CorrelationParams",
    "gillis_variance",
    "transition_matrix",
    "AmplitudeTable",
    "FHCoefficients",
    "classical_components_closed",
    "fib_horner",
    "fourier_oracle",
    "kappa",
    "matrix_power_fh",
    "quantum_amplitudes_closed",
]
