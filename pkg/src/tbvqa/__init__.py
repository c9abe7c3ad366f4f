"""Workbench for time-block QAOA/QAMPA circuits on linear qubit chains:
Sherrington-Kirkpatrick instances, swap-network compilation to native gates,
statevector/trajectory simulation, and parameter-setting studies.
"""

from .ansatz import (
    BETA_RANGE,
    GAMMA_RANGE,
    AngleVector,
    AnsatzSpec,
    GateOrdering,
    SwapSchedule,
    build_circuit,
    build_swap_schedule,
    equivalent_standard_depth,
    standard_layer_unitary,
)
from .gates import Circuit, GateCounts, NativeGate, compose_rx, count_gates, gate_unitary, zz_block
from .ising import (
    ENUMERATION_LIMIT,
    BitflipMask,
    OracleUnavailableError,
    SKInstance,
    SpectrumSummary,
    apply_bitflip,
    cost,
    exact_spectrum,
    generate_sk,
    search_bitflips,
    zero_state_ratio,
)
from .metrics import (
    TAIL_GRID,
    EnergySamples,
    RandomBaseline,
    approx_ratio,
    energies_from_shots,
    random_baseline,
    renormalized_ratio,
    sample_mean,
    spread_analysis,
    tail_curve,
    tail_mean,
)
from .optimize import SearchSpace, Study, Trial, random_search, tpe_search, tpe_suggest
from .simulator import NoiseModel, ShotResult, StateVector, apply_circuit, expectation, run_noisy, sample
from .study import StudyConfig, attractor_scan, evaluate_trial, run_study

__version__ = "0.1.0"

__all__ = [
    "AngleVector",
    "AnsatzSpec",
    "BETA_RANGE",
    "BitflipMask",
    "Circuit",
    "ENUMERATION_LIMIT",
    "EnergySamples",
    "GAMMA_RANGE",
    "GateCounts",
    "GateOrdering",
    "NativeGate",
    "NoiseModel",
    "OracleUnavailableError",
    "RandomBaseline",
    "SKInstance",
    "SearchSpace",
    "ShotResult",
    "SpectrumSummary",
    "StateVector",
    "Study",
    "StudyConfig",
    "SwapSchedule",
    "TAIL_GRID",
    "Trial",
    "apply_bitflip",
    "apply_circuit",
    "approx_ratio",
    "attractor_scan",
    "build_circuit",
    "build_swap_schedule",
    "compose_rx",
    "cost",
    "count_gates",
    "energies_from_shots",
    "equivalent_standard_depth",
    "evaluate_trial",
    "exact_spectrum",
    "expectation",
    "gate_unitary",
    "generate_sk",
    "random_baseline",
    "random_search",
    "renormalized_ratio",
    "run_noisy",
    "run_study",
    "sample",
    "sample_mean",
    "search_bitflips",
    "spread_analysis",
    "standard_layer_unitary",
    "tail_curve",
    "tail_mean",
    "tpe_search",
    "tpe_suggest",
    "zero_state_ratio",
    "zz_block",
]
