"""Time-block QAOA/QAMPA circuits on a linear chain.

A full algorithmic round is n checkerboard sublayers of adjacent two-qubit
blocks; every block absorbs its SWAP into phase shifts of the ZZ and XY
parts, so the builder only tracks the running variable permutation. Time
block t groups k consecutive sublayers under one (gamma_t, beta_t) pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gates
from .ising import SKInstance, full_energy_table

# Sampler domains for the variational angles: the period of CPHASE(4*gamma)
# and of XY(beta) respectively.
GAMMA_RANGE = (0.0, math.pi / 2)
BETA_RANGE = (0.0, math.pi)

_BASES = ("qaoa", "qampa")


@dataclass(frozen=True)
class AnsatzSpec:
    """Which time-block ansatz to build: base family, width, and shape."""

    base: str
    n: int
    k: int
    p: int

    def __post_init__(self) -> None:
        if self.base not in _BASES:
            raise ValueError(f"base must be one of {_BASES}, got {self.base!r}")
        if self.n < 2 or self.k < 1 or self.p < 1:
            raise ValueError("require n >= 2, k >= 1, p >= 1")


@dataclass(frozen=True)
class GateOrdering:
    """Initial placement of logical variables: assignment[pos] = variable at pos."""

    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.assignment) != list(range(len(self.assignment))):
            raise ValueError("assignment must be a permutation of 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "GateOrdering":
        return cls(assignment=tuple(range(n)))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "GateOrdering":
        return cls(assignment=tuple(int(v) for v in rng.permutation(n)))


@dataclass(frozen=True)
class AngleVector:
    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.gammas) != len(self.betas):
            raise ValueError("gammas and betas must have equal length")

    @classmethod
    def from_array(cls, values: Sequence[float]) -> "AngleVector":
        values = [float(v) for v in values]
        if len(values) % 2:
            raise ValueError("angle array must have even length (p gammas then p betas)")
        p = len(values) // 2
        return cls(gammas=tuple(values[:p]), betas=tuple(values[p:]))

    def as_array(self) -> np.ndarray:
        return np.array(self.gammas + self.betas, dtype=float)


@dataclass(frozen=True)
class SwapSchedule:
    """Checkerboard sublayers and the running permutation they induce.

    ``perms[l][pos]`` is the starting position of the variable sitting at
    ``pos`` after sublayers 0..l have been applied.
    """

    n: int
    sublayers: tuple[tuple[tuple[int, int], ...], ...]
    perms: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class InteractionStep:
    """One realized two-qubit block: which coupling it implements and when."""

    logical_i: int
    logical_j: int
    coupling: int
    time_block: int


def checkerboard_pairs(n: int, sublayer: int) -> list[tuple[int, int]]:
    """Adjacent position pairs of a 1-indexed sublayer: odd sublayers start
    at position 0, even ones at position 1."""
    start = 0 if sublayer % 2 == 1 else 1
    return [(q, q + 1) for q in range(start, n - 1, 2)]


def build_swap_schedule(n: int, total_sublayers: int) -> SwapSchedule:
    """Checkerboard schedule with the permutation trail of the absorbed SWAPs."""
    if n < 2 or total_sublayers < 1:
        raise ValueError("require n >= 2 and total_sublayers >= 1")
    pos_to_origin = list(range(n))
    sublayers = []
    perms = []
    for sub in range(1, total_sublayers + 1):
        pairs = checkerboard_pairs(n, sub)
        for a, b in pairs:
            pos_to_origin[a], pos_to_origin[b] = pos_to_origin[b], pos_to_origin[a]
        sublayers.append(tuple(pairs))
        perms.append(tuple(pos_to_origin))
    return SwapSchedule(n=n, sublayers=tuple(sublayers), perms=tuple(perms))


def build_circuit(
    instance: SKInstance,
    spec: AnsatzSpec,
    ordering: GateOrdering,
    angles: AngleVector,
    prologue: bool = True,
) -> tuple[gates.Circuit, tuple[InteractionStep, ...]]:
    """Compile the time-block ansatz to native gates.

    Each block on logical pair (i, j) emits ZZ with the SWAP-absorbing shift,
    exp(-i (J_ij*gamma_t + pi/4) ZZ), followed by XY(beta_t + pi/4) for QAMPA
    or XY(pi/4) for QAOA; QAOA adds an RX(2*beta_t) mixer on every qubit after
    each time block. No explicit SWAP is ever emitted: the first sublayer acts
    directly on the initial assignment and mirroring across rounds falls out
    of the tracked permutation.
    """
    n = spec.n
    if instance.n != n:
        raise ValueError(f"instance has n={instance.n} but spec has n={n}")
    if len(ordering.assignment) != n:
        raise ValueError("ordering length does not match n")
    if len(angles.gammas) != spec.p:
        raise ValueError(f"need {spec.p} angle pairs, got {len(angles.gammas)}")

    qampa = spec.base == "qampa"
    schedule = build_swap_schedule(n, spec.k * spec.p)
    gate_list: list[gates.NativeGate] = []
    if prologue:
        gate_list.extend(gates.hadamard_layer(n))

    pos_to_var = list(ordering.assignment)
    trace: list[InteractionStep] = []
    for t in range(spec.p):
        gamma = angles.gammas[t]
        beta = angles.betas[t]
        beta_xy = (beta + math.pi / 4) if qampa else (math.pi / 4)
        for sub in range(t * spec.k, (t + 1) * spec.k):
            for a, b in schedule.sublayers[sub]:
                u, v = pos_to_var[a], pos_to_var[b]
                i, j = (u, v) if u < v else (v, u)
                coupling = instance.couplings[(i, j)]
                gate_list.extend(gates.zz_block(a, b, coupling * gamma + math.pi / 4))
                gate_list.append(gates.xy(a, b, beta_xy))
                trace.append(InteractionStep(i, j, coupling, t))
                pos_to_var[a], pos_to_var[b] = pos_to_var[b], pos_to_var[a]
        if not qampa:
            for q in range(n):
                gate_list.extend(gates.compose_rx(q, 2.0 * beta))

    qubit_map = [0] * n
    for pos, var in enumerate(pos_to_var):
        qubit_map[var] = pos
    circuit = gates.Circuit(
        n=n,
        gates=tuple(gate_list),
        qubit_map=tuple(qubit_map),
        prologue="hadamard" if prologue else "none",
    )
    return circuit, tuple(trace)


def full_round_pairs(n: int) -> list[tuple[int, int]]:
    """Logical pairs in the order one full round meets them (identity layout)."""
    schedule = build_swap_schedule(n, n)
    pos_to_var = list(range(n))
    pairs = []
    for sub_pairs in schedule.sublayers:
        for a, b in sub_pairs:
            u, v = pos_to_var[a], pos_to_var[b]
            pairs.append((u, v) if u < v else (v, u))
            pos_to_var[a], pos_to_var[b] = pos_to_var[b], pos_to_var[a]
    return pairs


def _embed_pair_unitary(u4: np.ndarray, qa: int, qb: int, n: int) -> np.ndarray:
    """Dense 2^n matrix of a 4x4 acting on logical qubits (qa, qb), qa as the
    more significant of the pair."""
    dim = 1 << n
    full = np.zeros((dim, dim), dtype=complex)
    mask = (1 << qa) | (1 << qb)
    for col in range(dim):
        ca, cb = (col >> qa) & 1, (col >> qb) & 1
        base = col & ~mask
        for row4 in range(4):
            ra, rb = row4 >> 1, row4 & 1
            value = u4[row4, 2 * ca + cb]
            if value != 0:
                full[base | (ra << qa) | (rb << qb), col] = value
    return full


def standard_layer_unitary(
    instance: SKInstance,
    gamma: float,
    beta: float,
    base: str,
    pair_order: Sequence[tuple[int, int]] | None = None,
) -> np.ndarray:
    """Exact dense matrix of one standard (non-time-block) ansatz layer.

    QAOA: mixer times phase separator, (x)exp(-i beta X) . exp(-i gamma H).
    QAMPA: the ordered product of per-pair ZZ.XY unitaries; by default the
    pairs run in the order a full swap-network round realizes them.
    """
    n = instance.n
    if n > 10:
        raise ValueError("dense standard layer caps at n=10")
    if base not in _BASES:
        raise ValueError(f"base must be one of {_BASES}, got {base!r}")
    dim = 1 << n
    if base == "qaoa":
        phases = np.exp(-1j * gamma * full_energy_table(instance))
        c, s = math.cos(beta), math.sin(beta)
        rx = np.array([[c, -1j * s], [-1j * s, c]])
        mixer = np.array([[1.0 + 0j]])
        for _ in range(n):
            mixer = np.kron(mixer, rx)
        return mixer * phases[None, :]
    if pair_order is None:
        pair_order = full_round_pairs(n)
    unitary = np.eye(dim, dtype=complex)
    for i, j in pair_order:
        coupling = instance.couplings[(min(i, j), max(i, j))]
        zz = np.diag(np.exp(-1j * gamma * coupling * np.array([1, -1, -1, 1])))
        block = zz @ gates.gate_unitary(gates.xy(0, 1, beta))
        unitary = _embed_pair_unitary(block, max(i, j), min(i, j), n) @ unitary
    return unitary


def equivalent_standard_depth(spec: AnsatzSpec) -> float:
    """Circuit depth as a fraction of standard-ansatz layers: p*k/n."""
    return spec.p * spec.k / spec.n
