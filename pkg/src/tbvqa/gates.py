"""Native-gate circuit representation and exact small-matrix semantics.

The gate set mirrors a transmon chip with virtual Z rotations: RZ(theta),
fixed RX(pi/2) pulses, CPHASE(theta) = diag(1, 1, 1, e^{-i theta}) and the
XY(beta) = exp(-i beta (XX + YY)) interaction. RZ is kept explicit in the IR
(it is error-free on hardware) so gate accounting matches the compiled form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

RZ = "RZ"
RX90 = "RX90"
CPHASE = "CPHASE"
XY = "XY"

_TWO_QUBIT_KINDS = frozenset({CPHASE, XY})
_ANGLED_KINDS = frozenset({RZ, CPHASE, XY})


@dataclass(frozen=True)
class NativeGate:
    kind: str
    qubits: tuple[int, ...]
    angle: float = 0.0

    def __post_init__(self) -> None:
        if self.kind in _TWO_QUBIT_KINDS:
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise ValueError(f"{self.kind} needs two distinct qubits, got {self.qubits}")
        elif self.kind in (RZ, RX90):
            if len(self.qubits) != 1:
                raise ValueError(f"{self.kind} acts on one qubit, got {self.qubits}")
        else:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if not math.isfinite(self.angle):
            raise ValueError("gate angle must be finite")


def rz(qubit: int, theta: float) -> NativeGate:
    return NativeGate(RZ, (qubit,), theta)


def rx90(qubit: int) -> NativeGate:
    return NativeGate(RX90, (qubit,))


def cphase(qubit_a: int, qubit_b: int, theta: float) -> NativeGate:
    return NativeGate(CPHASE, (qubit_a, qubit_b), theta)


def xy(qubit_a: int, qubit_b: int, beta: float) -> NativeGate:
    return NativeGate(XY, (qubit_a, qubit_b), beta)


def gate_unitary(gate: NativeGate) -> np.ndarray:
    """Dense matrix of a native gate.

    Two-qubit matrices are written in the basis |q_first q_second> with the
    first listed qubit as the more significant bit; all supported two-qubit
    gates are symmetric under qubit exchange, so the ordering is cosmetic.
    """
    if gate.kind == RZ:
        half = gate.angle / 2.0
        return np.diag([np.exp(-1j * half), np.exp(1j * half)])
    if gate.kind == RX90:
        c = 1.0 / math.sqrt(2.0)
        return np.array([[c, -1j * c], [-1j * c, c]])
    if gate.kind == CPHASE:
        return np.diag([1.0, 1.0, 1.0, np.exp(-1j * gate.angle)])
    if gate.kind == XY:
        c = math.cos(2.0 * gate.angle)
        s = math.sin(2.0 * gate.angle)
        m = np.eye(4, dtype=complex)
        m[1, 1] = m[2, 2] = c
        m[1, 2] = m[2, 1] = -1j * s
        return m
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def phase_blind_distance(u: np.ndarray, v: np.ndarray) -> float:
    """1 - |tr(U^dag V)| / dim: zero iff the unitaries agree up to a global phase."""
    dim = u.shape[0]
    return 1.0 - abs(np.trace(u.conj().T @ v)) / dim


def compose_rx(qubit: int, theta: float) -> list[NativeGate]:
    """RX(theta) from two fixed RX90 pulses and three virtual RZ rotations.

    The product equals exp(-i theta/2 X) up to a global phase.
    """
    return [
        rz(qubit, math.pi / 2),
        rx90(qubit),
        rz(qubit, theta + math.pi),
        rx90(qubit),
        rz(qubit, math.pi / 2),
    ]


def zz_block(qubit_a: int, qubit_b: int, theta: float) -> list[NativeGate]:
    """exp(-i theta Z x Z) as one CPHASE(4 theta) plus RZ(2 theta) on each qubit.

    Restricted to adjacent qubits: this is the linear-chain compilation path.
    """
    if abs(qubit_a - qubit_b) != 1:
        raise ValueError(f"zz_block requires adjacent qubits, got ({qubit_a}, {qubit_b})")
    return [
        cphase(qubit_a, qubit_b, 4.0 * theta),
        rz(qubit_a, 2.0 * theta),
        rz(qubit_b, 2.0 * theta),
    ]


def hadamard_layer(n: int) -> list[NativeGate]:
    """Hadamard on every qubit, each as RZ(pi/2) RX90 RZ(pi/2) (up to phase)."""
    gates: list[NativeGate] = []
    for q in range(n):
        gates.extend([rz(q, math.pi / 2), rx90(q), rz(q, math.pi / 2)])
    return gates


@dataclass(frozen=True)
class Circuit:
    """Ordered native gates plus the final logical-to-physical qubit map.

    ``qubit_map[i]`` is the physical wire holding logical variable i after all
    absorbed SWAPs; ``prologue`` tags whether the gate list starts with the
    compiled Hadamard-all layer.
    """

    n: int
    gates: tuple[NativeGate, ...]
    qubit_map: tuple[int, ...]
    prologue: str = "none"

    def __post_init__(self) -> None:
        if sorted(self.qubit_map) != list(range(self.n)):
            raise ValueError("qubit_map must be a permutation of 0..n-1")
        for gate in self.gates:
            if any(not (0 <= q < self.n) for q in gate.qubits):
                raise ValueError(f"gate {gate} addresses a qubit outside 0..{self.n - 1}")
        if self.prologue not in ("none", "hadamard"):
            raise ValueError(f"unknown prologue tag {self.prologue!r}")


@dataclass(frozen=True)
class GateCounts:
    two_qubit: int = 0
    rx90: int = 0
    rz: int = 0


def count_gates(circuit: Circuit | Iterable[NativeGate]) -> GateCounts:
    """Exact per-kind totals; RZ stays separate because it is error-free."""
    gates = circuit.gates if isinstance(circuit, Circuit) else tuple(circuit)
    two_qubit = sum(1 for g in gates if g.kind in _TWO_QUBIT_KINDS)
    n_rx90 = sum(1 for g in gates if g.kind == RX90)
    n_rz = sum(1 for g in gates if g.kind == RZ)
    return GateCounts(two_qubit=two_qubit, rx90=n_rx90, rz=n_rz)


def dump_circuit(circuit: Circuit) -> str:
    """Line-oriented text form, one gate per line; byte-stable for fixed input."""
    lines = [f"n={circuit.n}", "map=" + " ".join(str(w) for w in circuit.qubit_map)]
    for gate in circuit.gates:
        tokens = [gate.kind] + [f"q{q}" for q in gate.qubits]
        if gate.kind in _ANGLED_KINDS:
            tokens.append(f"{gate.angle:.10f}")
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def load_circuit(text: str) -> Circuit:
    """Parse the dump format. The prologue tag is builder metadata and is not
    serialized, so loaded circuits carry prologue="none"."""
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) < 2 or not lines[0].startswith("n=") or not lines[1].startswith("map="):
        raise ValueError("circuit dump must start with n= and map= header lines")
    n = int(lines[0][2:])
    qubit_map = tuple(int(tok) for tok in lines[1][4:].split())
    gates = []
    for line in lines[2:]:
        tokens = line.split()
        kind = tokens[0]
        if kind in _ANGLED_KINDS:
            qubits = tuple(int(tok[1:]) for tok in tokens[1:-1])
            angle = float(tokens[-1])
        else:
            qubits = tuple(int(tok[1:]) for tok in tokens[1:])
            angle = 0.0
        gates.append(NativeGate(kind, qubits, angle))
    return Circuit(n=n, gates=tuple(gates), qubit_map=qubit_map)
