"""Shared test oracles, kept independent of the simulation kernels.

The dense-circuit oracle embeds each gate's matrix by Kronecker products and
multiplies full 2^n x 2^n matrices; the cost oracle sums coupling terms pair
by pair in pure Python. Both deliberately avoid the vectorized product code
they are used to check.
"""

import numpy as np
import pytest

from tbvqa.gates import Circuit, gate_unitary

_SWAP4 = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def embed_gate_unitary(gate, n: int) -> np.ndarray:
    """Full 2^n matrix of one native gate via Kronecker embedding."""
    u = gate_unitary(gate)
    if len(gate.qubits) == 1:
        q = gate.qubits[0]
        return np.kron(np.eye(1 << (n - 1 - q)), np.kron(u, np.eye(1 << q)))
    a, b = gate.qubits
    if a < b:
        u = _SWAP4 @ u @ _SWAP4
        a, b = b, a
    if a - b != 1:
        raise ValueError("dense oracle only embeds adjacent two-qubit gates")
    return np.kron(np.eye(1 << (n - 1 - a)), np.kron(u, np.eye(1 << b)))


def dense_circuit_unitary(circuit: Circuit) -> np.ndarray:
    matrix = np.eye(1 << circuit.n, dtype=complex)
    for gate in circuit.gates:
        matrix = embed_gate_unitary(gate, circuit.n) @ matrix
    return matrix


def brute_force_cost(instance, bits) -> int:
    """Pair-by-pair cost evaluation, independent of the matrix path."""
    spins = [1 - 2 * int(b) for b in bits]
    return sum(j * spins[i] * spins[k] for (i, k), j in instance.couplings.items())


def brute_force_spectrum(instance):
    """Enumerate all bitstrings with the pair-loop cost; returns (c_min, c_max)."""
    n = instance.n
    energies = [
        brute_force_cost(instance, [(x >> q) & 1 for q in range(n)])
        for x in range(1 << n)
    ]
    return min(energies), max(energies)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
