"""Statevector execution, shot sampling, and Monte Carlo trajectory noise.

Qubit q is the q-th least significant bit of the basis-state index. Noise
attaches only to the two-qubit natives (CPHASE/XY): RZ is virtual and
error-free, RX90 error is deliberately omitted. Trajectories draw from one
deterministic stream per call, with a fixed batch layout, so results are
reproducible for fixed (circuit, noise, s, seed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitops import as_bit_array, bits_to_indices, index_to_string, indices_to_bits, permute_index_bits
from .gates import CPHASE, RX90, RZ, XY, Circuit, NativeGate
from .ising import SKInstance, energies_for_indices

_NORM_TOL = 1e-10
_SEED_MASK = (1 << 64) - 1

# Trajectory batches are sized so one batch holds about this many amplitudes.
_BATCH_AMPLITUDES = 1 << 19

_SQRT_HALF = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class StateVector:
    """Normalized 2^n complex amplitudes; qubit 0 is the least significant bit."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError("amplitude array must have length 2^n")
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state norm deviates from 1 by {abs(norm - 1.0):.3e}")

    @classmethod
    def zero_state(cls, n: int) -> "StateVector":
        amp = np.zeros(1 << n, dtype=complex)
        amp[0] = 1.0
        return cls(n=n, amplitudes=amp)

    @classmethod
    def basis_state(cls, n: int, bits) -> "StateVector":
        index = int(bits_to_indices(as_bit_array(bits, n)[None, :])[0])
        amp = np.zeros(1 << n, dtype=complex)
        amp[index] = 1.0
        return cls(n=n, amplitudes=amp)


@dataclass(frozen=True)
class NoiseModel:
    """Per-two-qubit-gate trajectory noise plus classical readout flips."""

    amp_damping_per_2q: float = 0.0
    depolarizing_per_2q: float = 0.0
    readout_flip_01: float = 0.0
    readout_flip_10: float = 0.0

    def __post_init__(self) -> None:
        for name in ("amp_damping_per_2q", "depolarizing_per_2q", "readout_flip_01", "readout_flip_10"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"{name}={value} is not a probability")

    @property
    def has_gate_noise(self) -> bool:
        return self.amp_damping_per_2q > 0.0 or self.depolarizing_per_2q > 0.0

    @property
    def has_readout_noise(self) -> bool:
        return self.readout_flip_01 > 0.0 or self.readout_flip_10 > 0.0


@dataclass(frozen=True)
class ShotResult:
    """s measured bitstrings in physical wire order, stored as basis indices."""

    n: int
    indices: np.ndarray
    s: int

    def __post_init__(self) -> None:
        if self.indices.shape != (self.s,):
            raise ValueError("index array must have length s")

    def bitstrings(self) -> list[str]:
        return [index_to_string(int(i), self.n) for i in self.indices]

    def to_text(self) -> str:
        """Plain-text dump, one bitstring per line."""
        return "\n".join(self.bitstrings()) + "\n"

    def hamming_weights(self) -> np.ndarray:
        return indices_to_bits(self.indices, self.n).sum(axis=1)


def _view1(batch: np.ndarray, n: int, q: int) -> np.ndarray:
    return batch.reshape(batch.shape[0], 1 << (n - 1 - q), 2, 1 << q)


def _view2(batch: np.ndarray, n: int, qa: int, qb: int) -> np.ndarray:
    hi, lo = (qa, qb) if qa > qb else (qb, qa)
    return batch.reshape(
        batch.shape[0], 1 << (n - 1 - hi), 2, 1 << (hi - 1 - lo), 2, 1 << lo
    )


def _apply_gate(batch: np.ndarray, n: int, gate: NativeGate) -> None:
    """Apply one native gate in place to a (B, 2^n) batch of statevectors."""
    if gate.kind == RZ:
        v = _view1(batch, n, gate.qubits[0])
        half = gate.angle / 2.0
        v[:, :, 0, :] *= np.exp(-1j * half)
        v[:, :, 1, :] *= np.exp(1j * half)
    elif gate.kind == RX90:
        v = _view1(batch, n, gate.qubits[0])
        a = v[:, :, 0, :].copy()
        b = v[:, :, 1, :]
        v[:, :, 0, :] = (a - 1j * b) * _SQRT_HALF
        v[:, :, 1, :] = (b - 1j * a) * _SQRT_HALF
    elif gate.kind == CPHASE:
        v = _view2(batch, n, *gate.qubits)
        v[:, :, 1, :, 1, :] *= np.exp(-1j * gate.angle)
    elif gate.kind == XY:
        v = _view2(batch, n, *gate.qubits)
        c = np.cos(2.0 * gate.angle)
        s = np.sin(2.0 * gate.angle)
        a = v[:, :, 0, :, 1, :].copy()
        b = v[:, :, 1, :, 0, :]
        v[:, :, 0, :, 1, :] = c * a - 1j * s * b
        v[:, :, 1, :, 0, :] = c * b - 1j * s * a
    else:
        raise ValueError(f"unknown gate kind {gate.kind!r}")


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Run all gates in order; norm is re-checked by the StateVector constructor."""
    if state.n != circuit.n:
        raise ValueError(f"state has n={state.n} but circuit has n={circuit.n}")
    batch = state.amplitudes[None, :].copy()
    for gate in circuit.gates:
        _apply_gate(batch, circuit.n, gate)
    return StateVector(n=circuit.n, amplitudes=batch[0])


def _sample_indices(probs: np.ndarray, s: int, rng: np.random.Generator) -> np.ndarray:
    cdf = np.cumsum(probs)
    cdf /= cdf[-1]
    draws = np.searchsorted(cdf, rng.random(s), side="right")
    return np.minimum(draws, probs.shape[0] - 1).astype(np.uint64)


def sample(state: StateVector, s: int, seed: int) -> ShotResult:
    """s i.i.d. computational-basis draws; deterministic per seed."""
    if s < 1:
        raise ValueError("shot count must be positive")
    rng = np.random.default_rng(seed & _SEED_MASK)
    probs = np.abs(state.amplitudes) ** 2
    return ShotResult(n=state.n, indices=_sample_indices(probs, s, rng), s=s)


def _damp_qubit(batch: np.ndarray, n: int, q: int, gamma: float, rng: np.random.Generator) -> None:
    """Amplitude-damping trajectory step: jump to |0> with probability gamma*p1."""
    v = _view1(batch, n, q)
    v0 = v[:, :, 0, :]
    v1 = v[:, :, 1, :]
    p1 = np.einsum("bhl,bhl->b", v1, v1.conj()).real
    np.clip(p1, 0.0, 1.0, out=p1)
    jump = rng.random(batch.shape[0]) < gamma * p1
    any_jump = bool(jump.any())
    # no-jump Kraus scaling applied batch-wide; jump rows get scale 1 and are
    # rebuilt below (few rows, so the fixup stays cheap)
    norm = np.sqrt(np.maximum(1.0 - gamma * p1, 1e-300))
    s0 = 1.0 / norm
    s1 = np.sqrt(1.0 - gamma) / norm
    if any_jump:
        s0[jump] = 1.0
        s1[jump] = 1.0
    v0 *= s0[:, None, None]
    v1 *= s1[:, None, None]
    if any_jump:
        scale = 1.0 / np.sqrt(p1[jump])
        v0[jump] = v1[jump] * scale[:, None, None]
        v1[jump] = 0.0


def _depolarize_qubit(batch: np.ndarray, n: int, q: int, prob: float, rng: np.random.Generator) -> None:
    """With probability prob, apply a uniformly random Pauli from {X, Y, Z}."""
    hit = rng.random(batch.shape[0]) < prob
    choice = rng.integers(0, 3, size=batch.shape[0])
    if not hit.any():
        return
    v = _view1(batch, n, q)
    rows = hit & (choice == 0)
    if rows.any():
        tmp = v[rows, :, 0, :].copy()
        v[rows, :, 0, :] = v[rows, :, 1, :]
        v[rows, :, 1, :] = tmp
    rows = hit & (choice == 1)
    if rows.any():
        tmp = v[rows, :, 0, :].copy()
        v[rows, :, 0, :] = -1j * v[rows, :, 1, :]
        v[rows, :, 1, :] = 1j * tmp
    rows = hit & (choice == 2)
    if rows.any():
        v[rows, :, 1, :] *= -1.0


def _readout_flips(indices: np.ndarray, n: int, noise: NoiseModel, rng: np.random.Generator) -> np.ndarray:
    bits = indices_to_bits(indices, n)
    draws = rng.random(bits.shape)
    flips = np.where(bits == 0, draws < noise.readout_flip_01, draws < noise.readout_flip_10)
    return bits_to_indices(bits ^ flips.astype(np.uint8))


def run_noisy(circuit: Circuit, noise: NoiseModel, s: int, seed: int) -> ShotResult:
    """Sample s shots under trajectory noise, one trajectory per shot.

    After each two-qubit gate, each touched qubit (in gate order) suffers
    amplitude damping and then a random-Pauli kick; readout flips are applied
    classically at the end. With zero gate noise this reduces exactly to the
    noiseless statevector path and matches sample() draw for draw.
    """
    if s < 1:
        raise ValueError("shot count must be positive")
    n = circuit.n
    rng = np.random.default_rng(seed & _SEED_MASK)
    if not noise.has_gate_noise:
        state = apply_circuit(StateVector.zero_state(n), circuit)
        indices = _sample_indices(np.abs(state.amplitudes) ** 2, s, rng)
        if noise.has_readout_noise:
            indices = _readout_flips(indices, n, noise, rng)
        return ShotResult(n=n, indices=indices, s=s)

    dim = 1 << n
    batch_cap = max(1, min(s, _BATCH_AMPLITUDES // dim))
    gamma = noise.amp_damping_per_2q
    p_dep = noise.depolarizing_per_2q
    collected = np.empty(s, dtype=np.uint64)
    for start in range(0, s, batch_cap):
        size = min(batch_cap, s - start)
        batch = np.zeros((size, dim), dtype=complex)
        batch[:, 0] = 1.0
        for gate in circuit.gates:
            _apply_gate(batch, n, gate)
            if gate.kind in (CPHASE, XY):
                for q in gate.qubits:
                    if gamma > 0.0:
                        _damp_qubit(batch, n, q, gamma, rng)
                    if p_dep > 0.0:
                        _depolarize_qubit(batch, n, q, p_dep, rng)
        probs = np.abs(batch) ** 2
        cdf = np.cumsum(probs, axis=1)
        cdf /= cdf[:, -1:]
        draws = (cdf < rng.random((size, 1))).sum(axis=1)
        collected[start:start + size] = np.minimum(draws, dim - 1)
    if noise.has_readout_noise:
        collected = _readout_flips(collected, n, noise, rng)
    return ShotResult(n=n, indices=collected, s=s)


def logical_statevector(state: StateVector, qubit_map) -> np.ndarray:
    """Reorder amplitudes so index bit i is logical variable i (undoes qubit_map)."""
    # Amplitude of logical x lives at the physical index scattering bit i of x
    # onto wire qubit_map[i]; that scatter is the gather through the inverse map.
    var_of_wire = [0] * state.n
    for var, wire in enumerate(qubit_map):
        var_of_wire[wire] = var
    gather = permute_index_bits(np.arange(1 << state.n, dtype=np.uint64), var_of_wire)
    return state.amplitudes[gather.astype(np.intp)]


def state_fidelity(a: np.ndarray, b: np.ndarray) -> float:
    """|<a|b>| for normalized vectors: 1 means equal up to global phase."""
    return float(np.abs(np.vdot(a, b)))


def expectation(state: StateVector, instance: SKInstance, qubit_map) -> float:
    """Exact energy expectation, unpermuting measured wires through qubit_map."""
    if instance.n != state.n:
        raise ValueError(f"instance has n={instance.n} but state has n={state.n}")
    probs = np.abs(state.amplitudes) ** 2
    total = 0.0
    chunk = 1 << 20
    dim = 1 << state.n
    for startidx in range(0, dim, chunk):
        phys = np.arange(startidx, min(startidx + chunk, dim), dtype=np.uint64)
        logical = permute_index_bits(phys, qubit_map)
        total += float(probs[startidx:startidx + chunk] @ energies_for_indices(instance, logical))
    return total
