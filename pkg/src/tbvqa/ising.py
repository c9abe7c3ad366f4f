"""Sherrington-Kirkpatrick instances: generation, evaluation, exact spectra,
and bitflip (spin-reversal) transforms.

Energies are plain Python/numpy 64-bit integers throughout; couplings are
signed 8-bit. The spin convention is z_i = 1 - 2*x_i, i.e. bit 0 maps to
spin +1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from .bitops import as_bit_array, index_to_string

# Exhaustive enumeration is exact but exponential; above this size the
# spectrum oracle refuses instead of approximating.
ENUMERATION_LIMIT = 26

_SEED_MASK = (1 << 64) - 1

# Chunk size (in table entries) for streaming enumeration.
_ENUM_CHUNK = 1 << 22


class OracleUnavailableError(RuntimeError):
    """Raised when an exact ground-state value is requested but not computable."""


@dataclass(frozen=True)
class SKInstance:
    """Fully-connected +-1 Ising instance over n spins.

    ``couplings`` maps each ordered pair (i, j) with i < j to a coupling in
    {-1, +1}; ``seed`` records the generator seed for provenance.
    """

    n: int
    couplings: dict[tuple[int, int], int]
    seed: int

    def __post_init__(self) -> None:
        expected = self.n * (self.n - 1) // 2
        if len(self.couplings) != expected:
            raise ValueError(f"expected {expected} couplings, got {len(self.couplings)}")
        for (i, j), value in self.couplings.items():
            if not (0 <= i < j < self.n):
                raise ValueError(f"coupling key ({i}, {j}) is not an ordered pair below n")
            if value not in (-1, 1):
                raise ValueError(f"coupling ({i}, {j}) = {value} is not in {{-1, +1}}")

    @cached_property
    def matrix(self) -> np.ndarray:
        """Symmetric (n, n) int8 coupling matrix with zero diagonal."""
        m = np.zeros((self.n, self.n), dtype=np.int8)
        for (i, j), value in self.couplings.items():
            m[i, j] = value
            m[j, i] = value
        m.setflags(write=False)
        return m


@dataclass(frozen=True)
class SpectrumSummary:
    """Exact extremes of the energy spectrum with one minimizing bitstring."""

    c_min: int
    c_max: int
    argmin: str

    def __post_init__(self) -> None:
        if self.c_min > self.c_max:
            raise ValueError("c_min exceeds c_max")


@dataclass(frozen=True)
class BitflipMask:
    """Length-n binary mask b defining the transform J'_ij = J_ij * (-1)^(b_i + b_j)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("mask bits must be 0/1")

    @classmethod
    def zeros(cls, n: int) -> "BitflipMask":
        return cls(bits=(0,) * n)

    @classmethod
    def from_string(cls, bits: str) -> "BitflipMask":
        return cls(bits=tuple(int(c) for c in bits))

    def as_string(self) -> str:
        return "".join(str(b) for b in self.bits)


def generate_sk(n: int, seed: int) -> SKInstance:
    """Draw every coupling as an independent fair +-1; deterministic per seed."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = np.random.default_rng(seed & _SEED_MASK)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    draws = rng.integers(0, 2, size=len(pairs)) * 2 - 1
    couplings = {pair: int(v) for pair, v in zip(pairs, draws)}
    return SKInstance(n=n, couplings=couplings, seed=seed)


def cost(instance: SKInstance, x) -> int:
    """Energy sum_{i<j} J_ij z_i z_j of bitstring x under z = 1 - 2x."""
    bits = as_bit_array(x, instance.n)
    z = (1 - 2 * bits.astype(np.int64))
    j = instance.matrix.astype(np.int64)
    return int(z @ j @ z) // 2


def energies_for_indices(instance: SKInstance, indices: np.ndarray) -> np.ndarray:
    """Vectorized exact energies for an array of basis-state indices."""
    indices = np.asarray(indices, dtype=np.uint64)
    n = instance.n
    j = instance.matrix.astype(np.int64)
    shifts = np.arange(n, dtype=np.uint64)
    out = np.empty(indices.shape[0], dtype=np.int64)
    chunk = max(1, _ENUM_CHUNK // max(n, 1))
    for start in range(0, indices.shape[0], chunk):
        idx = indices[start:start + chunk]
        bits = ((idx[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.int64)
        z = 1 - 2 * bits
        out[start:start + chunk] = np.einsum("bi,ij,bj->b", z, j, z) // 2
    return out


def _half_split(instance: SKInstance) -> tuple[int, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Precompute the low/high-half spin tables used by enumeration.

    Returns (nl, z_low, z_high, within_low, within_high) where within_* are the
    per-index energies of the couplings internal to each half.
    """
    n = instance.n
    nl = n // 2
    j = instance.matrix.astype(np.int64)

    def half_spins(nbits: int) -> np.ndarray:
        idx = np.arange(1 << nbits, dtype=np.uint64)
        bits = ((idx[:, None] >> np.arange(nbits, dtype=np.uint64)) & np.uint64(1)).astype(np.int64)
        return 1 - 2 * bits

    z_low = half_spins(nl)
    z_high = half_spins(n - nl)
    j_low = j[:nl, :nl]
    j_high = j[nl:, nl:]
    within_low = np.einsum("bi,ij,bj->b", z_low, j_low, z_low) // 2
    within_high = np.einsum("bi,ij,bj->b", z_high, j_high, z_high) // 2
    return nl, z_low, z_high, within_low, within_high


def exact_spectrum(instance: SKInstance, limit: int = ENUMERATION_LIMIT) -> SpectrumSummary:
    """Exhaustively enumerate all 2^n energies (split-half streaming).

    Exact by construction; raises OracleUnavailableError above `limit` rather
    than ever approximating.
    """
    n = instance.n
    if n > limit:
        raise OracleUnavailableError(
            f"exact spectrum needs exhaustive enumeration; n={n} exceeds limit {limit}"
        )
    nl, z_low, z_high, within_low, within_high = _half_split(instance)
    # Cross couplings between halves, staged for float64 BLAS; all values are
    # small integers so the arithmetic stays exact.
    j_cross = instance.matrix.astype(np.float64)[nl:, :nl]
    z_low_f = z_low.astype(np.float64)
    z_high_f = z_high.astype(np.float64)

    best_min = None
    best_max = None
    argmin_index = 0
    cols = z_low.shape[0]
    chunk = max(1, _ENUM_CHUNK // cols)
    for start in range(0, z_high.shape[0], chunk):
        zh = z_high_f[start:start + chunk]
        table = (zh @ j_cross) @ z_low_f.T
        table += within_high[start:start + chunk, None]
        table += within_low[None, :]
        flat = np.argmin(table)
        lo = table.reshape(-1)[flat]
        hi = table.max()
        if best_min is None or lo < best_min:
            best_min = lo
            b, a = divmod(int(flat), cols)
            argmin_index = a + ((start + b) << nl)
        if best_max is None or hi > best_max:
            best_max = hi
    return SpectrumSummary(
        c_min=int(round(best_min)),
        c_max=int(round(best_max)),
        argmin=index_to_string(argmin_index, n),
    )


def full_energy_table(instance: SKInstance, limit: int = 20) -> np.ndarray:
    """Energies of all 2^n bitstrings indexed by basis-state index."""
    n = instance.n
    if n > limit:
        raise OracleUnavailableError(f"full energy table caps at n={limit}, got n={n}")
    nl, z_low, z_high, within_low, within_high = _half_split(instance)
    j_cross = instance.matrix.astype(np.float64)[nl:, :nl]
    table = (z_high.astype(np.float64) @ j_cross) @ z_low.astype(np.float64).T
    table += within_high[:, None]
    table += within_low[None, :]
    # Row b, column a corresponds to index a + (b << nl), which is C-order ravel.
    return np.asarray(np.round(table), dtype=np.int64).reshape(-1)


def apply_bitflip(instance: SKInstance, mask: BitflipMask) -> SKInstance:
    """Re-sign couplings by the mask; a change of basis that preserves the spectrum."""
    if len(mask.bits) != instance.n:
        raise ValueError(f"mask length {len(mask.bits)} does not match n={instance.n}")
    couplings = {
        (i, j): value * (-1 if (mask.bits[i] + mask.bits[j]) % 2 else 1)
        for (i, j), value in instance.couplings.items()
    }
    return SKInstance(n=instance.n, couplings=couplings, seed=instance.seed)


def zero_state_ratio(instance: SKInstance, c_min: int) -> float:
    """Approximation ratio of the all-zeros bitstring, cost(0...0) / c_min."""
    if c_min >= 0:
        raise ValueError("c_min must be negative for a meaningful ratio")
    return cost(instance, "0" * instance.n) / c_min


def search_bitflips(
    instance: SKInstance,
    num_masks: int,
    seed: int,
    spectrum: SpectrumSummary | None = None,
) -> list[tuple[BitflipMask, float]]:
    """Rank random bitflip masks (plus the identity mask) by zero-state ratio.

    The zero-state cost of the transformed instance equals the original cost
    evaluated at the mask itself, so no transformed instances are built.
    A request of 2^n or more masks switches to exhaustive enumeration.
    Sorted by ratio descending; deterministic for a fixed seed.
    """
    if spectrum is None:
        spectrum = exact_spectrum(instance)
    n = instance.n
    shifts = np.arange(n, dtype=np.uint64)
    if num_masks >= (1 << n):
        indices = np.arange(1 << n, dtype=np.uint64)
        all_bits = ((indices[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8)
    else:
        rng = np.random.default_rng(seed & _SEED_MASK)
        drawn = rng.integers(0, 2, size=(num_masks, n), dtype=np.uint8)
        all_bits = np.vstack([np.zeros((1, n), dtype=np.uint8), drawn])
        indices = (all_bits.astype(np.uint64) << shifts[None, :]).sum(axis=1)
    ratios = energies_for_indices(instance, indices) / spectrum.c_min
    ranked = sorted(
        (
            (BitflipMask(bits=tuple(int(b) for b in row)), float(r))
            for row, r in zip(all_bits, ratios)
        ),
        key=lambda pair: -pair[1],
    )
    return ranked


def to_json_dict(instance: SKInstance, spectrum: SpectrumSummary | None = None) -> dict:
    rows = [[i, j, instance.couplings[(i, j)]] for (i, j) in sorted(instance.couplings)]
    payload: dict = {"n": instance.n, "seed": instance.seed, "couplings": rows}
    if spectrum is not None:
        payload["c_min"] = spectrum.c_min
        payload["c_max"] = spectrum.c_max
        payload["argmin"] = spectrum.argmin
    return payload


def from_json_dict(payload: dict) -> tuple[SKInstance, SpectrumSummary | None]:
    couplings = {(int(i), int(j)): int(v) for i, j, v in payload["couplings"]}
    instance = SKInstance(n=int(payload["n"]), couplings=couplings, seed=int(payload["seed"]))
    spectrum = None
    if "c_min" in payload:
        spectrum = SpectrumSummary(
            c_min=int(payload["c_min"]),
            c_max=int(payload["c_max"]),
            argmin=str(payload["argmin"]),
        )
    return instance, spectrum


def save_instance(path: str | Path, instance: SKInstance, spectrum: SpectrumSummary | None = None) -> None:
    """Write the canonical JSON form; byte-stable for fixed input."""
    text = json.dumps(to_json_dict(instance, spectrum), indent=2) + "\n"
    Path(path).write_text(text)


def load_instance(path: str | Path) -> tuple[SKInstance, SpectrumSummary | None]:
    return from_json_dict(json.loads(Path(path).read_text()))
