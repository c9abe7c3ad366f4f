"""Bitstring conventions and vectorized bit manipulation.

Conventions used throughout the package:
  * a basis-state index encodes qubit q as bit (index >> q) & 1,
    i.e. qubit 0 is the least significant bit;
  * textual bitstrings render qubit 0 leftmost, so index 1 on three
    qubits prints as "100";
  * bit arrays have shape (n,) with entry q holding the bit of qubit q.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


def index_to_string(index: int, n: int) -> str:
    """Render a basis-state index as a bitstring, qubit 0 leftmost."""
    return "".join(str((index >> q) & 1) for q in range(n))


def string_to_index(bits: str) -> int:
    index = 0
    for q, c in enumerate(bits):
        if c == "1":
            index |= 1 << q
        elif c != "0":
            raise ValueError(f"invalid bitstring character {c!r}")
    return index


def as_bit_array(x: str | Sequence[int] | Iterable[int], n: int | None = None) -> np.ndarray:
    """Coerce a bitstring (text or 0/1 sequence) to a uint8 array."""
    if isinstance(x, str):
        arr = np.array([int(c) for c in x], dtype=np.uint8)
    else:
        arr = np.asarray(list(x) if not isinstance(x, np.ndarray) else x, dtype=np.uint8)
    if arr.ndim != 1 or not np.all((arr == 0) | (arr == 1)):
        raise ValueError("bitstring must be a flat sequence of 0/1")
    if n is not None and arr.size != n:
        raise ValueError(f"bitstring length {arr.size} does not match n={n}")
    return arr


def indices_to_bits(indices: np.ndarray, n: int) -> np.ndarray:
    """Expand basis indices of shape (m,) into a (m, n) bit array."""
    indices = np.asarray(indices, dtype=np.uint64)
    shifts = np.arange(n, dtype=np.uint64)
    return ((indices[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8)


def bits_to_indices(bits: np.ndarray) -> np.ndarray:
    """Pack a (m, n) bit array back into basis indices."""
    bits = np.asarray(bits, dtype=np.uint64)
    shifts = np.arange(bits.shape[1], dtype=np.uint64)
    return (bits << shifts[None, :]).sum(axis=1)


def permute_index_bits(indices: np.ndarray, wire_of_bit: Sequence[int]) -> np.ndarray:
    """Gather bit ``wire_of_bit[i]`` of each index into bit ``i`` of the result.

    Used to undo a circuit's logical-to-physical qubit map: with
    ``wire_of_bit = qubit_map`` the result indexes logical bitstrings.
    """
    indices = np.asarray(indices, dtype=np.uint64)
    out = np.zeros_like(indices)
    one = np.uint64(1)
    for i, wire in enumerate(wire_of_bit):
        out |= ((indices >> np.uint64(wire)) & one) << np.uint64(i)
    return out
