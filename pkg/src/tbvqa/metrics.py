"""Evaluation quantities: approximation ratios, tail estimators, renormalized
ratios, uniform-random baselines, and the ordering-vs-angle spread analysis.

Approximation ratios are always computed against exact ground energies and
from un-permuted bitstrings; `energies_from_shots` applies the qubit-map
inverse before any cost evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitops import permute_index_bits
from .ising import SKInstance, energies_for_indices, exact_spectrum
from .simulator import ShotResult

# Log-spaced tail sizes matching the evaluation axis of the tail plots.
TAIL_GRID = (1, 2, 5, 10, 20, 50, 100, 200, 500, 1000)

_SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class EnergySamples:
    """Measured energies of one trial, sorted ascending."""

    energies: np.ndarray
    s: int

    def __post_init__(self) -> None:
        if self.energies.shape != (self.s,) or self.s < 1:
            raise ValueError("energies must be a non-empty length-s array")
        if np.any(np.diff(self.energies) < 0):
            raise ValueError("energies must be sorted ascending")

    @classmethod
    def from_unsorted(cls, energies) -> "EnergySamples":
        arr = np.sort(np.asarray(energies, dtype=np.int64))
        return cls(energies=arr, s=arr.shape[0])


def energies_from_shots(instance: SKInstance, shots: ShotResult, qubit_map) -> EnergySamples:
    """Exact energies of sampled bitstrings after undoing the wire permutation."""
    logical = permute_index_bits(shots.indices, qubit_map)
    return EnergySamples.from_unsorted(energies_for_indices(instance, logical))


def sample_mean(samples: EnergySamples) -> float:
    return float(samples.energies.mean())


def tail_mean(samples: EnergySamples, s_tilde: int) -> float:
    """Mean of the s_tilde lowest energies; s_tilde = s is the standard estimator."""
    if not (1 <= s_tilde <= samples.s):
        raise ValueError(f"s_tilde must be in [1, {samples.s}], got {s_tilde}")
    return float(samples.energies[:s_tilde].mean())


def approx_ratio(mean_energy: float, c_min: float) -> float:
    """mean_energy / c_min; 1 is optimal, negative means the wrong sign.

    c_min is the exact ground energy of one instance, or an ensemble mean
    when averaging across instances.
    """
    if c_min >= 0:
        raise ValueError("c_min must be negative")
    return mean_energy / c_min


def renormalized_ratio(r_exp: float, r_random: float) -> float:
    """(r_exp - r_random) / (1 - r_random): positive iff better than random."""
    if r_random == 1:
        raise ValueError("r_random = 1 leaves nothing to renormalize against")
    return (r_exp - r_random) / (1.0 - r_random)


def tail_curve(samples: EnergySamples, c_min: int, grid=TAIL_GRID) -> list[tuple[int, float]]:
    """Approximation ratio of the tail estimator at each grid size <= s."""
    return [
        (s_tilde, approx_ratio(tail_mean(samples, s_tilde), c_min))
        for s_tilde in grid
        if s_tilde <= samples.s
    ]


@dataclass(frozen=True)
class RandomBaseline:
    """Uniform-sampling reference: grand-mean AR, best-of-reps AR, tail curve."""

    mean_ar: float
    best_ar: float
    tail_curve: tuple[tuple[int, float], ...]


def random_baseline(
    instance: SKInstance,
    s: int,
    reps: int,
    seed: int,
    c_min: int | None = None,
    grid=TAIL_GRID,
) -> RandomBaseline:
    """Draw reps independent batches of s uniform bitstrings.

    best_ar takes the repetition with the lowest mean energy (the fair
    comparison against a best-of-t trial search); the tail curve averages the
    per-repetition tail estimators.
    """
    if s < 1 or reps < 1:
        raise ValueError("require s >= 1 and reps >= 1")
    if c_min is None:
        c_min = exact_spectrum(instance).c_min
    rng = np.random.default_rng(seed & _SEED_MASK)
    indices = rng.integers(0, 1 << instance.n, size=(reps, s), dtype=np.uint64)
    energies = energies_for_indices(instance, indices.reshape(-1)).reshape(reps, s)
    energies.sort(axis=1)
    mean_ar = approx_ratio(float(energies.mean()), c_min)
    best_ar = approx_ratio(float(energies.mean(axis=1).min()), c_min)
    curve = tuple(
        (s_tilde, approx_ratio(float(energies[:, :s_tilde].mean(axis=1).mean()), c_min))
        for s_tilde in grid
        if s_tilde <= s
    )
    return RandomBaseline(mean_ar=mean_ar, best_ar=best_ar, tail_curve=curve)


@dataclass(frozen=True)
class SpreadSummary:
    delta_max_over_orderings: float
    delta_max_over_angles: float


def spread_analysis(trial_grid) -> SpreadSummary:
    """Mean max-min spreads of a complete (ordering x angle-set) value grid.

    Rows index gate orderings, columns index angle sets. The ordering spread
    varies the ordering at a fixed angle set (then averages over angle sets);
    the angle spread is the transpose statistic.
    """
    grid = np.asarray(trial_grid, dtype=float)
    if grid.ndim != 2 or grid.size == 0 or not np.all(np.isfinite(grid)):
        raise ValueError("trial grid must be a complete 2-D array of finite values")
    over_orderings = float((grid.max(axis=0) - grid.min(axis=0)).mean())
    over_angles = float((grid.max(axis=1) - grid.min(axis=1)).mean())
    return SpreadSummary(
        delta_max_over_orderings=over_orderings,
        delta_max_over_angles=over_angles,
    )
